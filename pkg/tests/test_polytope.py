from fractions import Fraction

import pytest

from toric_contact import analyze_cone, corpus
from toric_contact.cone import ConeSpec
from toric_contact.polytope import (
    h_vector_from_f,
    normalize,
    slice_polytope,
    smoothness_check,
    upper_half_certificate,
)

import oracle

F = Fraction


def vertex_set(P):
    return {tuple(v) for v in P.vertices}


def test_certificates():
    sq = ConeSpec(3, ((1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)))
    assert upper_half_certificate(sq) == [F(1, 2)] * 4
    assert upper_half_certificate(ConeSpec(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))) is None
    assert upper_half_certificate(ConeSpec(3, ((1, 0, 0), (-1, 1, 0), (0, -1, 1)))) == [1, 1, 1]


def test_normalize_orthant():
    res = normalize(ConeSpec(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert res.u == [1, 1, 1] and res.k == 1
    assert res.D == [[1, -1, 0], [0, 1, -1], [0, 0, 1]]
    assert res.transformed_normals == ((1, 0, 0), (-1, 1, 0), (0, -1, 1))


def test_normalize_square_keeps_identity():
    res = normalize(ConeSpec(3, ((1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1))))
    assert res.u == [0, 0, 1] and res.D == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("name", ["orthant3", "orthant4", "square", "cube", "hexagon", "prism", "lens"])
def test_normalize_is_idempotent_and_certified(cones, name):
    res = normalize(cones[name])
    assert oracle.det(res.D) in (1, -1)
    again = normalize(res.cone(cones[name]))
    assert again.D == [[int(i == j) for j in range(cones[name].n)] for i in range(cones[name].n)]
    assert upper_half_certificate(res.cone(cones[name])) is not None


def test_slice_triangle():
    P = slice_polytope(((1, 0, 0), (-1, 1, 0), (0, -1, 1)))
    assert vertex_set(P) == {(0, 0), (0, 1), (1, 1)}


def test_slice_square_and_cube():
    P = slice_polytope(((1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)))
    assert vertex_set(P) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    cube = slice_polytope(corpus.load_bundled("cube").normals)
    assert len(cube.vertices) == 8
    assert vertex_set(cube) == {(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)}


@pytest.mark.parametrize("name, nonfaces", [
    ("orthant3", [{1, 2, 3}]),
    ("square", [{1, 3}, {2, 4}]),
    ("cube", [{1, 4}, {2, 5}, {3, 6}]),
])
def test_minimal_nonfaces(cones, name, nonfaces):
    a = analyze_cone(cones[name])
    got = sorted(sorted(i + 1 for i in S) for S in a.nerve.minimal_nonfaces)
    assert got == sorted(sorted(S) for S in nonfaces)


@pytest.mark.parametrize("name", ["orthant3", "orthant4", "square", "cube", "hexagon", "prism", "lens", "nondelzant"])
def test_nerve_matches_brute_force(cones, name):
    a = analyze_cone(cones[name])
    faces, nonfaces = oracle.slice_faces(a.normalization.transformed_normals)
    assert set(a.nerve.faces) == faces
    assert set(a.nerve.minimal_nonfaces) == set(nonfaces)


@pytest.mark.parametrize("f, d, h", [
    ((1, 3, 3), 2, [1, 1, 1]),
    ((1, 4, 4), 2, [1, 2, 1]),
    ((1, 6, 12, 8), 3, [1, 3, 3, 1]),
])
def test_h_vector_from_f(f, d, h):
    assert h_vector_from_f(f, d) == h


@pytest.mark.parametrize("name", ["orthant3", "orthant4", "square", "cube", "hexagon", "prism"])
def test_f_vector_satisfies_euler_relation(cones, name):
    a = analyze_cone(cones[name])
    f = a.nerve.f_vector
    d = a.cone.n - 1
    # faces of dimension j of the polytope <-> nerve faces of size d - j
    assert sum((-1) ** (d - size) * f[size] for size in range(1, d + 1)) == 1 - (-1) ** d


def test_smoothness_of_square():
    rep = smoothness_check(slice_polytope(((1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1))))
    assert rep.delzant and rep.truncated_primitive and rep.ok


def test_non_delzant_triangle():
    rep = smoothness_check(slice_polytope(((1, 0, 0), (0, 1, 0), (-1, -2, 3))))
    assert not rep.delzant
    bad = [v for v in rep.violations if v.kind == "vertex"]
    assert [(v.facets, v.value) for v in bad] == [((0, 2), -2)]


def test_truncated_normal_not_primitive():
    rep = smoothness_check(slice_polytope(((2, 0, 1), (0, 1, 0), (-1, 0, 1), (0, -1, 1))))
    assert not rep.truncated_primitive
    assert any(v.kind == "normal" and v.facets == (0,) and v.value == 2 for v in rep.violations)


def test_nondelzant_corpus_messages(cones):
    a = analyze_cone(cones["nondelzant"])
    assert a.is_good and not a.is_smooth
    assert {v.describe() for v in a.smoothness.violations} == {
        "vertex (0, 1/2) on facets {1,3}: normals have determinant -2",
        "vertex (0, -1/2) on facets {1,5}: normals have determinant 2",
    }


@pytest.mark.parametrize("name", ["square", "cube", "hexagon", "lens"])
def test_nerve_invariant_under_twisting(cones, name):
    base = analyze_cone(cones[name]).nerve
    for _, tw in corpus.twisted_variants(cones[name], 3, seed=7):
        assert analyze_cone(tw).nerve == base

"""Moving a cone into the upper half space and slicing it.

The slice at x_n = 1 is a polytope P in R^(n-1); its facets are indexed like
the cone's, and its combinatorics (the nerve) drives the ring presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

from . import lattice
from .cone import ConeSpec


class NotStrictlyConvexError(ValueError):
    pass


class UnboundedSliceError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Upper half space


def _extreme_rays(normals: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Primitive extreme rays of {x : <x, v_i> >= 0} for a pointed cone."""
    rays = set()
    for S in combinations(range(len(normals)), n - 1):
        rows = [list(normals[i]) for i in S]
        ker = lattice.saturated_kernel(rows, n)
        if len(ker) != 1:
            continue
        r = ker[0]
        for sign in (1, -1):
            cand = [sign * a for a in r]
            if all(sum(a * b for a, b in zip(cand, v)) >= 0 for v in normals):
                rays.add(tuple(cand))
    return [list(r) for r in sorted(rays)]


def _nonnegative_combination(
    normals: Sequence[Sequence[int]], target: Sequence[Fraction], n: int
) -> Optional[list[Fraction]]:
    """Some lambda >= 0 with sum lambda_i v_i = target, via basic solutions."""
    m = len(normals)
    for S in combinations(range(m), n):
        A = [[normals[i][r] for i in S] for r in range(n)]
        sol = lattice.solve_rational(A, target)
        if sol is None or any(x < 0 for x in sol):
            continue
        lam = [Fraction(0)] * m
        for i, x in zip(S, sol):
            lam[i] = x
        return lam
    return None


def upper_half_certificate(cone: ConeSpec) -> Optional[list[Fraction]]:
    """Positive k_i with sum k_i v_i = e_n, or None if no such k exists.

    Such k exist exactly when the cone minus its apex lies in x_n > 0.  When
    the normals already sum to a positive multiple of e_n the uniform
    certificate is returned.
    """
    n, V = cone.n, cone.normals
    if lattice.rank([list(v) for v in V]) < n:
        return None
    s = [sum(v[j] for v in V) for j in range(n)]
    if all(a == 0 for a in s[:-1]) and s[-1] > 0:
        return [Fraction(1, s[-1])] * cone.m
    rays = _extreme_rays(V, n)
    if not rays or any(r[-1] <= 0 for r in rays):
        return None
    # e_n - eps * s stays inside cone(v) for eps below every ray's slack.
    eps = min(Fraction(r[-1], sum(a * b for a, b in zip(s, r))) for r in rays) / 2
    target = [-eps * a for a in s]
    target[-1] += 1
    lam = _nonnegative_combination(V, target, n)
    if lam is None:  # pragma: no cover - excluded by the ray test
        return None
    return [eps + x for x in lam]


@dataclass(frozen=True)
class NormalizationResult:
    D: list[list[int]]
    transformed_normals: tuple[tuple[int, ...], ...]
    u: list[int]
    k: int
    positive_coefficients: list[Fraction]

    def cone(self, original: ConeSpec) -> ConeSpec:
        return ConeSpec(original.n, self.transformed_normals, original.name)


def normalize(cone: ConeSpec) -> NormalizationResult:
    """Apply D in SL(n, Z) taking the primitive direction of sum v_i to e_n.

    After this the normals sum to k e_n, so (1/k, ..., 1/k) certifies that
    the transformed cone sits in the upper half space.
    """
    if lattice.rank([list(v) for v in cone.normals]) < cone.n:
        raise NotStrictlyConvexError("cone is not strictly convex (normals do not span)")
    s = [sum(v[j] for v in cone.normals) for j in range(cone.n)]
    if not any(s):
        raise NotStrictlyConvexError("normals sum to zero: the cone has empty interior")
    u, k = lattice.primitive_part(s)
    D = lattice.complete_to_unimodular(u)
    new = tuple(tuple(lattice.matvec(D, v)) for v in cone.normals)
    coeffs = [Fraction(1, k)] * cone.m
    total = [sum(c * v[j] for c, v in zip(coeffs, new)) for j in range(cone.n)]
    assert total == [0] * (cone.n - 1) + [1]
    return NormalizationResult(D, new, u, k, coeffs)


# ---------------------------------------------------------------------------
# The slice polytope


@dataclass(frozen=True)
class SlicePolytope:
    """P = {x in R^(n-1) : <x, w_i> >= eta_i} with w_i the truncated normals."""

    truncated_normals: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    vertex_facets: tuple[frozenset[int], ...]

    @property
    def dimension(self) -> int:
        return len(self.truncated_normals[0])

    @property
    def m(self) -> int:
        return len(self.truncated_normals)

    def is_simple(self) -> bool:
        return all(len(f) == self.dimension for f in self.vertex_facets)

    def is_facet(self, i: int) -> bool:
        """Whether inequality i touches P in a face of codimension one."""
        pts = [w for w, F in zip(self.vertices, self.vertex_facets) if i in F]
        if len(pts) < self.dimension:
            return False
        base = pts[0]
        diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
        return lattice.rational_rank(diffs) == self.dimension - 1


def slice_polytope(normals: Sequence[Sequence[int]]) -> SlicePolytope:
    """Intersect a normalized cone with x_n = 1 and enumerate vertices.

    Every (n-1)-subset of facet hyperplanes is solved exactly; feasible
    solutions are the vertices.  Facet membership is exact equality.
    """
    n = len(normals[0])
    k = n - 1
    W = tuple(tuple(v[:k]) for v in normals)
    eta = tuple(-v[k] for v in normals)
    if lattice.rank([list(w) for w in W], k) < k:
        raise UnboundedSliceError("truncated normals do not span: slice is unbounded")
    s = [sum(w[j] for w in W) for j in range(k)]
    if any(s) and upper_half_certificate(ConeSpec(n, tuple(map(tuple, normals)))) is None:
        raise UnboundedSliceError("cone is not in the upper half space: slice is unbounded")
    found: dict[tuple[Fraction, ...], frozenset[int]] = {}
    for S in combinations(range(len(W)), k):
        x = lattice.solve_rational([W[i] for i in S], [eta[i] for i in S])
        if x is None:
            continue
        key = tuple(x)
        if key in found:
            continue
        slack = [sum(a * b for a, b in zip(x, w)) - e for w, e in zip(W, eta)]
        if all(t >= 0 for t in slack):
            found[key] = frozenset(i for i, t in enumerate(slack) if t == 0)
    if not found:
        raise UnboundedSliceError("slice polytope is empty")
    verts = sorted(found)
    P = SlicePolytope(W, eta, tuple(verts), tuple(found[v] for v in verts))
    if k > 0:
        diffs = [[a - b for a, b in zip(v, verts[0])] for v in verts[1:]]
        if lattice.rational_rank(diffs) < k:
            raise UnboundedSliceError("slice polytope is not full-dimensional")
    return P


def slice_cone(norm: NormalizationResult) -> SlicePolytope:
    return slice_polytope(norm.transformed_normals)


# ---------------------------------------------------------------------------
# Nerve


@dataclass(frozen=True)
class FaceComplex:
    """Facet index sets with nonempty common intersection in P."""

    m: int
    maximal_faces: tuple[frozenset[int], ...]
    minimal_nonfaces: tuple[frozenset[int], ...]

    def is_face(self, S) -> bool:
        S = frozenset(S)
        return any(S <= F for F in self.maximal_faces) or not S

    @cached_property
    def faces(self) -> tuple[frozenset[int], ...]:
        out = {frozenset()}
        for F in self.maximal_faces:
            items = sorted(F)
            for r in range(1, len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return tuple(sorted(out, key=lambda f: (len(f), sorted(f))))

    def iter_faces(self) -> Iterator[frozenset[int]]:
        return iter(self.faces)

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts by cardinality, starting with the empty face."""
        top = max(len(F) for F in self.faces)
        counts = [0] * (top + 1)
        for F in self.faces:
            counts[len(F)] += 1
        return tuple(counts)


def nerve(P: SlicePolytope) -> FaceComplex:
    """Faces are subsets of vertex facet-sets; non-faces found level by level.

    A candidate of size s is built only from faces of size s-1, so any set
    containing a known non-face is never visited.
    """
    maximal = []
    for F in sorted(set(P.vertex_facets), key=lambda f: (-len(f), sorted(f))):
        if not any(F < G for G in maximal):
            maximal.append(F)
    cx = FaceComplex(P.m, tuple(sorted(maximal, key=sorted)), ())
    faces = set(cx.faces)
    nonfaces = []
    level = [frozenset([i]) for i in range(P.m)]
    # Singletons are always faces of a minimal description; a redundant
    # inequality shows up as a singleton non-face.
    nonfaces.extend(S for S in level if S not in faces)
    prev = [S for S in level if S in faces]
    while prev:
        cands = set()
        prev_set = set(prev)
        for S in prev:
            for j in range(max(S) + 1, P.m):
                T = S | {j}
                if all(T - {i} in prev_set for i in T):
                    cands.add(T)
        nonfaces.extend(T for T in cands if T not in faces)
        prev = [T for T in cands if T in faces]
    nonfaces.sort(key=lambda f: (len(f), sorted(f)))
    return FaceComplex(P.m, cx.maximal_faces, tuple(nonfaces))


def h_vector_from_f(f: Sequence[int], d: int) -> list[int]:
    """h-vector of a (d-1)-dimensional complex from f_{-1}..f_{d-1}.

    Uses sum_i f_{i-1} (t-1)^(d-i) = sum_j h_j t^(d-j).
    """
    f = list(f) + [0] * (d + 1 - len(f))
    h = []
    for j in range(d + 1):
        h.append(sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1)))
    return h


# ---------------------------------------------------------------------------
# Smoothness criterion


@dataclass(frozen=True)
class SmoothnessViolation:
    kind: str  # "vertex" or "normal"
    facets: tuple[int, ...]
    value: int
    vertex: Optional[tuple[Fraction, ...]] = None

    def describe(self) -> str:
        if self.kind == "normal":
            i = self.facets[0] + 1
            return f"truncated normal {i} is not primitive (gcd {self.value})"
        pt = "(" + ", ".join(str(c) for c in self.vertex) + ")"
        fs = "{" + ",".join(str(i + 1) for i in self.facets) + "}"
        if self.kind == "not-simple":
            return f"vertex {pt} lies on {len(self.facets)} facets {fs}"
        return f"vertex {pt} on facets {fs}: normals have determinant {self.value}"


@dataclass(frozen=True)
class SmoothnessReport:
    delzant: bool
    truncated_primitive: bool
    violations: tuple[SmoothnessViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return self.delzant and self.truncated_primitive


def smoothness_check(P: SlicePolytope) -> SmoothnessReport:
    """Delzant condition at each vertex plus primitivity of truncated normals."""
    bad: list[SmoothnessViolation] = []
    delzant = True
    for w, F in zip(P.vertices, P.vertex_facets):
        fs = tuple(sorted(F))
        if len(fs) != P.dimension:
            delzant = False
            bad.append(SmoothnessViolation("not-simple", fs, len(fs), w))
            continue
        det = lattice.determinant([list(P.truncated_normals[i]) for i in fs])
        if abs(det) != 1:
            delzant = False
            bad.append(SmoothnessViolation("vertex", fs, det, w))
    primitive = True
    for i, v in enumerate(P.truncated_normals):
        g = lattice.vector_gcd(v)
        if g != 1:
            primitive = False
            bad.append(SmoothnessViolation("normal", (i,), g))
    return SmoothnessReport(delzant, primitive, tuple(bad))

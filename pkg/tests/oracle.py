"""Brute-force reference computations that share no code with the package.

Everything here works on the full monomial space of a polynomial ring and
leans on sympy for ranks and Smith forms, so agreement with the package is
real evidence rather than a restatement.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations, combinations_with_replacement
from math import comb, gcd

import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ


def monomials(m: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(m), d):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def determinantal_divisors(A: list[list[int]]) -> list[int]:
    """Nonzero invariant factors via gcds of k x k minors."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = sympy.Matrix(A) if rows else None
    prev, out = 1, []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, int(M.extract(list(r), list(c)).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _relation_matrix(m, nonfaces, forms, d):
    """Rows span the degree-d part of <x^S for S in nonfaces, forms>."""
    basis = monomials(m, d)
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for e in basis:
        if any(all(e[i] >= 1 for i in S) for S in nonfaces):
            row = [0] * len(basis)
            row[index[e]] = 1
            rows.append(row)
    if d >= 1:
        for f in forms:
            for e in monomials(m, d - 1):
                row = [0] * len(basis)
                for i, c in enumerate(f):
                    if c:
                        t = list(e)
                        t[i] += 1
                        row[index[tuple(t)]] += c
                rows.append(row)
    return basis, rows


def quotient_rank(m, nonfaces, forms, d) -> int:
    basis, rows = _relation_matrix(m, nonfaces, forms, d)
    if not rows:
        return len(basis)
    return len(basis) - sympy.Matrix(rows).rank()


def quotient_torsion(m, nonfaces, forms, d) -> list[int]:
    """Torsion orders of the degree-d part of Z[x]/<monomials, forms>."""
    basis, rows = _relation_matrix(m, nonfaces, forms, d)
    if not rows:
        return []
    S = smith_normal_form(sympy.Matrix(rows), domain=ZZ)
    diag = [abs(int(S[i, i])) for i in range(min(S.shape))]
    return [x for x in diag if x > 1]


def face_count_hilbert(faces, d: int) -> int:
    """Face-ring Hilbert function: one C(d-1, |F|-1) per nonempty face."""
    if d == 0:
        return 1
    return sum(comb(d - 1, len(F) - 1) for F in faces if F)


def h_from_faces(faces, dim: int) -> list[int]:
    f = [0] * (dim + 1)
    for F in faces:
        f[len(F)] += 1
    return [
        sum((-1) ** (j - i) * comb(dim - i, j - i) * f[i] for i in range(j + 1))
        for j in range(dim + 1)
    ]


def contact_betti(m, nonfaces, normals) -> list[int]:
    """Rational Betti numbers of the contact manifold by rank counting.

    With Q = Q[x]/<I, J_1..J_{n-1}> and e = J_n, coker of e in degree d+1 is
    the degree-(d+1) part of Q[x]/<I, J_1..J_n>, and ker in degree d follows
    from rank-nullity.
    """
    n = len(normals[0])
    forms = [[v[j] for v in normals] for j in range(n)]
    q = [quotient_rank(m, nonfaces, forms[:-1], d) for d in range(n + 1)]
    full = [quotient_rank(m, nonfaces, forms, d) for d in range(n + 1)]
    betti = [0] * (2 * n)
    betti[0] = full[0]
    for d in range(n):
        image = q[d + 1] - full[d + 1]
        betti[2 * d + 1] = q[d] - image
        if 2 * d + 2 < 2 * n:
            betti[2 * d + 2] = full[d + 1]
    return betti


def det(A) -> int:
    return int(sympy.Matrix(A).det())


def vector_gcd(v) -> int:
    return reduce(gcd, v, 0)


def slice_faces(normals) -> tuple[set, list]:
    """Faces and minimal non-faces of the slice at height 1, from scratch.

    ``normals`` must already sit in the upper half space.  A facet set is a
    face when it is contained in the tight set of some vertex.
    """
    n = len(normals[0])
    m = len(normals)
    A = [list(v[:-1]) for v in normals]
    b = [-v[-1] for v in normals]
    tight_sets = set()
    for S in combinations(range(m), n - 1):
        M = sympy.Matrix([A[i] for i in S])
        if M.det() == 0:
            continue
        w = M.LUsolve(sympy.Matrix([b[i] for i in S]))
        vals = [sum(sympy.Rational(A[i][j]) * w[j] for j in range(n - 1)) for i in range(m)]
        if all(vals[i] >= b[i] for i in range(m)):
            tight_sets.add(frozenset(i for i in range(m) if vals[i] == b[i]))
    faces = {frozenset(c) for T in tight_sets for r in range(len(T) + 1)
             for c in combinations(sorted(T), r)}
    nonfaces = []
    for r in range(1, m + 1):
        for c in combinations(range(m), r):
            s = frozenset(c)
            if s not in faces and all(s - {i} in faces for i in s):
                nonfaces.append(s)
    return faces, nonfaces

"""Exact integer lattice routines.

Matrices are lists of rows of Python ints, so there is no overflow at any
size.  Everything here is a pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Matrix = list[list[int]]


class LatticeError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == S`` with U, V unimodular and S diagonal.

    The inverses of U and V are carried along because downstream code needs
    them to lift cokernel generators back to the original coordinates.
    """

    U: Matrix
    S: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.V)))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def divisors(self) -> list[int]:
        """The nonzero elementary divisors, in divisibility order."""
        return [d for d in self.diagonal if d != 0]


def smith_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SnfResult:
    """Smith normal form of an integer matrix.

    Pivot rule: the nonzero entry of least absolute value in the active block,
    ties broken by (row, col).  ``ncols`` is only needed for matrices with no
    rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S = [list(map(int, row)) for row in A]
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    # Row operations act on U (left) and U_inv (right); column operations
    # act on V (right) and V_inv (left).
    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for row in U_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        if q == 0:
            return
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for row in U_inv:
            row[src] -= q * row[dst]

    def add_col(src, dst, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        V_inv[src] = [a - q * b for a, b in zip(V_inv[src], V_inv[dst])]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        for row in U_inv:
            row[i] = -row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = S[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    dirty |= S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    dirty |= S[t][j] != 0
            if dirty:
                continue
            # Pivot row and column are clear; enforce divisibility.
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < m and t < n and S[t][t] < 0:
            negate_row(t)
        if best is None:
            break

    return SnfResult(U=U, S=S, V=V, U_inv=U_inv, V_inv=V_inv)


def elementary_divisors(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[int]:
    return smith_normal_form(A, ncols).divisors


def rank(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return smith_normal_form(A, ncols).rank


# ---------------------------------------------------------------------------
# Hermite normal form (row style)


def hermite_rows(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped.  Each pivot is positive and the entries above it
    are reduced into ``[0, pivot)``.
    """
    H = [list(map(int, r)) for r in rows if any(r)]
    n = len(H[0]) if H else (ncols or 0)
    out: Matrix = []
    col = 0
    while H and col < n:
        live = [r for r in H if r[col]]
        if not live:
            col += 1
            continue
        rest = [r for r in H if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for k, prev in enumerate(out):
            q = prev[col] // piv[col]
            if q:
                out[k] = [a - q * b for a, b in zip(prev, piv)]
        out.append(piv)
        H = rest
        col += 1
    return out


def pivot_columns(H: Sequence[Sequence[int]]) -> list[int]:
    return [next(j for j, a in enumerate(r) if a) for r in H]


def solve_in_hermite(H: Sequence[Sequence[int]], x: Sequence[int]) -> Optional[list[int]]:
    """Integer coefficients c with ``sum c_i H_i == x``, or None."""
    x = list(x)
    coeffs = []
    for row, p in zip(H, pivot_columns(H)):
        q, r = divmod(x[p], row[p])
        if r:
            return None
        coeffs.append(q)
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return coeffs if not any(x) else None


# ---------------------------------------------------------------------------
# Primitive vectors, summands, kernels


def primitive_part(v: Sequence[int]) -> tuple[list[int], int]:
    """Split ``v`` as ``k * u`` with ``u`` primitive and ``k > 0``."""
    k = vector_gcd(v)
    if k == 0:
        raise LatticeError("zero vector has no primitive part")
    return [a // k for a in v], k


def is_primitive(v: Sequence[int]) -> bool:
    return vector_gcd(v) == 1


def is_direct_summand(vectors: Sequence[Sequence[int]], n: Optional[int] = None) -> bool:
    """True iff the vectors are independent and span a direct summand of Z^n."""
    if not vectors:
        return True
    n = len(vectors[0]) if n is None else n
    for i, v in enumerate(vectors):
        if len(v) != n:
            raise LatticeError(f"vector {i + 1} has length {len(v)}, expected {n}")
    divisors = elementary_divisors(vectors)
    return len(divisors) == len(vectors) and all(d == 1 for d in divisors)


def complete_to_unimodular(u: Sequence[int]) -> Matrix:
    """A matrix D with det D = 1 and D @ u = e_n for a primitive u.

    In dimension one the only option for u = (-1) is D = (-1), of
    determinant -1.

    Works down the vector pairing adjacent entries: a 2x2 determinant-one
    block moves gcd(u_i, u_{i+1}) into slot i+1 and zeroes slot i.
    """
    n = len(u)
    g = vector_gcd(u)
    if g != 1:
        raise LatticeError(f"vector {list(u)} is not primitive (gcd {g})")
    if n == 1:
        return [[u[0]]]
    D = identity(n)
    w = list(u)
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a == 0 and b >= 0:
            continue
        d, x, y = extended_gcd(a, b)
        block = [[b // d, -a // d], [x, y]]
        ri, rj = D[i], D[i + 1]
        D[i] = [block[0][0] * p + block[0][1] * q for p, q in zip(ri, rj)]
        D[i + 1] = [block[1][0] * p + block[1][1] * q for p, q in zip(ri, rj)]
        w[i], w[i + 1] = 0, d
    # w[-1] is gcd(u) = 1 by construction, so det D = 1 already.
    return D


def saturated_kernel(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Basis of the integer kernel {x : A x = 0}, in row Hermite form.

    Kernel columns of V from the Smith form already span a direct summand;
    the Hermite pass only makes the basis canonical.
    """
    n = len(A[0]) if A else (ncols or 0)
    res = smith_normal_form(A, n)
    r = res.rank
    basis = [[res.V[i][j] for i in range(n)] for j in range(r, n)]
    return hermite_rows(basis, n)


def inverse_unimodular(A: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular matrix."""
    res = smith_normal_form(A)
    if res.divisors != [1] * len(A):
        raise LatticeError("matrix is not unimodular")
    # U A V = I  =>  A^{-1} = V U
    return matmul(res.V, res.U)


# ---------------------------------------------------------------------------
# Rational helpers (exact, via fractions)


def _row_reduce(M: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [a * inv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rational_rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    _, pivots = _row_reduce([[Fraction(a) for a in row] for row in A])
    return len(pivots)


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """The unique solution of a square nonsingular system A x = b, else None."""
    n = len(A)
    aug = [[Fraction(a) for a in row] + [Fraction(c)] for row, c in zip(A, b)]
    M, pivots = _row_reduce(aug)
    if pivots != list(range(n)):
        return None
    return [M[i][n] for i in range(n)]

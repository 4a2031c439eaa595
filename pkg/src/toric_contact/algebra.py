"""Graded quotients of Z[x_1..x_m] by a monomial ideal plus linear forms.

Each graded piece is computed on its own: the degree-d standard monomials
(those outside the monomial ideal) span a free module, the linear forms times
degree-(d-1) standard monomials span the relation lattice, and an integer
normal form of that lattice yields a basis, a reduction map and torsion.

Monomials are exponent tuples.  Within a degree they are listed in
descending lexicographic order (graded lex with x_1 > ... > x_m), so the
leading term of a relation is its largest monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Optional, Sequence

from . import lattice
from .polytope import FaceComplex, h_vector_from_f

Monomial = tuple[int, ...]


def monomials_of_degree(m: int, d: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(m), d):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def format_monomial(e: Monomial, names: Optional[Sequence[str]] = None) -> str:
    parts = []
    for i, k in enumerate(e):
        if k:
            name = names[i] if names else f"x{i + 1}"
            parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts) or "1"


def format_polynomial(terms: Sequence[tuple[int, Monomial]], names=None) -> str:
    out = ""
    for c, mono in terms:
        if c == 0:
            continue
        body = format_monomial(mono, names)
        mag = abs(c)
        piece = body if mag == 1 and body != "1" else (f"{mag}" if body == "1" else f"{mag}*{body}")
        if not out:
            out = piece if c > 0 else "-" + piece
        else:
            out += (" + " if c > 0 else " - ") + piece
    return out or "0"


@dataclass(frozen=True)
class RingPresentation:
    """Z[x_1..x_m] / <monomial generators, linear generators>."""

    m: int
    monomial_generators: tuple[Monomial, ...] = ()
    linear_generators: tuple[tuple[int, ...], ...] = ()

    def with_linear(self, linear: Sequence[Sequence[int]]) -> "RingPresentation":
        return RingPresentation(self.m, self.monomial_generators, tuple(tuple(l) for l in linear))

    def in_monomial_ideal(self, e: Monomial) -> bool:
        return any(divides(g, e) for g in self.monomial_generators)

    def describe(self) -> dict:
        return {
            "variables": self.m,
            "monomial_generators": [format_monomial(g) for g in self.monomial_generators],
            "linear_generators": [
                format_polynomial([(c, _unit(self.m, i)) for i, c in enumerate(l)])
                for l in self.linear_generators
            ],
        }


def _unit(m: int, i: int) -> Monomial:
    return tuple(int(j == i) for j in range(m))


def stanley_reisner(nerve: FaceComplex) -> tuple[Monomial, ...]:
    """One squarefree monomial per minimal non-face, in lex order."""
    gens = [tuple(int(i in S) for i in range(nerve.m)) for S in nerve.minimal_nonfaces]
    return tuple(sorted(gens, key=lambda e: (sum(e), tuple(-a for a in e))))


def linear_forms(normals: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """J_k = sum_i v_ik x_i for k = 1..n, as coefficient vectors."""
    n = len(normals[0])
    return [tuple(v[k] for v in normals) for k in range(n)]


# ---------------------------------------------------------------------------
# Degree pieces


@dataclass
class DegreePiece:
    """One graded piece: ``free coordinates`` are w.r.t. ``basis``.

    ``basis`` vectors live in the coordinates of ``monomials`` (the degree-d
    standard monomials).  When the Hermite form of the relation lattice has
    unit pivots the basis is the set of non-leading monomials and reduction
    is plain substitution; otherwise it comes from a Smith form.
    """

    degree: int
    monomials: list[Monomial]
    basis: list[list[int]]
    divisors: list[int]  # torsion orders > 1
    monomial_basis: bool
    _hermite: list[list[int]] = field(default_factory=list, repr=False)
    _keep: list[int] = field(default_factory=list, repr=False)
    _free_rows: list[list[int]] = field(default_factory=list, repr=False)
    _torsion_rows: list[list[int]] = field(default_factory=list, repr=False)

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {e: i for i, e in enumerate(self.monomials)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        """Free-part coordinates of a degree-d polynomial given on monomials."""
        if self.monomial_basis:
            x = list(vec)
            for row in self._hermite:
                p = next(j for j, a in enumerate(row) if a)
                c = x[p]
                if c:
                    x = [a - c * b for a, b in zip(x, row)]
            return [x[j] for j in self._keep]
        return lattice.matvec(self._free_rows, vec)

    def torsion_coordinates(self, vec: Sequence[int]) -> list[int]:
        vals = lattice.matvec(self._torsion_rows, vec)
        return [v % d for v, d in zip(vals, self.divisors)]

    def lift(self, coords: Sequence[int]) -> list[int]:
        out = [0] * len(self.monomials)
        for c, b in zip(coords, self.basis):
            if c:
                out = [a + c * x for a, x in zip(out, b)]
        return out

    def vector(self, poly: dict[Monomial, int]) -> list[int]:
        """Monomial coordinates of a polynomial; terms in the ideal drop out."""
        out = [0] * len(self.monomials)
        for e, c in poly.items():
            i = self.index.get(e)
            if i is not None:
                out[i] += c
        return out

    def basis_terms(self) -> list[list[tuple[int, Monomial]]]:
        return [[(c, self.monomials[i]) for i, c in enumerate(b) if c] for b in self.basis]


class GradedQuotient:
    """Degreewise integral structure of a presentation, computed on demand."""

    def __init__(self, pres: RingPresentation):
        self.pres = pres
        self._pieces: dict[int, DegreePiece] = {}
        self._standard: dict[int, list[Monomial]] = {}

    def standard_monomials(self, d: int) -> list[Monomial]:
        if d not in self._standard:
            self._standard[d] = [
                e for e in monomials_of_degree(self.pres.m, d)
                if not self.pres.in_monomial_ideal(e)
            ]
        return self._standard[d]

    def relations(self, d: int) -> list[list[int]]:
        """Linear generators times degree-(d-1) standard monomials."""
        if d == 0 or not self.pres.linear_generators:
            return []
        target = {e: i for i, e in enumerate(self.standard_monomials(d))}
        rows = []
        for mu in self.standard_monomials(d - 1):
            for form in self.pres.linear_generators:
                row = [0] * len(target)
                for i, c in enumerate(form):
                    if c:
                        e = list(mu)
                        e[i] += 1
                        j = target.get(tuple(e))
                        if j is not None:
                            row[j] += c
                if any(row):
                    rows.append(row)
        return rows

    def piece(self, d: int) -> DegreePiece:
        if d not in self._pieces:
            self._pieces[d] = self._build(d)
        return self._pieces[d]

    def _build(self, d: int) -> DegreePiece:
        monos = self.standard_monomials(d)
        N = len(monos)
        H = lattice.hermite_rows(self.relations(d), N)
        pivots = lattice.pivot_columns(H)
        if all(row[p] == 1 for row, p in zip(H, pivots)):
            pset = set(pivots)
            keep = [j for j in range(N) if j not in pset]
            basis = [[int(i == j) for i in range(N)] for j in keep]
            return DegreePiece(d, monos, basis, [], True, _hermite=H, _keep=keep)
        # General case: columns of the relation matrix are the relations.
        R = lattice.transpose(H, N)
        res = lattice.smith_normal_form(R, len(H))
        r = res.rank
        diag = res.diagonal
        torsion_idx = [i for i in range(r) if diag[i] > 1]
        free_idx = list(range(r, N))
        basis = [[res.U_inv[row][j] for row in range(N)] for j in free_idx]
        return DegreePiece(
            d,
            monos,
            basis,
            [diag[i] for i in torsion_idx],
            False,
            _free_rows=[res.U[i] for i in free_idx],
            _torsion_rows=[res.U[i] for i in torsion_idx],
        )

    def rank(self, d: int) -> int:
        return self.piece(d).rank

    def torsion(self, d: int) -> list[int]:
        return self.piece(d).divisors

    def hilbert(self, up_to: int) -> list[int]:
        return [self.rank(d) for d in range(up_to + 1)]

    # polynomial arithmetic on standard-monomial coordinates

    def multiply(self, d1: int, v1: Sequence[int], d2: int, v2: Sequence[int]) -> list[int]:
        """Product of two polynomials given on standard monomials."""
        m1, m2 = self.standard_monomials(d1), self.standard_monomials(d2)
        target = self.piece(d1 + d2)
        out = [0] * len(target.monomials)
        idx = target.index
        for a, e in zip(v1, m1):
            if not a:
                continue
            for b, f in zip(v2, m2):
                if not b:
                    continue
                j = idx.get(tuple(x + y for x, y in zip(e, f)))
                if j is not None:
                    out[j] += a * b
        return out

    def multiply_linear(self, d: int, vec: Sequence[int], form: Sequence[int]) -> list[int]:
        return self.multiply(d, vec, 1, self._linear_vector(form))

    def _linear_vector(self, form: Sequence[int]) -> list[int]:
        monos = self.standard_monomials(1)
        idx = {e: i for i, e in enumerate(monos)}
        out = [0] * len(monos)
        for i, c in enumerate(form):
            j = idx.get(_unit(self.pres.m, i))
            if j is not None:
                out[j] += c
        return out


def quotient_basis(pres: RingPresentation, d: int) -> tuple[list[list[tuple[int, Monomial]]], list[int]]:
    """Basis polynomials of the free part in degree d, and torsion orders."""
    piece = GradedQuotient(pres).piece(d)
    return piece.basis_terms(), piece.divisors


# ---------------------------------------------------------------------------
# Combinatorial oracles


def face_ring_hilbert(nerve: FaceComplex, d: int) -> int:
    """Hilbert function of the face ring counted face by face."""
    if d == 0:
        return 1
    return sum(comb(d - 1, len(S) - 1) for S in nerve.faces if 0 < len(S) <= d)


def h_vector(nerve: FaceComplex, dim: Optional[int] = None) -> list[int]:
    """h-vector of the nerve; ``dim`` is the polytope dimension n-1."""
    f = nerve.f_vector
    d = len(f) - 1 if dim is None else dim
    return h_vector_from_f(f, d)


# ---------------------------------------------------------------------------
# Multiplication maps


@dataclass
class Cokernel:
    """Z^r / image, with generators lifted to the source coordinates.

    Coordinates of a class list the torsion components (reduced mod their
    orders) followed by the free components.
    """

    degree: int
    snf: lattice.SnfResult
    orders: list[int]  # order > 1 for torsion generators, 0 for free ones
    generators: list[list[int]]
    _rows: list[list[int]]

    @property
    def free_rank(self) -> int:
        return sum(1 for o in self.orders if o == 0)

    @property
    def torsion(self) -> list[int]:
        return [o for o in self.orders if o]

    def coordinates(self, vec: Sequence[int]) -> list[int]:
        vals = lattice.matvec(self._rows, vec)
        return [v % o if o else v for v, o in zip(vals, self.orders)]

    def lift(self, coords: Sequence[int]) -> list[int]:
        size = len(self.snf.U)
        out = [0] * size
        for c, g in zip(coords, self.generators):
            if c:
                out = [a + c * x for a, x in zip(out, g)]
        return out


def cokernel(matrix: Sequence[Sequence[int]], rows: int, cols: int, degree: int = 0) -> Cokernel:
    res = lattice.smith_normal_form(matrix, cols) if rows else lattice.smith_normal_form([], cols)
    diag = res.diagonal
    r = res.rank
    idx = [i for i in range(r) if diag[i] > 1] + list(range(r, rows))
    orders = [diag[i] if i < r else 0 for i in idx]
    gens = [[res.U_inv[row][i] for row in range(rows)] for i in idx]
    return Cokernel(degree, res, orders, gens, [res.U[i] for i in idx])


@dataclass
class DegreeMap:
    degree: int  # source degree
    matrix: list[list[int]]  # rank(d+1) x rank(d)
    kernel: list[list[int]]  # saturated, in source free coordinates
    cokernel: Cokernel  # of this map, living in degree d+1

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel)

    @property
    def image_rank(self) -> int:
        return self.cokernel.snf.rank


@dataclass
class MultiplicationMap:
    form: tuple[int, ...]
    maps: list[DegreeMap]
    base: Cokernel  # degree 0: nothing maps in

    def cokernel_at(self, d: int) -> Cokernel:
        return self.base if d == 0 else self.maps[d - 1].cokernel


def multiplication_matrix(Q: GradedQuotient, form: Sequence[int], d: int) -> list[list[int]]:
    src, dst = Q.piece(d), Q.piece(d + 1)
    cols = [dst.reduce(Q.multiply_linear(d, b, form)) for b in src.basis]
    return [[c[i] for c in cols] for i in range(dst.rank)]


def multiplication_map(Q: GradedQuotient, form: Sequence[int], top: int) -> MultiplicationMap:
    """Multiplication by a linear form from degree d to d+1, d = 0..top."""
    maps = []
    for d in range(top + 1):
        A = multiplication_matrix(Q, form, d)
        rows, cols = Q.rank(d + 1), Q.rank(d)
        ker = lattice.saturated_kernel(A, cols) if rows else [
            [int(i == j) for i in range(cols)] for j in range(cols)
        ]
        maps.append(DegreeMap(d, A, ker, cokernel(A, rows, cols, d + 1)))
    base = cokernel([[] for _ in range(Q.rank(0))], Q.rank(0), 0, 0)
    return MultiplicationMap(tuple(form), maps, base)

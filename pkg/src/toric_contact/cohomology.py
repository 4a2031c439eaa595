"""Equivariant and ordinary integral cohomology of good contact toric manifolds.

The contact manifold M is a circle bundle over the symplectic toric manifold
N of the slice polytope, with Euler class e = J_n.  Its cohomology is read
off multiplication by e on H*(N) = Z[x]/<I, J_1..J_{n-1}>:

    H^{2k+1}(M) = ker(e: H^{2k}(N) -> H^{2k+2}(N))
    H^{2k+2}(M) = coker(e: H^{2k}(N) -> H^{2k+2}(N))

Polynomial degree d corresponds to cohomological degree 2d on N.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import lattice
from .algebra import (
    Cokernel,
    GradedQuotient,
    MultiplicationMap,
    RingPresentation,
    face_ring_hilbert,
    format_polynomial,
    h_vector,
    linear_forms,
    multiplication_map,
    stanley_reisner,
)
from .cone import (
    BasicValidation,
    ConeSpec,
    GoodnessReport,
    goodness_check,
    validate_basic,
)
from .polytope import (
    FaceComplex,
    NormalizationResult,
    NotStrictlyConvexError,
    SlicePolytope,
    SmoothnessReport,
    UnboundedSliceError,
    nerve as build_nerve,
    normalize,
    slice_cone,
    smoothness_check,
)

log = logging.getLogger(__name__)


class ValidationError(ValueError):
    """The cone fails a hypothesis; ``analysis`` carries the evidence."""

    def __init__(self, message: str, analysis: "ConeAnalysis"):
        super().__init__(message)
        self.analysis = analysis


class NotGoodError(ValidationError):
    pass


class NotSmoothError(ValidationError):
    pass


# ---------------------------------------------------------------------------
# Validation pipeline


@dataclass
class ConeAnalysis:
    cone: ConeSpec
    basic: BasicValidation
    normalization: Optional[NormalizationResult] = None
    polytope: Optional[SlicePolytope] = None
    nerve: Optional[FaceComplex] = None
    goodness: Optional[GoodnessReport] = None
    smoothness: Optional[SmoothnessReport] = None
    errors: list[str] = field(default_factory=list)

    @property
    def normalized(self) -> ConeSpec:
        return self.normalization.cone(self.cone)

    @property
    def is_good(self) -> bool:
        return self.goodness is not None and self.goodness.is_good

    @property
    def is_smooth(self) -> bool:
        return self.smoothness is not None and self.smoothness.ok


def analyze_cone(cone: ConeSpec) -> ConeAnalysis:
    """Run normalization, slicing and every validation; never raises."""
    basic = validate_basic(cone)
    out = ConeAnalysis(cone, basic)
    if not basic.is_strictly_convex:
        out.errors.extend(basic.diagnostics)
        return out
    try:
        out.normalization = normalize(cone)
        out.polytope = slice_cone(out.normalization)
    except (NotStrictlyConvexError, UnboundedSliceError) as exc:
        out.errors.append(str(exc))
        return out
    out.basic = validate_basic(cone, out.polytope)
    out.nerve = build_nerve(out.polytope)
    out.goodness = goodness_check(cone, out.nerve, out.polytope, out.basic)
    out.smoothness = smoothness_check(out.polytope)
    out.errors.extend(out.basic.diagnostics)
    out.errors.extend(v.describe() for v in out.goodness.violations)
    return out


def require_good(cone: ConeSpec) -> ConeAnalysis:
    a = analyze_cone(cone)
    if not a.is_good:
        detail = "; ".join(a.errors) or "cone is not good"
        raise NotGoodError(f"not a strictly convex good cone: {detail}", a)
    return a


def require_smooth(a: ConeAnalysis, rational: bool) -> None:
    if a.is_smooth or rational:
        return
    detail = "; ".join(v.describe() for v in a.smoothness.violations)
    raise NotSmoothError(f"smoothness criterion fails: {detail}", a)


# ---------------------------------------------------------------------------
# Ring presentations


def face_presentation(a: ConeAnalysis) -> RingPresentation:
    return RingPresentation(a.cone.m, stanley_reisner(a.nerve))


def toric_presentation(a: ConeAnalysis, count: Optional[int] = None) -> RingPresentation:
    """<I, J_1..J_count> on the normalized normals; count defaults to n-1."""
    forms = linear_forms(a.normalization.transformed_normals)
    count = a.cone.n - 1 if count is None else count
    return face_presentation(a).with_linear(forms[:count])


def euler_form(a: ConeAnalysis) -> tuple[int, ...]:
    return tuple(linear_forms(a.normalization.transformed_normals)[-1])


@dataclass
class EquivariantResult:
    presentation: RingPresentation
    hilbert: list[int]
    face_hilbert: list[int]


def equivariant_cohomology(cone: ConeSpec, max_degree: Optional[int] = None,
                           analysis: Optional[ConeAnalysis] = None) -> EquivariantResult:
    """H_T(M) = Z[x]/I with I the Stanley-Reisner ideal of the slice."""
    a = analysis or require_good(cone)
    top = 2 * cone.n if max_degree is None else max_degree
    pres = face_presentation(a)
    Q = GradedQuotient(pres)
    return EquivariantResult(
        pres,
        Q.hilbert(top),
        [face_ring_hilbert(a.nerve, d) for d in range(top + 1)],
    )


@dataclass
class ToricResult:
    presentation: RingPresentation
    quotient: GradedQuotient
    ranks: list[int]  # degrees 0..n
    torsion: dict[int, list[int]]
    h_vector: list[int]
    rational: bool


def toric_cohomology(cone: ConeSpec, rational: bool = False,
                     analysis: Optional[ConeAnalysis] = None) -> ToricResult:
    """H*(N) = Z[x]/<I, J_1..J_{n-1}> for the toric manifold of the slice."""
    a = analysis or require_good(cone)
    require_smooth(a, rational)
    pres = toric_presentation(a)
    Q = GradedQuotient(pres)
    n = cone.n
    ranks = [Q.rank(d) for d in range(n + 1)]
    torsion = {d: Q.torsion(d) for d in range(n + 1) if Q.torsion(d)}
    return ToricResult(pres, Q, ranks, torsion, h_vector(a.nerve, n - 1), rational)


def partial_equivariant(cone: ConeSpec, r: int, max_degree: Optional[int] = None,
                        analysis: Optional[ConeAnalysis] = None) -> list[int]:
    """Ranks of Z[x]/<I, J_1..J_{k-r}>, the T^r-equivariant ring of N."""
    k = cone.n - 1
    if not 0 <= r <= k:
        raise ValueError(f"subtorus rank must lie in [0, {k}], got {r}")
    a = analysis or require_good(cone)
    top = 2 * cone.n if max_degree is None else max_degree
    return GradedQuotient(toric_presentation(a, k - r)).hilbert(top)


# ---------------------------------------------------------------------------
# Contact cohomology


@dataclass
class CheckRecord:
    name: str
    status: str  # "pass", "fail" or "not-applicable"
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class ContactCohomologyReport:
    analysis: ConeAnalysis
    rational: bool
    quotient: GradedQuotient  # Z[x]/<I, J~>
    even_quotient: GradedQuotient  # Z[x]/<I, J>
    rho: MultiplicationMap
    h: list[int]
    betti: list[int]
    torsion: dict[int, list[int]]
    odd_generators: dict[int, list[list[int]]]
    equivariant: EquivariantResult
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.analysis.cone.n

    def cokernel(self, d: int) -> Cokernel:
        """H^{2d}(M) as a cokernel in polynomial degree d."""
        return self.rho.cokernel_at(d)

    def polynomial(self, d: int, coords: Sequence[int]) -> str:
        piece = self.quotient.piece(d)
        vec = piece.lift(coords)
        return format_polynomial([(c, e) for c, e in zip(vec, piece.monomials) if c])

    @property
    def all_checks_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def contact_cohomology(cone: ConeSpec, rational: bool = False,
                       max_degree: Optional[int] = None,
                       analysis: Optional[ConeAnalysis] = None) -> ContactCohomologyReport:
    a = analysis or require_good(cone)
    require_smooth(a, rational)
    n = cone.n
    Q = GradedQuotient(toric_presentation(a))
    rho = multiplication_map(Q, euler_form(a), n - 1)
    betti = [0] * (2 * n)
    torsion: dict[int, list[int]] = {}
    odd: dict[int, list[list[int]]] = {}
    betti[0] = Q.rank(0)
    for k in range(n):
        step = rho.maps[k]
        betti[2 * k + 1] = step.kernel_rank
        odd[2 * k + 1] = step.kernel
        if 2 * k + 2 < 2 * n:
            betti[2 * k + 2] = step.cokernel.free_rank
            if step.cokernel.torsion and not rational:
                torsion[2 * k + 2] = step.cokernel.torsion
    report = ContactCohomologyReport(
        analysis=a,
        rational=rational,
        quotient=Q,
        even_quotient=GradedQuotient(toric_presentation(a, n)),
        rho=rho,
        h=h_vector(a.nerve, n - 1),
        betti=betti,
        torsion=torsion,
        odd_generators=odd,
        equivariant=equivariant_cohomology(cone, max_degree, a),
    )
    report.checks = consistency_checks(report)
    log.debug("contact cohomology of %s: betti %s", cone.name, betti)
    return report


# ---------------------------------------------------------------------------
# Ring and module structure


def even_representative(report: ContactCohomologyReport, d: int, coords: Sequence[int]) -> list[int]:
    """Free coordinates in H^{2d}(N) of a lift of a class of H^{2d}(M)."""
    return report.cokernel(d).lift(coords)


def even_product(report: ContactCohomologyReport, d1: int, c1: Sequence[int],
                 d2: int, c2: Sequence[int]) -> list[int]:
    """Product of two even classes, in cokernel coordinates of degree d1+d2."""
    d = d1 + d2
    if d > report.n - 1:
        return []
    Q = report.quotient
    v1 = Q.piece(d1).lift(even_representative(report, d1, c1))
    v2 = Q.piece(d2).lift(even_representative(report, d2, c2))
    prod = Q.piece(d).reduce(Q.multiply(d1, v1, d2, v2))
    return report.cokernel(d).coordinates(prod)


@dataclass
class EvenStructure:
    orders: dict[int, list[int]]  # per degree: 0 for free generators, else torsion order
    representatives: dict[int, list[str]]
    products: dict[tuple[int, int, int, int], list[int]]


def even_ring_structure(report: ContactCohomologyReport) -> EvenStructure:
    """Structure constants of H^even(M) on the cokernel generators."""
    n = report.n
    orders, reps = {}, {}
    for d in range(n):
        ck = report.cokernel(d)
        orders[d] = list(ck.orders)
        reps[d] = [report.polynomial(d, g) for g in ck.generators]
    products = {}
    for d1 in range(1, n):
        for d2 in range(d1, n - d1):
            for i in range(len(orders[d1])):
                for j in range(len(orders[d2])):
                    if d1 == d2 and j < i:
                        continue
                    c1 = [int(t == i) for t in range(len(orders[d1]))]
                    c2 = [int(t == j) for t in range(len(orders[d2]))]
                    products[(d1, i, d2, j)] = even_product(report, d1, c1, d2, c2)
    return EvenStructure(orders, reps, products)


class ModuleActionError(RuntimeError):
    pass


def odd_module_action(report: ContactCohomologyReport, even_degree: int,
                      even_vector: Sequence[int], odd_degree: int,
                      odd_coords: Sequence[int]) -> list[int]:
    """Multiply an odd class by an even one.

    ``even_vector`` is a representative in the free coordinates of
    H^{2d}(N); ``odd_degree`` is the cohomological degree 2k+1 and
    ``odd_coords`` are coefficients on the kernel basis there.  The result is
    given on the kernel basis in degree 2(d+k)+1.
    """
    k = (odd_degree - 1) // 2
    d = even_degree + k
    if 2 * d + 1 > 2 * report.n - 1:
        return []
    Q = report.quotient
    kernel = report.odd_generators[odd_degree]
    omega = [0] * Q.rank(k)
    for c, g in zip(odd_coords, kernel):
        omega = [a + c * x for a, x in zip(omega, g)]
    prod = Q.multiply(
        even_degree, Q.piece(even_degree).lift(even_vector), k, Q.piece(k).lift(omega)
    )
    y = Q.piece(d).reduce(prod)
    step = report.rho.maps[d]
    if any(lattice.matvec(step.matrix, y)):
        raise ModuleActionError("product is not annihilated by the Euler class")
    coeffs = lattice.solve_in_hermite(step.kernel, y)
    if coeffs is None:
        raise ModuleActionError("product is not in the span of the kernel basis")
    return coeffs


# ---------------------------------------------------------------------------
# Consistency checks


def _record(name: str, ok: bool, **evidence) -> CheckRecord:
    return CheckRecord(name, "pass" if ok else "fail", evidence)


def _lefschetz_ranks(report: ContactCohomologyReport) -> dict[int, tuple[int, int]]:
    n, Q, e = report.n, report.quotient, euler_form(report.analysis)
    out = {}
    for j in range((n - 1) // 2 + 1):
        power = n - 1 - 2 * j
        cols = []
        for b in Q.piece(j).basis:
            vec, deg = b, j
            for _ in range(power):
                vec = Q.piece(deg + 1).lift(Q.piece(deg + 1).reduce(Q.multiply_linear(deg, vec, e)))
                deg += 1
            cols.append(Q.piece(deg).reduce(vec))
        target = Q.rank(n - 1 - j)
        A = [[c[i] for c in cols] for i in range(target)]
        out[j] = (lattice.rational_rank(A) if A and cols else 0, report.h[j])
    return out


def consistency_checks(report: ContactCohomologyReport) -> list[CheckRecord]:
    """Evaluate every theorem-level identity on a computed report."""
    n, b, h, Q = report.n, report.betti, report.h, report.quotient
    integral = not report.rational
    checks = []

    checks.append(_record("H1-vanishing", b[1] == 0, b1=b[1]))

    window = [2 * k + 1 for k in range(n) if 1 <= 2 * k + 1 <= n - 1]
    checks.append(_record("odd-vanishing-window", all(b[i] == 0 for i in window),
                          degrees=window, betti=[b[i] for i in window]))

    even_window = [2 * k for k in range(n) if n <= 2 * k <= 2 * n - 2]
    checks.append(_record("even-rational-vanishing-window",
                          all(b[i] == 0 for i in even_window),
                          degrees=even_window, betti=[b[i] for i in even_window]))

    chi = sum((-1) ** i * x for i, x in enumerate(b))
    checks.append(_record("euler-characteristic", chi == 0, chi=chi))

    pd = all(b[i] == b[2 * n - 1 - i] for i in range(2 * n))
    checks.append(_record("poincare-duality", pd and b[0] == 1 and b[-1] == 1, betti=list(b)))

    hl = _lefschetz_ranks(report)
    checks.append(_record("hard-lefschetz", all(r == t for r, t in hl.values()),
                          ranks={str(j): list(v) for j, v in hl.items()}))

    checks.append(_record("h-vector-symmetry", h == h[::-1], h=list(h)))

    ranks = [Q.rank(d) for d in range(n + 1)]
    checks.append(_record("toric-ranks-match-h-vector", ranks == h + [0],
                          ranks=ranks, h=list(h)))
    checks.append(_record("top-degree-vanishing", Q.rank(n) == 0, rank=Q.rank(n)))

    if integral:
        tors = {d: Q.torsion(d) for d in range(n + 1) if Q.torsion(d)}
        checks.append(_record("toric-ring-torsion-free", not tors,
                              torsion={str(d): t for d, t in tors.items()}))
        summand = all(
            lattice.is_direct_summand(step.kernel, Q.rank(step.degree))
            for step in report.rho.maps
        )
        checks.append(_record("kernel-torsion-free", summand,
                              kernel_ranks=[s.kernel_rank for s in report.rho.maps]))
    else:
        for name in ("toric-ring-torsion-free", "kernel-torsion-free"):
            checks.append(CheckRecord(name, "not-applicable", {"mode": "rational"}))

    exact = []
    for step in report.rho.maps:
        d = step.degree
        lhs = Q.rank(d) - step.kernel_rank
        rhs = Q.rank(d + 1) - step.cokernel.free_rank
        exact.append([d, lhs, rhs])
    checks.append(_record("exactness-identity", all(l == r for _, l, r in exact), rows=exact))

    eq = report.equivariant
    checks.append(_record("equivariant-hilbert-matches-face-ring",
                          eq.hilbert == eq.face_hilbert,
                          hilbert=eq.hilbert, face_ring=eq.face_hilbert))

    E = report.even_quotient
    mismatch = []
    for d in range(n + 1):
        ck = report.cokernel(d)
        got = (ck.free_rank, ck.torsion)
        want = (E.rank(d), E.torsion(d))
        if integral and got != want or not integral and got[0] != want[0]:
            mismatch.append({"degree": d, "cokernel": list(got), "presentation": list(want)})
    checks.append(_record("even-presentation-agrees", not mismatch, mismatches=mismatch))

    odd_degrees = [i for i in range(1, 2 * n, 2) if b[i]]
    low = odd_degrees[0] if odd_degrees else None
    # A product of two nonzero odd classes lands in degree >= 2 * low.
    ok = low is None or 2 * low > 2 * n - 1
    checks.append(_record("odd-products-vanish", ok, lowest_odd_degree=low, top=2 * n - 1))

    return checks

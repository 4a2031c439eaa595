"""Input cones, their validation, and per-face stabilizer data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from . import lattice

if TYPE_CHECKING:
    from .polytope import FaceComplex, SlicePolytope


class ConeSpecError(ValueError):
    """A cone description that violates the input invariants.

    ``index`` is the 1-based normal index at fault, when there is one.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class ConeSpec:
    """The cone {x in R^n : <x, v_i> >= 0 for all i}.

    ``normals`` are the inward primitive normals v_1..v_m, which double as the
    characteristic vectors of the facets.  Indices are 0-based internally.
    """

    n: int
    normals: tuple[tuple[int, ...], ...]
    name: Optional[str] = None

    def __post_init__(self):
        normals = tuple(tuple(int(a) for a in v) for v in self.normals)
        object.__setattr__(self, "normals", normals)
        if self.n < 2:
            raise ConeSpecError(f"dimension must be at least 2, got {self.n}")
        if not normals:
            raise ConeSpecError("at least one normal is required")
        seen: dict[tuple[int, ...], int] = {}
        for i, v in enumerate(normals, start=1):
            if len(v) != self.n:
                raise ConeSpecError(
                    f"normal {i} has length {len(v)}, expected {self.n}", i
                )
            g = lattice.vector_gcd(v)
            if g == 0:
                raise ConeSpecError(f"normal {i} is zero", i)
            if g != 1:
                raise ConeSpecError(f"normal {i} not primitive (gcd {g})", i)
            if v in seen:
                raise ConeSpecError(
                    f"normal {i} duplicates normal {seen[v]}", i
                )
            seen[v] = i

    @property
    def m(self) -> int:
        return len(self.normals)

    def transformed(self, D: Sequence[Sequence[int]], name: Optional[str] = None) -> "ConeSpec":
        """The cone whose normals are D v_i (facet order preserved)."""
        return ConeSpec(
            self.n,
            tuple(tuple(lattice.matvec(D, v)) for v in self.normals),
            name if name is not None else self.name,
        )


# ---------------------------------------------------------------------------
# Basic validation


@dataclass(frozen=True)
class BasicValidation:
    is_minimal: Optional[bool]
    is_strictly_convex: bool
    normal_rank: int
    redundant: tuple[int, ...] = ()
    diagnostics: tuple[str, ...] = ()


def validate_basic(cone: ConeSpec, P: Optional["SlicePolytope"] = None) -> BasicValidation:
    """Strict convexity from the normal rank; minimality from the slice.

    Minimality is only decided when a slice polytope is supplied (it cannot
    be built for a cone with a lineality space), otherwise it is None.
    """
    r = lattice.rank([list(v) for v in cone.normals])
    strict = r == cone.n
    notes = []
    if not strict:
        notes.append(
            f"normal matrix has rank {r} < {cone.n}: the cone contains a line"
        )
    if P is None:
        return BasicValidation(None, strict, r, (), tuple(notes))
    redundant = tuple(i for i in range(cone.m) if not P.is_facet(i))
    for i in redundant:
        notes.append(f"inequality {i + 1} does not cut out a facet")
    return BasicValidation(not redundant, strict, r, redundant, tuple(notes))


# ---------------------------------------------------------------------------
# Goodness


@dataclass(frozen=True)
class Violation:
    face: frozenset[int]
    reason: str  # "not-simple" or "not-summand"
    divisors: tuple[int, ...] = ()

    def describe(self) -> str:
        face = "{" + ",".join(str(i + 1) for i in sorted(self.face)) + "}"
        if self.reason == "not-simple":
            return f"face {face}: vertex lies on {len(self.face)} facets (not simple)"
        divs = ",".join(map(str, self.divisors))
        return f"face {face}: normals not a direct summand, divisors ({divs})"


@dataclass(frozen=True)
class GoodnessReport:
    is_strictly_convex: bool
    is_minimal: Optional[bool]
    violations: tuple[Violation, ...] = ()
    faces_checked: int = 0

    @property
    def is_good(self) -> bool:
        return self.is_strictly_convex and bool(self.is_minimal) and not self.violations


def goodness_check(
    cone: ConeSpec,
    nerve: "FaceComplex",
    P: Optional["SlicePolytope"] = None,
    basic: Optional[BasicValidation] = None,
) -> GoodnessReport:
    """Check both goodness conditions on every proper face of the slice.

    Simplicity is read off the vertices (a face of codimension l lies on
    exactly l facets iff every vertex lies on exactly n-1); the summand
    condition is tested on each nonempty nerve face with fewer than n facets.
    The apex of the cone is never checked.
    """
    if basic is None:
        basic = validate_basic(cone, P)
    violations: list[Violation] = []
    if P is not None:
        for facets in sorted(set(P.vertex_facets), key=sorted):
            if len(facets) != cone.n - 1:
                violations.append(Violation(frozenset(facets), "not-simple"))
    checked = 0
    for face in nerve.iter_faces():
        if not 0 < len(face) < cone.n:
            continue
        checked += 1
        vecs = [list(cone.normals[i]) for i in sorted(face)]
        divisors = lattice.elementary_divisors(vecs)
        if len(divisors) != len(vecs) or any(d != 1 for d in divisors):
            violations.append(Violation(frozenset(face), "not-summand", tuple(divisors)))
    return GoodnessReport(
        basic.is_strictly_convex, basic.is_minimal, tuple(violations), checked
    )


# ---------------------------------------------------------------------------
# Stabilizers


@dataclass(frozen=True)
class StabilizerDescriptor:
    face: frozenset[int]
    dimension: int
    smoothness_divisors: tuple[int, ...] = field(default=())

    @property
    def is_smooth(self) -> bool:
        return all(d == 1 for d in self.smoothness_divisors) and self.dimension == len(self.face)


def stabilizer(cone: ConeSpec, face: Iterable[int], nerve: "FaceComplex") -> StabilizerDescriptor:
    """Rank and elementary divisors of the subtorus fixing points of a face.

    The subgroup is generated by the circles in the directions v_i for i in
    the face; its dimension is the rank of those normals, and it is
    connected exactly when all elementary divisors are 1.
    """
    face = frozenset(face)
    if face and not nerve.is_face(face):
        shown = "{" + ",".join(str(i + 1) for i in sorted(face)) + "}"
        raise ValueError(f"{shown} is not a face of the nerve")
    if not face:
        return StabilizerDescriptor(face, 0, ())
    res = lattice.smith_normal_form([list(cone.normals[i]) for i in sorted(face)])
    return StabilizerDescriptor(face, res.rank, tuple(res.divisors))


def all_stabilizers(cone: ConeSpec, nerve: "FaceComplex") -> list[StabilizerDescriptor]:
    return [stabilizer(cone, f, nerve) for f in nerve.iter_faces()]

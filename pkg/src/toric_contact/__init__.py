"""Exact cohomology of good contact toric manifolds from their moment cones."""

__version__ = "0.1.0"

from .cone import ConeSpec, ConeSpecError, goodness_check, stabilizer
from .cohomology import (
    CheckRecord,
    ContactCohomologyReport,
    NotGoodError,
    NotSmoothError,
    ValidationError,
    analyze_cone,
    consistency_checks,
    contact_cohomology,
    equivariant_cohomology,
    even_ring_structure,
    odd_module_action,
    partial_equivariant,
    toric_cohomology,
)
from .io import ConeFileError, load_cone, parse_cone
from .lattice import saturated_kernel, smith_normal_form
from .polytope import normalize, slice_polytope, smoothness_check

__all__ = [
    "CheckRecord",
    "ConeFileError",
    "ConeSpec",
    "ConeSpecError",
    "ContactCohomologyReport",
    "NotGoodError",
    "NotSmoothError",
    "ValidationError",
    "analyze_cone",
    "consistency_checks",
    "contact_cohomology",
    "equivariant_cohomology",
    "even_ring_structure",
    "goodness_check",
    "load_cone",
    "normalize",
    "odd_module_action",
    "parse_cone",
    "partial_equivariant",
    "saturated_kernel",
    "slice_polytope",
    "smith_normal_form",
    "smoothness_check",
    "stabilizer",
    "toric_cohomology",
]

"""Assemble pipeline results into plain, JSON-ready report documents.

All facet indices are shifted to 1-based here; cohomological degrees are
used as keys for the contact manifold (so H^4 torsion sits under "4").
"""

from __future__ import annotations

from typing import Any, Optional

from . import __version__
from .cohomology import (
    ConeAnalysis,
    ContactCohomologyReport,
    EquivariantResult,
    ToricResult,
    even_ring_structure,
)
from .cone import all_stabilizers
from .io import config_hash, cone_to_dict, to_jsonable


def _faces(faces) -> list[list[int]]:
    return [sorted(i + 1 for i in S) for S in faces]


def normalization_section(a: ConeAnalysis) -> Optional[dict]:
    norm = a.normalization
    if norm is None:
        return None
    return {
        "D": [list(r) for r in norm.D],
        "u": list(norm.u),
        "k": norm.k,
        "transformed_normals": [list(v) for v in norm.transformed_normals],
        "positive_coefficients": to_jsonable(norm.positive_coefficients),
    }


def validation_section(a: ConeAnalysis, rational: bool = False) -> dict:
    out: dict[str, Any] = {
        "strictly_convex": a.basic.is_strictly_convex,
        "minimal": a.basic.is_minimal,
        "normal_rank": a.basic.normal_rank,
        "redundant": [i + 1 for i in a.basic.redundant],
        "good": a.is_good,
        "violations": [],
        "smooth": a.is_smooth,
        "smoothness_violations": [],
        "accepted": accepted(a, rational),
        "errors": list(a.errors),
    }
    if not rational and a.smoothness is not None and not a.smoothness.ok:
        out["errors"] += [v.describe() for v in a.smoothness.violations]
    if a.goodness is not None:
        out["faces_checked"] = a.goodness.faces_checked
        out["violations"] = [
            {"face": sorted(i + 1 for i in v.face), "reason": v.reason,
             "divisors": list(v.divisors), "message": v.describe()}
            for v in a.goodness.violations
        ]
    if a.smoothness is not None:
        out["smoothness_violations"] = [
            {"kind": v.kind, "facets": [i + 1 for i in v.facets], "value": v.value,
             "vertex": to_jsonable(v.vertex), "message": v.describe()}
            for v in a.smoothness.violations
        ]
    if a.polytope is not None:
        out["slice"] = {
            "dimension": a.polytope.dimension,
            "vertices": to_jsonable(a.polytope.vertices),
            "vertex_facets": _faces(a.polytope.vertex_facets),
        }
    if a.nerve is not None:
        out["nerve"] = {
            "f_vector": list(a.nerve.f_vector),
            "minimal_nonfaces": _faces(a.nerve.minimal_nonfaces),
        }
    return out


def accepted(a: ConeAnalysis, rational: bool = False) -> bool:
    """Whether the cohomology pipeline may run in the given mode."""
    return a.is_good and (rational or a.is_smooth)


def equivariant_section(eq: EquivariantResult) -> dict:
    return {
        "generators": eq.presentation.describe(),
        "hilbert": list(eq.hilbert),
        "face_ring_hilbert": list(eq.face_hilbert),
    }


def toric_section(t: ToricResult) -> dict:
    return {
        "generators": t.presentation.describe(),
        "ranks": list(t.ranks),
        "torsion": {str(d): v for d, v in t.torsion.items()},
        "h_vector": list(t.h_vector),
    }


def contact_section(r: ContactCohomologyReport) -> dict:
    es = even_ring_structure(r)
    even = {
        str(2 * d): {"orders": es.orders[d], "representatives": es.representatives[d]}
        for d in sorted(es.orders)
    }
    products = [
        {"left": [2 * d1, i + 1], "right": [2 * d2, j + 1], "degree": 2 * (d1 + d2),
         "coordinates": coords}
        for (d1, i, d2, j), coords in sorted(es.products.items())
    ]
    odd = {
        str(deg): [r.polynomial((deg - 1) // 2, row) for row in rows]
        for deg, rows in sorted(r.odd_generators.items()) if rows
    }
    return {
        "mode": "rational" if r.rational else "integral",
        "euler_form": list(r.rho.form),
        "betti": list(r.betti),
        "torsion": None if r.rational else {str(d): v for d, v in sorted(r.torsion.items())},
        "even_structure": {"generators": even, "products": products},
        "odd_generators": odd,
    }


def checks_section(r: ContactCohomologyReport) -> list[dict]:
    return [{"name": c.name, "status": c.status, "evidence": to_jsonable(c.evidence)}
            for c in r.checks]


def stabilizer_section(a: ConeAnalysis) -> list[dict]:
    return [
        {"face": sorted(i + 1 for i in s.face), "dimension": s.dimension,
         "divisors": list(s.smoothness_divisors), "smooth": s.is_smooth}
        for s in all_stabilizers(a.cone, a.nerve)
    ]


def finish(doc: dict, config: dict) -> dict:
    """Append version and configuration stamp; key order stays fixed."""
    doc["version"] = __version__
    doc["config"] = config
    doc["config_hash"] = config_hash({**config, "version": __version__})
    return doc


def full_report(r: ContactCohomologyReport, t: ToricResult, config: dict,
                stabilizers: bool = False) -> dict:
    a = r.analysis
    doc: dict[str, Any] = {
        "input": cone_to_dict(a.cone, "rational" if r.rational else "integral"),
        "normalization": normalization_section(a),
        "validation": validation_section(a, r.rational),
        "equivariant": equivariant_section(r.equivariant),
        "toric": toric_section(t),
        "contact": contact_section(r),
        "checks": checks_section(r),
    }
    if stabilizers:
        doc["stabilizers"] = stabilizer_section(a)
    return finish(doc, config)

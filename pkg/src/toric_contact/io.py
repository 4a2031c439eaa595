"""Cone file parsing and report serialization.

A cone file is one JSON document::

    {"dim": 3, "normals": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
     "name": "orthant", "mode": "integral"}

Facet indices in every rendered output are 1-based.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .cone import ConeSpec, ConeSpecError

MODES = ("integral", "rational")


class ConeFileError(ValueError):
    """``kind`` is "syntax" for malformed documents, "invalid" for documents
    that parse but describe an inadmissible cone."""

    def __init__(self, message: str, kind: str = "syntax"):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class ConeFile:
    cone: ConeSpec
    mode: str = "integral"


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_cone(text: str | bytes) -> ConeFile:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConeFileError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConeFileError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ConeFileError("top level must be a JSON object")
    unknown = set(doc) - {"dim", "normals", "name", "mode"}
    if unknown:
        raise ConeFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    if "dim" not in doc:
        raise ConeFileError("missing field 'dim'")
    if "normals" not in doc:
        raise ConeFileError("missing field 'normals'")
    n = doc["dim"]
    if not _is_int(n):
        raise ConeFileError("field 'dim' must be an integer")
    normals = doc["normals"]
    if not isinstance(normals, list) or not normals:
        raise ConeFileError("field 'normals' must be a nonempty array")
    for i, v in enumerate(normals, start=1):
        if not isinstance(v, list):
            raise ConeFileError(f"normal {i} must be an array")
        for j, a in enumerate(v, start=1):
            if not _is_int(a):
                raise ConeFileError(f"normal {i} entry {j} is not an integer: {a!r}")
        if len(v) != n:
            raise ConeFileError(f"normal {i} has length {len(v)}, expected {n}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ConeFileError("field 'name' must be a string")
    mode = doc.get("mode", "integral")
    if mode not in MODES:
        raise ConeFileError(f"field 'mode' must be one of {', '.join(MODES)}")
    try:
        cone = ConeSpec(n, tuple(tuple(v) for v in normals), name)
    except ConeSpecError as exc:
        raise ConeFileError(str(exc), "invalid") from None
    return ConeFile(cone, mode)


def load_cone(path) -> ConeFile:
    with open(path, "rb") as fh:
        return parse_cone(fh.read())


def cone_to_dict(cone: ConeSpec, mode: Optional[str] = None) -> dict:
    out: dict[str, Any] = {}
    if cone.name is not None:
        out["name"] = cone.name
    out["dim"] = cone.n
    out["normals"] = [list(v) for v in cone.normals]
    if mode is not None:
        out["mode"] = mode
    return out


# ---------------------------------------------------------------------------
# Rendering


def to_jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, (frozenset, set)):
        return sorted(i + 1 for i in x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return x


def _dump(x: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        items = [pad + _dump(v, indent + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(x)


def dumps(doc: dict) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    return _dump(doc, 0) + "\n"


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _scalar(x: Any) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if x is None:
        return "-"
    return str(x)


def render_text(doc: Any, prefix: str = "") -> str:
    """Flatten a report into ``path: value`` lines.

    Lists of scalars are printed on one line; everything else recurses, so
    the text carries exactly the values of the JSON rendering.
    """
    lines: list[str] = []

    def walk(x, path):
        if isinstance(x, dict):
            if not x:
                lines.append(f"{path}: {{}}")
            for k, v in x.items():
                walk(v, f"{path}.{k}" if path else str(k))
        elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
            for i, v in enumerate(x):
                walk(v, f"{path}[{i}]")
        elif isinstance(x, list):
            lines.append(f"{path}: [" + ", ".join(_scalar(v) for v in x) + "]")
        else:
            lines.append(f"{path}: {_scalar(x)}")

    walk(doc, prefix)
    return "\n".join(lines) + "\n"

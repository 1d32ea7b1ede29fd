"""Scene documents: the JSON interchange format for curves and surfaces.

A scene binds shape parameters to control geometry plus optional metadata.
Parsing is strict (unknown fields, wrong shapes and bad numbers are rejected
with a position-bearing error) and serialization is canonical: fixed field
order and shortest round-trip number formatting, so serialize(parse(text))
returns canonical text byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .curve import PQCurve
from .pq_arith import MAX_DEGREE, PQParams
from .surface import PQSurface

CURVE_PARAM_KEYS = ("p", "q")
SURFACE_PARAM_KEYS = ("pu", "qu", "pv", "qv")


class SceneError(ValueError):
    """A scene document failed to parse or validate.

    ``location`` pinpoints the problem: "line L column C" for syntax errors,
    a field path like "points[2][0]" for validation errors.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass
class SceneDocument:
    """Parsed scene: kind, per-axis parameters, control geometry, metadata.

    ``warnings`` records admissible-but-degraded configurations (currently
    q > p, which forfeits the non-negativity and convex-hull guarantees).
    """

    kind: str
    params: dict[str, float]
    points: list
    metadata: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def curve(self) -> PQCurve:
        if self.kind != "curve":
            raise SceneError(f"expected a curve scene, got kind {self.kind!r}", "kind")
        return PQCurve(PQParams(self.params["p"], self.params["q"]), self.points)

    def surface(self) -> PQSurface:
        if self.kind != "surface":
            raise SceneError(f"expected a surface scene, got kind {self.kind!r}", "kind")
        return PQSurface(
            PQParams(self.params["pu"], self.params["qu"]),
            PQParams(self.params["pv"], self.params["qv"]),
            self.points,
        )

    @staticmethod
    def from_curve(curve: PQCurve, metadata: dict | None = None) -> "SceneDocument":
        doc = SceneDocument(
            kind="curve",
            params={"p": curve.params.p, "q": curve.params.q},
            points=[[float(c) for c in pt] for pt in curve.points],
            metadata=dict(metadata or {}),
        )
        doc.warnings = _order_warnings(doc)
        return doc

    @staticmethod
    def from_surface(surface: PQSurface, metadata: dict | None = None) -> "SceneDocument":
        doc = SceneDocument(
            kind="surface",
            params={
                "pu": surface.params_u.p,
                "qu": surface.params_u.q,
                "pv": surface.params_v.p,
                "qv": surface.params_v.q,
            },
            points=[[[float(c) for c in pt] for pt in row] for row in surface.net],
            metadata=dict(metadata or {}),
        )
        doc.warnings = _order_warnings(doc)
        return doc

    def to_obj(self) -> dict:
        """Canonical JSON object: fixed key order, floats throughout."""
        keys = CURVE_PARAM_KEYS if self.kind == "curve" else SURFACE_PARAM_KEYS
        obj = {
            "kind": self.kind,
            "params": {key: float(self.params[key]) for key in keys},
            "points": self.points,
        }
        if self.metadata:
            obj["metadata"] = {key: self.metadata[key] for key in sorted(self.metadata)}
        return obj


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _require_number(value, where: str) -> float:
    if not _is_number(value):
        raise SceneError(f"expected a number, got {value!r}", where)
    out = float(value)
    if out != out or out in (float("inf"), float("-inf")):
        raise SceneError(f"number must be finite, got {value!r}", where)
    return out


def _parse_point(value, where: str, dims: tuple[int, ...]) -> list[float]:
    if not isinstance(value, list) or len(value) not in dims:
        raise SceneError(f"expected a point with {' or '.join(map(str, dims))} coordinates", where)
    return [_require_number(coord, f"{where}[{i}]") for i, coord in enumerate(value)]


def _order_warnings(doc: SceneDocument) -> list[str]:
    warnings = []
    pairs = (
        [("p", "q")] if doc.kind == "curve" else [("pu", "qu"), ("pv", "qv")]
    )
    for p_key, q_key in pairs:
        if doc.params[q_key] > doc.params[p_key]:
            warnings.append(
                f"{q_key} > {p_key}: non-negativity and convex-hull guarantees do not apply"
            )
    return warnings


def document_from_obj(obj) -> SceneDocument:
    """Validate a decoded JSON value into a SceneDocument."""
    if not isinstance(obj, dict):
        raise SceneError("top-level value must be an object", "$")
    allowed = {"kind", "params", "points", "metadata"}
    for key in obj:
        if key not in allowed:
            raise SceneError(f"unknown field {key!r}", key)
    for key in ("kind", "params", "points"):
        if key not in obj:
            raise SceneError(f"missing required field {key!r}", "$")

    kind = obj["kind"]
    if kind not in ("curve", "surface"):
        raise SceneError(f"kind must be 'curve' or 'surface', got {kind!r}", "kind")

    raw_params = obj["params"]
    if not isinstance(raw_params, dict):
        raise SceneError("params must be an object", "params")
    keys = CURVE_PARAM_KEYS if kind == "curve" else SURFACE_PARAM_KEYS
    for key in raw_params:
        if key not in keys:
            raise SceneError(f"unknown parameter {key!r}", f"params.{key}")
    params = {}
    for key in keys:
        if key not in raw_params:
            raise SceneError(f"missing parameter {key!r}", "params")
        value = _require_number(raw_params[key], f"params.{key}")
        if value <= 0.0:
            raise SceneError(f"parameter {key!r} must be positive, got {value}", f"params.{key}")
        params[key] = value

    raw_points = obj["points"]
    if not isinstance(raw_points, list) or not raw_points:
        raise SceneError("points must be a nonempty array", "points")

    if kind == "curve":
        first = _parse_point(raw_points[0], "points[0]", (2, 3))
        points: list = [first]
        for i, entry in enumerate(raw_points[1:], start=1):
            pt = _parse_point(entry, f"points[{i}]", (len(first),))
            points.append(pt)
        if len(points) - 1 > MAX_DEGREE:
            raise SceneError(f"degree {len(points) - 1} exceeds the maximum of {MAX_DEGREE}", "points")
    else:
        points = []
        width = None
        for i, row in enumerate(raw_points):
            if not isinstance(row, list) or not row:
                raise SceneError("expected a nonempty row of points", f"points[{i}]")
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise SceneError(
                    f"grid is not rectangular: row has {len(row)} points, expected {width}",
                    f"points[{i}]",
                )
            points.append(
                [_parse_point(entry, f"points[{i}][{j}]", (3,)) for j, entry in enumerate(row)]
            )
        if len(points) - 1 > MAX_DEGREE or width - 1 > MAX_DEGREE:
            raise SceneError(f"degree exceeds the maximum of {MAX_DEGREE}", "points")

    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SceneError("metadata must be an object", "metadata")

    doc = SceneDocument(kind=kind, params=params, points=points, metadata=dict(metadata))
    doc.warnings = _order_warnings(doc)
    return doc


def parse_scene(text: str) -> SceneDocument:
    """Parse scene text; raises SceneError with a location on any defect."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return document_from_obj(obj)


def serialize_scene(doc: SceneDocument) -> str:
    """Canonical text for a scene; parse followed by serialize is the identity."""
    return json.dumps(doc.to_obj(), indent=2, ensure_ascii=False) + "\n"


def scene_for(obj) -> SceneDocument:
    """Build a scene for a PQCurve or PQSurface."""
    if isinstance(obj, PQCurve):
        return SceneDocument.from_curve(obj)
    if isinstance(obj, PQSurface):
        return SceneDocument.from_surface(obj)
    raise TypeError(f"cannot build a scene from {type(obj).__name__}")

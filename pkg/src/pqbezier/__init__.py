"""Two-parameter Bernstein-type bases, Bezier curves and tensor-product surfaces.

The pair (p, q) acts as a shape control: the classical theory is the special
case p = q = 1 and the one-parameter q-theory is p = 1.  The package keeps
the direct basis definition as ground truth, evaluates curves by stable
corner cutting, elevates degrees exactly, and ships an identity audit plus a
CLI and a small evaluation service on top.
"""

from .basis import (
    AUDIT_TOLERANCE,
    AuditReport,
    basis_row,
    basis_value,
    elevation_coeffs,
    format_audit_table,
    identity_audit,
    reduce_step_a,
    reduce_step_b,
)
from .curve import (
    DeCasteljauTableau,
    PQCurve,
    de_casteljau,
    degree_elevate,
    degree_elevate_iterated,
    elevation_matrix,
    evaluate_direct,
    polygon_distance,
    sample,
)
from .pq_arith import (
    MAX_DEGREE,
    PQParams,
    one_minus_t_expansion,
    one_minus_t_product,
    pq_binomial,
    pq_binomial_row,
    pq_factorial,
    pq_integer,
)
from .scene import SceneDocument, SceneError, parse_scene, serialize_scene
from .surface import (
    PQSurface,
    SurfaceMesh,
    de_casteljau_surface,
    degree_elevate_surface,
    evaluate,
    isoparametric_u,
    isoparametric_v,
    sample_grid,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_TOLERANCE",
    "AuditReport",
    "DeCasteljauTableau",
    "MAX_DEGREE",
    "PQCurve",
    "PQParams",
    "PQSurface",
    "SceneDocument",
    "SceneError",
    "SurfaceMesh",
    "basis_row",
    "basis_value",
    "de_casteljau",
    "de_casteljau_surface",
    "degree_elevate",
    "degree_elevate_iterated",
    "degree_elevate_surface",
    "elevation_coeffs",
    "elevation_matrix",
    "evaluate",
    "evaluate_direct",
    "format_audit_table",
    "identity_audit",
    "isoparametric_u",
    "isoparametric_v",
    "one_minus_t_expansion",
    "one_minus_t_product",
    "parse_scene",
    "polygon_distance",
    "pq_binomial",
    "pq_binomial_row",
    "pq_factorial",
    "pq_integer",
    "reduce_step_a",
    "reduce_step_b",
    "sample",
    "sample_grid",
    "serialize_scene",
]

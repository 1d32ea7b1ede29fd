"""Curves blended by the two-parameter basis.

Direct evaluation, two corner-cutting evaluation variants with full tableau
capture, degree elevation (single step, matrix form, iterated) and a
control-polygon distance diagnostic.  Curves are immutable values; every
function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import basis_row
from .pq_arith import MAX_DEGREE, PQParams, check_degree, pq_integer


def _frozen_points(points, dims=(2, 3)) -> np.ndarray:
    pts = np.array(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] not in dims:
        raise ValueError(
            f"control points must be an (n+1) x d array with d in {dims}, got shape {pts.shape}"
        )
    if not np.all(np.isfinite(pts)):
        raise ValueError("control points must be finite")
    pts.setflags(write=False)
    return pts


@dataclass(frozen=True)
class PQCurve:
    """A control polygon bound to a shape-parameter pair."""

    params: PQParams
    points: np.ndarray

    def __post_init__(self):
        pts = _frozen_points(self.points)
        check_degree(pts.shape[0] - 1)
        object.__setattr__(self, "points", pts)

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class DeCasteljauTableau:
    """Triangular array of intermediate points from a corner-cutting run.

    Level 0 is the control polygon, level r has degree+1-r points and the
    last level holds the single curve point.  For variant A the right-parent
    weights of every step are kept alongside; with p >= q and t in [0, 1]
    each weight lies in [0, 1], which is the convex-hull guarantee.
    """

    levels: tuple[np.ndarray, ...]
    variant: str
    t: float
    weights: tuple[np.ndarray, ...] | None = None

    @property
    def point(self) -> np.ndarray:
        return self.levels[-1][0]


def evaluate_direct(curve: PQCurve, t: float) -> np.ndarray:
    """Sum of control points weighted by the basis row at t.

    t outside [0, 1] is accepted (extrapolation) but carries no geometric
    guarantees; callers that care should check the range themselves.
    """
    row = np.asarray(basis_row(curve.degree, t, curve.params))
    return row @ curve.points


def is_extrapolation(t: float) -> bool:
    """True when a parameter lies outside the geometric domain [0, 1]."""
    return not 0.0 <= t <= 1.0


def de_casteljau(curve: PQCurve, t: float, variant: str = "A") -> tuple[np.ndarray, DeCasteljauTableau]:
    """Evaluate by repeated two-point interpolation, returning point and tableau.

    At step r the current polygon of degree m = degree - r + 1 collapses by
    one.  Variant A uses the convex pairing
    ``new[i] = (1 - lam) * cur[i] + lam * cur[i+1]`` with
    ``lam = (q/p)^(m-1-i) * t``; variant B weights the left parent by plain t:
    ``new[i] = ((q/p)^i - (q/p)^(m-1) * t) * cur[i] + t * cur[i+1]``.
    Both reproduce :func:`evaluate_direct`; only variant A is corner cutting.
    """
    if variant not in ("A", "B"):
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    n = curve.degree
    ratio = curve.params.ratio
    cur = curve.points
    levels = [cur]
    step_weights: list[np.ndarray] = []
    for r in range(1, n + 1):
        m = n - r + 1
        nxt = np.empty((m, cur.shape[1]))
        if variant == "A":
            lam = np.array([ratio ** (m - 1 - i) * t for i in range(m)])
            for i in range(m):
                nxt[i] = (1.0 - lam[i]) * cur[i] + lam[i] * cur[i + 1]
            lam.setflags(write=False)
            step_weights.append(lam)
        else:
            for i in range(m):
                w_left = ratio ** i - ratio ** (m - 1) * t
                nxt[i] = w_left * cur[i] + t * cur[i + 1]
        nxt.setflags(write=False)
        levels.append(nxt)
        cur = nxt
    tableau = DeCasteljauTableau(
        levels=tuple(levels),
        variant=variant,
        t=float(t),
        weights=tuple(step_weights) if variant == "A" else None,
    )
    return np.array(cur[0]), tableau


def elevation_matrix(n: int, params: PQParams) -> np.ndarray:
    """(n+2) x (n+1) matrix mapping a degree-n polygon to the degree-(n+1) one.

    Row k keeps weight p^k [n+1-k]/[n+1] on point k and puts the complement
    on point k-1, so every row sums to 1, at most two entries are nonzero,
    and the first and last rows are unit vectors.
    """
    check_degree(n + 1)
    denom = pq_integer(n + 1, params)
    matrix = np.zeros((n + 2, n + 1))
    for k in range(n + 2):
        keep = params.p ** k * pq_integer(n + 1 - k, params) / denom if k <= n else 0.0
        if k <= n:
            matrix[k, k] = keep
        if k >= 1:
            matrix[k, k - 1] = 1.0 - keep
    return matrix


def degree_elevate(curve: PQCurve) -> PQCurve:
    """Same curve, rewritten exactly one degree higher."""
    if curve.degree + 1 > MAX_DEGREE:
        raise ValueError(f"cannot elevate beyond degree {MAX_DEGREE}")
    new_points = elevation_matrix(curve.degree, curve.params) @ curve.points
    return PQCurve(curve.params, new_points)


def degree_elevate_iterated(curve: PQCurve, times: int) -> PQCurve:
    """Compose ``times`` single elevations; the polygon drifts toward the curve."""
    if times < 1:
        raise ValueError(f"elevation count must be positive, got {times}")
    check_degree(curve.degree + times)
    out = curve
    for _ in range(times):
        out = degree_elevate(out)
    return out


def _segment_distance(point: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.linalg.norm(point - a))
    s = float((point - a) @ ab) / denom
    s = min(1.0, max(0.0, s))
    return float(np.linalg.norm(point - (a + s * ab)))


def polyline_distance(point: np.ndarray, vertices: np.ndarray) -> float:
    """Distance from a point to the nearest point of an open polyline."""
    if len(vertices) == 1:
        return float(np.linalg.norm(point - vertices[0]))
    return min(_segment_distance(point, a, b) for a, b in zip(vertices[:-1], vertices[1:]))


def polygon_distance(curve: PQCurve, grid_count: int = 101) -> float:
    """Largest distance from sampled curve points to the control polyline.

    The readout behind the shape-control sliders: moving (p, q) changes this
    number while the polygon itself stays put.
    """
    worst = 0.0
    for i in range(grid_count):
        t = i / (grid_count - 1)
        worst = max(worst, polyline_distance(evaluate_direct(curve, t), curve.points))
    return worst


def sample(curve: PQCurve, count: int) -> np.ndarray:
    """Uniform-parameter polyline with exact endpoints; count >= 2."""
    if count < 2:
        raise ValueError(f"sample count must be at least 2, got {count}")
    return np.array([evaluate_direct(curve, i / (count - 1)) for i in range(count)])

"""Tensor-product surfaces over [0, 1] x [0, 1] with independent (p, q) per axis.

Evaluation, isoparametric curve extraction, degree elevation as the tensor
application of the verified one-dimensional elevation, and a block
corner-cutting evaluator that finishes rectangular nets with the curve
algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import basis_row
from .curve import PQCurve, de_casteljau, elevation_matrix
from .pq_arith import MAX_DEGREE, PQParams, check_degree


@dataclass(frozen=True)
class PQSurface:
    """A rectangular control net bound to one shape-parameter pair per axis."""

    params_u: PQParams
    params_v: PQParams
    net: np.ndarray

    def __post_init__(self):
        grid = np.array(self.net, dtype=float)
        if grid.ndim != 3 or grid.shape[2] != 3 or grid.shape[0] < 1 or grid.shape[1] < 1:
            raise ValueError(
                f"control net must be an (m+1) x (n+1) x 3 array, got shape {grid.shape}"
            )
        if not np.all(np.isfinite(grid)):
            raise ValueError("control net must be finite")
        check_degree(grid.shape[0] - 1)
        check_degree(grid.shape[1] - 1)
        grid.setflags(write=False)
        object.__setattr__(self, "net", grid)

    @property
    def degree_u(self) -> int:
        return self.net.shape[0] - 1

    @property
    def degree_v(self) -> int:
        return self.net.shape[1] - 1


def evaluate(surface: PQSurface, u: float, v: float) -> np.ndarray:
    """Double blend of the net by the basis rows in u and v."""
    bu = np.asarray(basis_row(surface.degree_u, u, surface.params_u))
    bv = np.asarray(basis_row(surface.degree_v, v, surface.params_v))
    return np.einsum("i,j,ijd->d", bu, bv, surface.net)


def isoparametric_u(surface: PQSurface, v_star: float) -> PQCurve:
    """Curve in u obtained by freezing v = v_star; carries the u parameters."""
    bv = np.asarray(basis_row(surface.degree_v, v_star, surface.params_v))
    points = np.einsum("j,ijd->id", bv, surface.net)
    return PQCurve(surface.params_u, points)


def isoparametric_v(surface: PQSurface, u_star: float) -> PQCurve:
    """Curve in v obtained by freezing u = u_star; carries the v parameters."""
    bu = np.asarray(basis_row(surface.degree_u, u_star, surface.params_u))
    points = np.einsum("i,ijd->jd", bu, surface.net)
    return PQCurve(surface.params_v, points)


def degree_elevate_surface(surface: PQSurface) -> PQSurface:
    """Same surface one degree higher on both axes.

    Applies the one-dimensional elevation along u and then along v; the two
    axis orders commute, and the combined map is the four-term bilinear blend
    of each point with its three lower-index neighbours.
    """
    if surface.degree_u + 1 > MAX_DEGREE or surface.degree_v + 1 > MAX_DEGREE:
        raise ValueError(f"cannot elevate beyond degree {MAX_DEGREE}")
    t_u = elevation_matrix(surface.degree_u, surface.params_u)
    t_v = elevation_matrix(surface.degree_v, surface.params_v)
    lifted_u = np.einsum("ki,ijd->kjd", t_u, surface.net)
    lifted = np.einsum("lj,kjd->kld", t_v, lifted_u)
    return PQSurface(surface.params_u, surface.params_v, lifted)


def de_casteljau_surface(surface: PQSurface, u: float, v: float) -> np.ndarray:
    """Point at (u, v) by collapsing 2x2 blocks, then finishing any leftover strip.

    Each block step applies the variant-A corner-cutting weights of the
    current degrees in u and v at once.  After min(degree_u, degree_v) steps
    a rectangular net leaves a single row or column, which the curve
    algorithm finishes.
    """
    cur = np.array(surface.net)
    du, dv = surface.degree_u, surface.degree_v
    ru, rv = surface.params_u.ratio, surface.params_v.ratio
    while du > 0 and dv > 0:
        lam = [ru ** (du - 1 - i) * u for i in range(du)]
        mu = [rv ** (dv - 1 - j) * v for j in range(dv)]
        nxt = np.empty((du, dv, 3))
        for i in range(du):
            for j in range(dv):
                nxt[i, j] = (
                    (1.0 - lam[i]) * (1.0 - mu[j]) * cur[i, j]
                    + (1.0 - lam[i]) * mu[j] * cur[i, j + 1]
                    + lam[i] * (1.0 - mu[j]) * cur[i + 1, j]
                    + lam[i] * mu[j] * cur[i + 1, j + 1]
                )
        cur = nxt
        du -= 1
        dv -= 1
    if du > 0:
        point, _ = de_casteljau(PQCurve(surface.params_u, cur[:, 0, :]), u)
        return point
    if dv > 0:
        point, _ = de_casteljau(PQCurve(surface.params_v, cur[0, :, :]), v)
        return point
    return np.array(cur[0, 0])


@dataclass(frozen=True)
class SurfaceMesh:
    """Uniform-parameter samples with quad connectivity.

    Vertices are stored row-major with v fastest: the vertex at u-index iu
    and v-index iv sits at flat index ``iu * count_v + iv``.
    """

    vertices: np.ndarray
    faces: tuple[tuple[int, int, int, int], ...]
    count_u: int
    count_v: int


def sample_grid(surface: PQSurface, count_u: int, count_v: int) -> SurfaceMesh:
    """Evaluate a count_u x count_v parameter grid; counts must be >= 2."""
    if count_u < 2 or count_v < 2:
        raise ValueError(f"grid counts must be at least 2, got {count_u} x {count_v}")
    vertices = np.empty((count_u * count_v, 3))
    for iu in range(count_u):
        u = iu / (count_u - 1)
        for iv in range(count_v):
            v = iv / (count_v - 1)
            vertices[iu * count_v + iv] = evaluate(surface, u, v)
    faces = []
    for iu in range(count_u - 1):
        for iv in range(count_v - 1):
            a = iu * count_v + iv
            faces.append((a, a + 1, a + count_v + 1, a + count_v))
    vertices.setflags(write=False)
    return SurfaceMesh(vertices=vertices, faces=tuple(faces), count_u=count_u, count_v=count_v)

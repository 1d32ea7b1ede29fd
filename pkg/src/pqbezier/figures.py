"""Matplotlib figures for the report path, written next to the CSV tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .basis import basis_row  # noqa: E402
from .curve import PQCurve, de_casteljau, sample  # noqa: E402
from .pq_arith import PQParams  # noqa: E402
from .surface import PQSurface, sample_grid  # noqa: E402


def save_basis_figure(n: int, params: PQParams, path: str, count: int = 201) -> None:
    """Plot the n+1 basis functions and their (constant 1) sum."""
    ts = np.linspace(0.0, 1.0, count)
    rows = np.array([basis_row(n, t, params) for t in ts])
    fig, ax = plt.subplots(figsize=(8, 5))
    for k in range(n + 1):
        ax.plot(ts, rows[:, k], label=f"k={k}")
    ax.plot(ts, rows.sum(axis=1), "k--", linewidth=1, label="sum")
    ax.set_xlabel("t")
    ax.set_title(f"basis n={n}, p={params.p:g}, q={params.q:g}")
    ax.grid(alpha=0.3)
    ax.legend(loc="upper center", ncol=min(n + 2, 6), fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_curve_figure(
    curve: PQCurve, path: str, count: int = 201, tableau_t: float | None = None
) -> None:
    """Plot the curve with its control polygon and an optional tableau overlay."""
    pts = sample(curve, count)
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.plot(curve.points[:, 0], curve.points[:, 1], "o--", color="#888888", label="control polygon")
    if tableau_t is not None:
        _, tableau = de_casteljau(curve, tableau_t)
        for level in tableau.levels[1:-1]:
            ax.plot(level[:, 0], level[:, 1], "-", color="#cccccc", linewidth=1)
        final = tableau.point
        ax.plot([final[0]], [final[1]], "o", color="#2ca02c", label=f"point at t={tableau_t:g}")
    ax.plot(pts[:, 0], pts[:, 1], color="#1f77b4", linewidth=2, label="curve")
    ax.set_aspect("equal")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    ax.set_title(f"degree {curve.degree}, p={curve.params.p:g}, q={curve.params.q:g}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_surface_figure(surface: PQSurface, path: str, count_u: int = 17, count_v: int = 17) -> None:
    """Wireframe of the sampled surface with the control net overlaid."""
    mesh = sample_grid(surface, count_u, count_v)
    grid = mesh.vertices.reshape(count_u, count_v, 3)
    fig = plt.figure(figsize=(8, 6))
    ax = fig.add_subplot(projection="3d")
    ax.plot_wireframe(grid[:, :, 0], grid[:, :, 1], grid[:, :, 2], color="#1f77b4", linewidth=0.7)
    net = surface.net
    ax.scatter(net[:, :, 0].ravel(), net[:, :, 1].ravel(), net[:, :, 2].ravel(), color="#d62728", s=12)
    ax.set_title(
        f"surface {surface.degree_u}x{surface.degree_v}, "
        f"pu={surface.params_u.p:g}, qu={surface.params_u.q:g}, "
        f"pv={surface.params_v.p:g}, qv={surface.params_v.q:g}"
    )
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)

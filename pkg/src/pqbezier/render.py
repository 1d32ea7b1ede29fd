"""Deterministic text emitters: CSV tables, OBJ-style meshes and SVG plots.

Every function here is a pure function of its inputs and produces
byte-identical output on repeated calls; there are no timestamps, ids or
environment lookups in the output path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import basis_row
from .curve import PQCurve, de_casteljau, sample
from .pq_arith import PQParams
from .surface import PQSurface, SurfaceMesh, isoparametric_u, isoparametric_v
from .scene import SceneDocument

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)


@dataclass(frozen=True)
class RenderOptions:
    """Knobs for the emitters; counts must be at least 2."""

    count: int = 101
    count_u: int = 17
    count_v: int = 17
    width: int = 640
    height: int = 480
    show_polygon: bool = True
    show_basis_sum: bool = True
    tableau_t: float | None = None
    variant: str = "A"
    stroke_width: float = 1.5

    def __post_init__(self):
        if self.count < 2 or self.count_u < 2 or self.count_v < 2:
            raise ValueError("sample counts must be at least 2")


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def export_csv(columns: list[str], rows) -> str:
    """Comma-delimited table; numbers keep shortest round-trip formatting."""
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(repr(float(value)) for value in row))
    return "\n".join(lines) + "\n"


def curve_samples_csv(curve: PQCurve, count: int) -> str:
    """t plus coordinates for a uniform sampling of the curve."""
    pts = sample(curve, count)
    columns = ["t"] + ["x", "y", "z"][: pts.shape[1]]
    rows = [[i / (count - 1), *pts[i]] for i in range(count)]
    return export_csv(columns, rows)


def basis_samples(n: int, params: PQParams, count: int) -> tuple[list[float], list[list[float]]]:
    """Uniform t grid and the basis rows on it (count rows of n+1 values)."""
    ts = [i / (count - 1) for i in range(count)]
    return ts, [basis_row(n, t, params) for t in ts]


def basis_samples_csv(n: int, params: PQParams, count: int) -> str:
    ts, rows = basis_samples(n, params, count)
    columns = ["t"] + [f"b{k}" for k in range(n + 1)]
    return export_csv(columns, [[t, *row] for t, row in zip(ts, rows)])


def export_mesh(mesh: SurfaceMesh) -> str:
    """OBJ-style vertex/face text; vertices row-major with v fastest."""
    lines = [f"# mesh {mesh.count_u} x {mesh.count_v}, vertices u-major (v fastest)"]
    for vx, vy, vz in mesh.vertices:
        lines.append(f"v {float(vx)!r} {float(vy)!r} {float(vz)!r}")
    for a, b, c, d in mesh.faces:
        lines.append(f"f {a + 1} {b + 1} {c + 1} {d + 1}")
    return "\n".join(lines) + "\n"


class _Plot:
    """Minimal SVG canvas with a data-space to pixel-space mapping."""

    def __init__(self, width, height, xs, ys, title):
        self.width = width
        self.height = height
        pad_x = 0.05 * (max(xs) - min(xs) or 1.0)
        pad_y = 0.05 * (max(ys) - min(ys) or 1.0)
        self.x0, self.x1 = min(xs) - pad_x, max(xs) + pad_x
        self.y0, self.y1 = min(ys) - pad_y, max(ys) + pad_y
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
            f'<text x="8" y="16" font-family="monospace" font-size="12">{title}</text>',
        ]

    def to_px(self, x, y):
        px = (x - self.x0) / (self.x1 - self.x0) * (self.width - 40) + 20
        py = self.height - 20 - (y - self.y0) / (self.y1 - self.y0) * (self.height - 60)
        return px, py

    def polyline(self, points, color, width=1.5, dashed=False):
        coords = " ".join(
            f"{_fmt(px)},{_fmt(py)}" for px, py in (self.to_px(x, y) for x, y in points)
        )
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        self.parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{_fmt(width)}"{dash} '
            f'points="{coords}"/>'
        )

    def circle(self, x, y, radius, color):
        px, py = self.to_px(x, y)
        self.parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(radius)}" fill="{color}"/>'
        )

    def text(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def render_basis_svg(n: int, params: PQParams, options: RenderOptions = RenderOptions()) -> str:
    """Plot of all n+1 basis functions on [0, 1], optionally with their sum."""
    ts, rows = basis_samples(n, params, options.count)
    values = [value for row in rows for value in row]
    top = max(1.0, max(values))
    bottom = min(0.0, min(values))
    title = f"basis n={n} p={params.p:g} q={params.q:g}"
    plot = _Plot(options.width, options.height, [0.0, 1.0], [bottom, top], title)
    for k in range(n + 1):
        plot.polyline(
            [(t, row[k]) for t, row in zip(ts, rows)],
            _PALETTE[k % len(_PALETTE)],
            options.stroke_width,
        )
    if options.show_basis_sum:
        plot.polyline(
            [(t, sum(row)) for t, row in zip(ts, rows)], "#000000", 1.0, dashed=True
        )
    return plot.text()


def _scene_curve(doc) -> PQCurve:
    return doc.curve() if isinstance(doc, SceneDocument) else doc


def render_curve_svg(doc, options: RenderOptions = RenderOptions()) -> str:
    """Curve polyline with optional control polygon and tableau overlay.

    Three-dimensional curves are drawn by dropping the z coordinate.
    """
    curve = _scene_curve(doc)
    pts = sample(curve, options.count)[:, :2]
    polygon = curve.points[:, :2]
    xs = list(pts[:, 0]) + list(polygon[:, 0])
    ys = list(pts[:, 1]) + list(polygon[:, 1])
    title = f"curve degree={curve.degree} p={curve.params.p:g} q={curve.params.q:g}"
    plot = _Plot(options.width, options.height, xs, ys, title)
    if options.show_polygon:
        plot.polyline(polygon, "#888888", 1.0, dashed=True)
        for x, y in polygon:
            plot.circle(x, y, 3.0, "#d62728")
    if options.tableau_t is not None:
        _, tableau = de_casteljau(curve, options.tableau_t, options.variant)
        for level in tableau.levels[1:-1]:
            plot.polyline(level[:, :2], "#bbbbbb", 1.0)
        fx, fy = tableau.point[:2]
        plot.circle(fx, fy, 4.0, "#2ca02c")
    plot.polyline(pts, "#1f77b4", options.stroke_width)
    return plot.text()


_ISO = (0.8660254037844387, 0.5)  # cos(30 deg), sin(30 deg)


def _project(point) -> tuple[float, float]:
    x, y, z = point
    return (x - y) * _ISO[0], z + (x + y) * _ISO[1]


def render_surface_svg(doc, options: RenderOptions = RenderOptions()) -> str:
    """Isometric wireframe of the isoparametric curves of a surface."""
    surface = doc.surface() if isinstance(doc, SceneDocument) else doc
    iso_lines = []
    for iu in range(options.count_u):
        u = iu / (options.count_u - 1)
        pts = sample(isoparametric_v(surface, u), options.count)
        iso_lines.append([_project(pt) for pt in pts])
    for iv in range(options.count_v):
        v = iv / (options.count_v - 1)
        pts = sample(isoparametric_u(surface, v), options.count)
        iso_lines.append([_project(pt) for pt in pts])
    xs = [x for line in iso_lines for x, _ in line]
    ys = [y for line in iso_lines for _, y in line]
    title = (
        f"surface {surface.degree_u}x{surface.degree_v} "
        f"pu={surface.params_u.p:g} qu={surface.params_u.q:g} "
        f"pv={surface.params_v.p:g} qv={surface.params_v.q:g}"
    )
    plot = _Plot(options.width, options.height, xs, ys, title)
    for line in iso_lines:
        plot.polyline(line, "#1f77b4", 1.0)
    return plot.text()

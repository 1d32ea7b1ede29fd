"""Command line for sampling, rendering, reports, the identity audit and the service."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .basis import format_audit_table, identity_audit
from .curve import de_casteljau, degree_elevate_iterated, evaluate_direct
from .pq_arith import PQParams
from .render import (
    RenderOptions,
    basis_samples_csv,
    curve_samples_csv,
    export_mesh,
    render_basis_svg,
    render_curve_svg,
    render_surface_svg,
)
from .scene import SceneDocument, SceneError, parse_scene, serialize_scene
from .service import default_port, run_server
from .surface import de_casteljau_surface, degree_elevate_surface, sample_grid


class CliError(Exception):
    """Command failure reported as a message plus exit status 1."""


def _load_scene(path: str) -> SceneDocument:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = parse_scene(text)
    except SceneError as exc:
        raise CliError(f"{path}: {exc}") from None
    for warning in doc.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return doc


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _render_options(args, tableau_t=None) -> RenderOptions:
    return RenderOptions(
        count=args.count,
        count_u=getattr(args, "count_u", 17),
        count_v=getattr(args, "count_v", 17),
        show_polygon=not getattr(args, "no_polygon", False),
        tableau_t=tableau_t,
    )


def cmd_basis(args) -> int:
    params = PQParams(args.p, args.q)
    if args.svg:
        text = render_basis_svg(args.n, params, RenderOptions(count=args.count))
        _write_output(text, args.svg)
    else:
        _write_output(basis_samples_csv(args.n, params, args.count), args.out)
    return 0


def cmd_eval(args) -> int:
    doc = _load_scene(args.scene)
    if doc.kind == "curve":
        if args.t is None:
            raise CliError("curve scenes need --t")
        curve = doc.curve()
        if args.variant:
            point, _ = de_casteljau(curve, args.t, args.variant)
        else:
            point = evaluate_direct(curve, args.t)
    else:
        if args.u is None or args.v is None:
            raise CliError("surface scenes need --u and --v")
        point = de_casteljau_surface(doc.surface(), args.u, args.v)
    print(",".join(repr(float(c)) for c in point))
    return 0


def cmd_sample(args) -> int:
    doc = _load_scene(args.scene)
    if doc.kind == "curve":
        _write_output(curve_samples_csv(doc.curve(), args.count), args.out)
    else:
        mesh = sample_grid(doc.surface(), args.count_u, args.count_v)
        _write_output(export_mesh(mesh), args.out)
    return 0


def cmd_elevate(args) -> int:
    doc = _load_scene(args.scene)
    if doc.kind == "curve":
        elevated = SceneDocument.from_curve(
            degree_elevate_iterated(doc.curve(), args.times), doc.metadata
        )
    else:
        surface = doc.surface()
        for _ in range(args.times):
            surface = degree_elevate_surface(surface)
        elevated = SceneDocument.from_surface(surface, doc.metadata)
    _write_output(serialize_scene(elevated), args.out)
    return 0


def cmd_render(args) -> int:
    doc = _load_scene(args.scene)
    options = _render_options(args, tableau_t=args.tableau_t)
    if doc.kind == "curve":
        text = render_curve_svg(doc, options)
    else:
        text = render_surface_svg(doc, options)
    _write_output(text, args.out)
    return 0


def cmd_report(args) -> int:
    from . import figures

    doc = _load_scene(args.scene)
    os.makedirs(args.out_dir, exist_ok=True)

    def emit(name: str, text: str) -> None:
        path = os.path.join(args.out_dir, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {path}")

    if doc.kind == "curve":
        curve = doc.curve()
        emit("samples.csv", curve_samples_csv(curve, args.count))
        figure_path = os.path.join(args.out_dir, "curve.png")
        figures.save_curve_figure(curve, figure_path, tableau_t=args.tableau_t)
        print(f"wrote {figure_path}")
        basis_path = os.path.join(args.out_dir, "basis.png")
        figures.save_basis_figure(curve.degree, curve.params, basis_path)
        print(f"wrote {basis_path}")
    else:
        surface = doc.surface()
        mesh = sample_grid(surface, args.count_u, args.count_v)
        emit("mesh.obj", export_mesh(mesh))
        figure_path = os.path.join(args.out_dir, "surface.png")
        figures.save_surface_figure(surface, figure_path, args.count_u, args.count_v)
        print(f"wrote {figure_path}")
    return 0


def _parse_params_pair(text: str) -> tuple[float, float]:
    try:
        p_text, q_text = text.split(",")
        return float(p_text), float(q_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'p,q', got {text!r}") from None


def cmd_audit(args) -> int:
    if args.params:
        params_set = tuple(PQParams(p, q) for p, q in args.params)
        reports = identity_audit(args.n_max, params_set)
    else:
        reports = identity_audit(args.n_max)
    print(format_audit_table(reports))
    if args.json:
        payload = {
            "reports": [rep.to_dict() for rep in reports],
            "passed": all(rep.passed for rep in reports),
        }
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
        print(f"wrote {args.json}")
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_serve(args) -> int:
    run_server(args.host, args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqbezier",
        description="Two-parameter Bezier curves and surfaces: sample, render, audit, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    basis = sub.add_parser("basis", help="emit basis samples as CSV or an SVG plot")
    basis.add_argument("--n", type=int, required=True, help="degree")
    basis.add_argument("--p", type=float, required=True)
    basis.add_argument("--q", type=float, required=True)
    basis.add_argument("--count", type=int, default=101)
    basis.add_argument("--svg", metavar="FILE", help="write an SVG plot instead of CSV")
    basis.add_argument("--out", metavar="FILE", help="CSV destination (default stdout)")
    basis.set_defaults(func=cmd_basis)

    ev = sub.add_parser("eval", help="evaluate a scene at t or (u, v)")
    ev.add_argument("--scene", required=True)
    ev.add_argument("--t", type=float)
    ev.add_argument("--u", type=float)
    ev.add_argument("--v", type=float)
    ev.add_argument("--variant", choices=("A", "B"), help="use corner cutting instead of the direct sum")
    ev.set_defaults(func=cmd_eval)

    sam = sub.add_parser("sample", help="uniform samples: CSV for curves, OBJ mesh for surfaces")
    sam.add_argument("--scene", required=True)
    sam.add_argument("--count", type=int, default=101)
    sam.add_argument("--count-u", dest="count_u", type=int, default=17)
    sam.add_argument("--count-v", dest="count_v", type=int, default=17)
    sam.add_argument("--out", metavar="FILE")
    sam.set_defaults(func=cmd_sample)

    el = sub.add_parser("elevate", help="degree-elevate a scene")
    el.add_argument("--scene", required=True)
    el.add_argument("--times", type=int, default=1)
    el.add_argument("--out", metavar="FILE")
    el.set_defaults(func=cmd_elevate)

    ren = sub.add_parser("render", help="deterministic SVG plot of a scene")
    ren.add_argument("--scene", required=True)
    ren.add_argument("--out", metavar="FILE", required=True)
    ren.add_argument("--count", type=int, default=101)
    ren.add_argument("--count-u", dest="count_u", type=int, default=17)
    ren.add_argument("--count-v", dest="count_v", type=int, default=17)
    ren.add_argument("--no-polygon", action="store_true", help="hide the control polygon overlay")
    ren.add_argument("--tableau-t", type=float, help="overlay the corner-cutting tableau at t")
    ren.set_defaults(func=cmd_render)

    rep = sub.add_parser("report", help="write CSV/mesh plus matplotlib figures to a directory")
    rep.add_argument("--scene", required=True)
    rep.add_argument("--out-dir", required=True)
    rep.add_argument("--count", type=int, default=101)
    rep.add_argument("--count-u", dest="count_u", type=int, default=17)
    rep.add_argument("--count-v", dest="count_v", type=int, default=17)
    rep.add_argument("--tableau-t", type=float)
    rep.set_defaults(func=cmd_report)

    aud = sub.add_parser("audit", help="verify the degree identities and report discrepancies")
    aud.add_argument("--n-max", dest="n_max", type=int, default=8)
    aud.add_argument(
        "--params",
        action="append",
        type=_parse_params_pair,
        metavar="P,Q",
        help="parameter pair to audit (repeatable; default set used when omitted)",
    )
    aud.add_argument("--json", metavar="FILE", help="also write the machine-readable report")
    aud.set_defaults(func=cmd_audit)

    srv = sub.add_parser("serve", help="run the evaluation service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=None, help=f"default from ${'PQBEZIER_PORT'} or {default_port()}")
    srv.set_defaults(func=cmd_serve)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())

"""Stateless JSON-over-HTTP adapter exposing the library to scripts and editors.

No computation lives here: each request parses a scene, calls the library and
returns.  Every response echoes the request id; failures return a structured
error code and message instead of crashing the connection.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .basis import identity_audit
from .curve import de_casteljau, degree_elevate_iterated, evaluate_direct, is_extrapolation, polygon_distance
from .pq_arith import PQParams
from .scene import SceneDocument, SceneError, document_from_obj
from .surface import de_casteljau_surface, degree_elevate_surface, sample_grid
from .curve import sample as sample_curve

PORT_ENV = "PQBEZIER_PORT"
DEFAULT_PORT = 8642


class ServiceError(Exception):
    """Request-level failure mapped to a 4xx response."""

    def __init__(self, code: str, message: str, status: int = 400):
        self.code = code
        self.status = status
        super().__init__(message)


def default_port() -> int:
    value = os.environ.get(PORT_ENV)
    if value is None:
        return DEFAULT_PORT
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{PORT_ENV} must be an integer, got {value!r}") from None


def _require(body: dict, key: str):
    if key not in body:
        raise ServiceError("bad-request", f"missing field {key!r}")
    return body[key]


def _number(body: dict, key: str) -> float:
    value = _require(body, key)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ServiceError("bad-request", f"field {key!r} must be a number")
    return float(value)


def _scene(body: dict) -> SceneDocument:
    try:
        return document_from_obj(_require(body, "scene"))
    except SceneError as exc:
        raise ServiceError("bad-scene", str(exc)) from None


def handle_eval(body: dict) -> dict:
    doc = _scene(body)
    if doc.kind == "curve":
        curve = doc.curve()
        t = _number(body, "t")
        out = {"extrapolation": is_extrapolation(t)}
        if body.get("tableau"):
            variant = body.get("variant", "A")
            if variant not in ("A", "B"):
                raise ServiceError("bad-request", f"variant must be 'A' or 'B', got {variant!r}")
            point, tableau = de_casteljau(curve, t, variant)
            out["levels"] = [[list(map(float, pt)) for pt in level] for level in tableau.levels]
        else:
            point = evaluate_direct(curve, t)
        out["point"] = [float(c) for c in point]
        out["polygon_distance"] = polygon_distance(curve)
        return out
    surface = doc.surface()
    u, v = _number(body, "u"), _number(body, "v")
    point = de_casteljau_surface(surface, u, v)
    return {
        "point": [float(c) for c in point],
        "extrapolation": is_extrapolation(u) or is_extrapolation(v),
    }


def handle_sample(body: dict) -> dict:
    doc = _scene(body)
    if doc.kind == "curve":
        count = int(body.get("count", 101))
        curve = doc.curve()
        pts = sample_curve(curve, count)
        return {
            "points": [[float(c) for c in pt] for pt in pts],
            "polygon_distance": polygon_distance(curve),
        }
    count_u = int(body.get("count_u", 17))
    count_v = int(body.get("count_v", 17))
    mesh = sample_grid(doc.surface(), count_u, count_v)
    return {
        "vertices": [[float(c) for c in pt] for pt in mesh.vertices],
        "faces": [list(face) for face in mesh.faces],
        "count_u": mesh.count_u,
        "count_v": mesh.count_v,
    }


def handle_elevate(body: dict) -> dict:
    doc = _scene(body)
    times = int(body.get("times", 1))
    if doc.kind == "curve":
        elevated = degree_elevate_iterated(doc.curve(), times)
        new_doc = SceneDocument.from_curve(elevated, doc.metadata)
    else:
        surface = doc.surface()
        if times < 1:
            raise ServiceError("bad-request", "times must be positive")
        for _ in range(times):
            surface = degree_elevate_surface(surface)
        new_doc = SceneDocument.from_surface(surface, doc.metadata)
    return {"scene": new_doc.to_obj()}


def handle_audit(body: dict) -> dict:
    n_max = int(body.get("n_max", 8))
    params_set = None
    if "params" in body:
        try:
            params_set = tuple(PQParams(p, q) for p, q in body["params"])
        except (TypeError, ValueError) as exc:
            raise ServiceError("bad-request", f"invalid params list: {exc}") from None
    reports = identity_audit(n_max, params_set) if params_set else identity_audit(n_max)
    return {
        "reports": [rep.to_dict() for rep in reports],
        "passed": all(rep.passed for rep in reports),
    }


_POST_ROUTES = {
    "/eval": handle_eval,
    "/sample": handle_sample,
    "/elevate": handle_elevate,
    "/audit": handle_audit,
}


class _Handler(BaseHTTPRequestHandler):
    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _reply(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        path, _, query = self.path.partition("?")
        request_id = None
        for part in query.split("&"):
            if part.startswith("id="):
                request_id = part[3:]
        if path == "/health":
            self._reply(200, {"id": request_id, "ok": True})
        else:
            self._reply(404, {"id": request_id, "error": {"code": "not-found", "message": path}})

    def do_POST(self):
        request_id = None
        try:
            length = int(self.headers.get("Content-Length", "0"))
            try:
                body = json.loads(self.rfile.read(length) or b"{}")
            except json.JSONDecodeError as exc:
                raise ServiceError("bad-request", f"invalid JSON body: {exc.msg}") from None
            if not isinstance(body, dict):
                raise ServiceError("bad-request", "request body must be an object")
            request_id = body.get("id")
            handler = _POST_ROUTES.get(self.path)
            if handler is None:
                raise ServiceError("not-found", f"unknown endpoint {self.path}", status=404)
            try:
                payload = handler(body)
            except (SceneError, ValueError, OverflowError) as exc:
                raise ServiceError("bad-request", str(exc)) from None
            payload["id"] = request_id
            self._reply(200, payload)
        except ServiceError as exc:
            self._reply(
                exc.status,
                {"id": request_id, "error": {"code": exc.code, "message": str(exc)}},
            )
        except Exception as exc:  # internal fault: never crash the connection
            self._reply(
                500,
                {"id": request_id, "error": {"code": "internal", "message": str(exc)}},
            )


def create_server(host: str = "127.0.0.1", port: int | None = None) -> ThreadingHTTPServer:
    """Bound but not yet serving; port 0 picks a free one (useful in tests)."""
    if port is None:
        port = default_port()
    return ThreadingHTTPServer((host, port), _Handler)


def run_server(host: str = "127.0.0.1", port: int | None = None) -> None:
    server = create_server(host, port)
    actual = server.server_address[1]
    print(f"serving on http://{host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()

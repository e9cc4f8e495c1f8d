"""JSON-over-HTTP backend for the interactive explorer.

Stateless handlers over pure library calls; every request carries the full
matrix, so identical requests always produce identical responses.  Binds
loopback by default: this is a local explorer backend, not a deployment
target.

Endpoints (quiver payloads use the JSON quiver format, vertices 1-based):

    GET  /api/presets                      -> {"presets": [names]}
    POST /api/mutate     {"b": Q, "k": v}  -> {"b": Q'}
    POST /api/period     {"b": Q, "max"?}  -> {"period": m | null}
    POST /api/sequence   {"b": Q, "terms"?} -> {"terms": [decimal strings]}
    POST /api/decompose  {"b": Q}          -> {"layers": .., "report": ..}
    POST /api/recurrence {"b": Q}          -> {"formula": .., "period": ..}

Malformed bodies get 400, domain errors 422, both as {"error": msg}.  When
a static directory is configured (the bundled web UI by default), GET /
serves it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import periodicity as per_mod
from . import recurrence as rec_mod
from .errors import DomainError
from .quiver import ExchangeMatrix


class RequestError(Exception):
    """Malformed request payload (HTTP 400)."""


def _parse_matrix(payload: dict) -> ExchangeMatrix:
    if "b" not in payload:
        raise RequestError("missing field 'b'")
    data = payload["b"]
    if isinstance(data, list):
        data = {"n": len(data), "frozen": 0, "b": data}
    if not isinstance(data, dict):
        raise RequestError("'b' must be a quiver object or a matrix")
    try:
        return ExchangeMatrix.from_json_dict(data)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc


def _require_int(payload: dict, key: str, default=None) -> int:
    if key not in payload:
        if default is None:
            raise RequestError(f"missing field '{key}'")
        return default
    value = payload[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise RequestError(f"field '{key}' must be an integer")
    return value


def _handle_presets(_payload) -> dict:
    names = rec_mod.preset_names()
    return {
        "presets": names,
        "quivers": {name: rec_mod.preset(name).to_json_dict() for name in names},
    }


def _handle_mutate(payload: dict) -> dict:
    B = _parse_matrix(payload)
    k = _require_int(payload, "k")
    try:
        mutated = B.mutate(k)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    return {"b": mutated.to_json_dict()}


def _handle_period(payload: dict) -> dict:
    B = _parse_matrix(payload)
    max_m = _require_int(payload, "max", default=2 * B.n)
    return {"period": per_mod.detect_period(B, max_m)}


def _handle_sequence(payload: dict) -> dict:
    B = _parse_matrix(payload)
    terms = _require_int(payload, "terms", default=12)
    if terms < 1 or terms > 500:
        raise RequestError("field 'terms' must be between 1 and 500")
    rec = _recurrence_for(B)
    run = rec_mod.iterate(
        rec,
        [Fraction(1)] * rec.order,
        terms,
        [Fraction(1)] * rec.num_params,
    )
    return {"terms": [str(t) for t in run.terms]}


def _recurrence_for(B: ExchangeMatrix):
    period = per_mod.detect_period(B.mutable_part(), 2)
    if period == 1:
        return rec_mod.recurrence_from_period1(B)
    if period == 2 and B.m_frozen == 0:
        return rec_mod.recurrence_from_period2(B)
    raise DomainError("matrix has no mutation period <= 2; cannot form a recurrence")


def _handle_decompose(payload: dict) -> dict:
    B = _parse_matrix(payload)
    layers = per_mod.decompose_period1(B)
    return {
        "layers": {str(level): list(coeffs) for level, coeffs in layers.items()},
        "report": per_mod.layer_report(B.n, layers),
    }


def _handle_recurrence(payload: dict) -> dict:
    B = _parse_matrix(payload)
    rec = _recurrence_for(B)
    period = 2 if isinstance(rec, rec_mod.RecurrencePair) else 1
    return {"formula": rec.render(), "period": period}


_POST_ROUTES = {
    "/api/mutate": _handle_mutate,
    "/api/period": _handle_period,
    "/api/sequence": _handle_sequence,
    "/api/decompose": _handle_decompose,
    "/api/recurrence": _handle_recurrence,
}

_GET_ROUTES = {
    "/api/presets": _handle_presets,
}

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
}


def default_static_dir() -> Path | None:
    candidate = Path(__file__).resolve().parents[2] / "frontend"
    return candidate if (candidate / "index.html").exists() else None


class ExplorerHandler(BaseHTTPRequestHandler):
    static_dir: Path | None = None

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, status: int, body: dict) -> None:
        raw = json.dumps(body).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(raw)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(raw)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        handler = _GET_ROUTES.get(self.path)
        if handler is not None:
            self._send_json(200, handler(None))
            return
        if self.static_dir is not None and self._serve_static():
            return
        self._send_json(404, {"error": f"no such endpoint: {self.path}"})

    def _serve_static(self) -> bool:
        rel = self.path.lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        try:
            target.relative_to(self.static_dir.resolve())
        except ValueError:
            return False
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            return False
        raw = target.read_bytes()
        self.send_response(200)
        ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(raw)))
        self.end_headers()
        self.wfile.write(raw)
        return True

    def do_POST(self):
        handler = _POST_ROUTES.get(self.path)
        if handler is None:
            self._send_json(404, {"error": f"no such endpoint: {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            payload = json.loads(self.rfile.read(length) or b"{}")
            if not isinstance(payload, dict):
                raise RequestError("request body must be a JSON object")
        except (json.JSONDecodeError, ValueError) as exc:
            self._send_json(400, {"error": f"malformed request body: {exc}"})
            return
        try:
            self._send_json(200, handler(payload))
        except RequestError as exc:
            self._send_json(400, {"error": str(exc)})
        except DomainError as exc:
            self._send_json(422, {"error": str(exc)})


def create_server(
    port: int, host: str = "127.0.0.1", static_dir: Path | None = None
) -> ThreadingHTTPServer:
    handler = type(
        "BoundExplorerHandler",
        (ExplorerHandler,),
        {"static_dir": static_dir if static_dir is not None else default_static_dir()},
    )
    return ThreadingHTTPServer((host, port), handler)


def serve(port: int, host: str = "127.0.0.1") -> None:
    server = create_server(port, host)
    static = getattr(server.RequestHandlerClass, "static_dir", None)
    print(f"quiverseq explorer backend on http://{host}:{server.server_address[1]}")
    if static:
        print(f"serving UI from {static}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()

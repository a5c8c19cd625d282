"""HTTP facade over a GraphService.

Endpoints::

    GET /graph?ego_type=&ego_id=&relation=&view=&k=&lens_from=&lens_to=&format=
    GET /search?q=&limit=
    GET /meta
    GET /            (UI assets from a directory, if configured)

Graph responses are image/svg+xml or application/json depending on
``format``. The dataset and config are immutable, so requests are served
concurrently; the response cache inside GraphService is the only shared
mutable state.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .errors import (
    ConfigError,
    EgolensError,
    InvalidRangeError,
    NotFoundError,
    RequestError,
)
from .service import GraphRequest, GraphService

__all__ = ["make_server"]

log = logging.getLogger(__name__)

STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".svg": "image/svg+xml; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".map": "application/json; charset=utf-8",
    ".png": "image/png",
    ".ico": "image/x-icon",
}

PLACEHOLDER_PAGE = (
    "<!doctype html><html><head><title>egolens</title></head><body>"
    "<h1>egolens</h1><p>No UI bundle configured. The API lives at "
    "<code>/graph</code>, <code>/search</code>, and <code>/meta</code>.</p>"
    "</body></html>"
)


def _single(params: dict[str, list[str]], name: str) -> str | None:
    values = params.get(name)
    if not values:
        return None
    return values[0]


def _int_param(params: dict[str, list[str]], name: str) -> int | None:
    raw = _single(params, name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise RequestError(f"parameter {name} must be an integer, got {raw!r}") from None


def parse_graph_request(params: dict[str, list[str]]) -> GraphRequest:
    ego_type = _single(params, "ego_type")
    ego_id = _single(params, "ego_id")
    relation = _single(params, "relation")
    if not ego_type or not ego_id or not relation:
        raise RequestError("ego_type, ego_id, and relation are required")
    lens_from = _int_param(params, "lens_from")
    lens_to = _int_param(params, "lens_to")
    if (lens_from is None) != (lens_to is None):
        raise RequestError("lens_from and lens_to must be given together")
    lens = (lens_from, lens_to) if lens_from is not None else None
    return GraphRequest(
        ego_type=ego_type,
        ego_id=ego_id,
        relation=relation,
        view=_single(params, "view") or "timecolor",
        k=_int_param(params, "k"),
        lens=lens,
        format=_single(params, "format") or "svg",
    )


def make_server(
    service: GraphService,
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    """A ready-to-run threading HTTP server; call serve_forever() on it."""
    ui_root = Path(ui_dir).resolve() if ui_dir is not None else None

    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # plain access log
            log.info("%s %s", self.address_string(), fmt % args)

        def _send(self, status: int, body: bytes, content_type: str) -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _send_error_json(self, status: int, message: str) -> None:
            body = json.dumps({"error": message}).encode("utf-8")
            self._send(status, body, "application/json; charset=utf-8")

        def _serve_static(self, path: str) -> None:
            if ui_root is None:
                if path in ("/", "/index.html"):
                    self._send(
                        200, PLACEHOLDER_PAGE.encode("utf-8"),
                        "text/html; charset=utf-8",
                    )
                else:
                    self._send_error_json(404, f"no such path {path}")
                return
            relative = path.lstrip("/") or "index.html"
            target = (ui_root / relative).resolve()
            if ui_root not in target.parents and target != ui_root:
                self._send_error_json(404, "not found")
                return
            if target.is_dir():
                target = target / "index.html"
            if not target.is_file():
                self._send_error_json(404, f"no such path {path}")
                return
            content_type = STATIC_TYPES.get(
                target.suffix, "application/octet-stream"
            )
            self._send(200, target.read_bytes(), content_type)

        def do_GET(self) -> None:  # noqa: N802 (http.server API)
            parsed = urlparse(self.path)
            params = parse_qs(parsed.query)
            try:
                if parsed.path == "/graph":
                    body, content_type = service.handle_graph(
                        parse_graph_request(params)
                    )
                    self._send(200, body, content_type)
                elif parsed.path == "/search":
                    query = _single(params, "q") or ""
                    limit = _int_param(params, "limit")
                    rows = service.handle_search(
                        query, 20 if limit is None else limit
                    )
                    self._send(
                        200,
                        json.dumps({"results": rows}, sort_keys=True).encode("utf-8"),
                        "application/json; charset=utf-8",
                    )
                elif parsed.path == "/meta":
                    self._send(
                        200,
                        json.dumps(service.meta(), sort_keys=True).encode("utf-8"),
                        "application/json; charset=utf-8",
                    )
                else:
                    self._serve_static(parsed.path)
            except NotFoundError as exc:
                self._send_error_json(404, str(exc))
            except (RequestError, InvalidRangeError, ValueError) as exc:
                self._send_error_json(400, str(exc))
            except (ConfigError, EgolensError) as exc:
                log.exception("request failed")
                self._send_error_json(500, str(exc))

    server = ThreadingHTTPServer((host, port), Handler)
    server.daemon_threads = True
    return server

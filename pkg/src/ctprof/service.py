"""Local HTTP service exposing the engine to the studio UI and to scripts.

JSON API under /api, static assets (the built studio) under /. All shared
state is immutable after startup, so request handling is freely concurrent
and every response is deterministic for identical requests. Loopback-only
by default: this is a local design tool, not a deployment target.
"""

from __future__ import annotations

import errno
import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import catalog, paths
from .analyzer import analyze
from .corpus import Corpus, characteristics_taxonomy, competencies_taxonomy, load_corpus
from .descriptor import (
    derive_characteristics,
    parse_descriptor,
    profile_from_json,
    validate_descriptor,
)
from .designer import design_constraints, query_from_json
from .errors import ParseError, PortInUse, SchemaError
from .ruleset import RuleSet, default_ruleset, ruleset_to_json_dict

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json; charset=utf-8",
    ".txt": "text/plain; charset=utf-8",
}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


class AppState:
    """Immutable per-server data: ruleset, fixture corpus, static root."""

    def __init__(self, ruleset: RuleSet, fixtures: Corpus | None, static_root: Path):
        self.ruleset = ruleset
        self.fixtures = fixtures
        self.static_root = static_root
        self.catalog_json = catalog.catalog_json()
        self.ruleset_json = ruleset_to_json_dict(ruleset)

    def fixture_index(self):
        if self.fixtures is None:
            return []
        return [
            {"name": e.name, "group": e.group, "domain": e.profile.domain}
            for e in sorted(self.fixtures.entries, key=lambda e: e.name)
        ]

    def fixture(self, name: str):
        if self.fixtures is None:
            return None
        for entry in self.fixtures.entries:
            if entry.name == name:
                return entry
        return None


class _Handler(BaseHTTPRequestHandler):
    state: AppState  # assigned on the server class

    # -- plumbing ---------------------------------------------------------

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass

    def _send(self, code: int, body: bytes, content_type: str):
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _json(self, code: int, obj):
        self._send(code, _dumps(obj).encode("utf-8"), "application/json; charset=utf-8")

    def _issues(self, issues):
        self._json(400, {"issues": [
            {"code": i.code, "path": i.path, "message": i.message} for i in issues
        ]})

    def _not_found(self, what: str):
        self._json(404, {"error": f"unknown {what}"})

    def _body(self) -> str:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length).decode("utf-8")

    # -- GET ---------------------------------------------------------------

    def do_GET(self):  # noqa: N802 - stdlib naming
        url = urlparse(self.path)
        route = url.path
        if route == "/api/catalog":
            return self._json(200, self.state.catalog_json)
        if route == "/api/ruleset":
            return self._json(200, self.state.ruleset_json)
        if route == "/api/fixtures":
            return self._json(200, {"fixtures": self.state.fixture_index()})
        if route.startswith("/api/fixtures/"):
            name = route[len("/api/fixtures/"):]
            entry = self.state.fixture(name)
            if entry is None:
                return self._not_found("fixture")
            from .descriptor import descriptor_to_json_dict
            return self._json(200, {
                "name": entry.name,
                "group": entry.group,
                "domain": entry.profile.domain,
                "descriptor": descriptor_to_json_dict(entry.descriptor),
                "profile": entry.profile.to_json_dict(),
            })
        if route == "/api/corpus/taxonomy":
            return self._taxonomy(parse_qs(url.query))
        if route.startswith("/api/"):
            return self._not_found("endpoint")
        return self._static(route)

    def _taxonomy(self, query):
        if self.state.fixtures is None:
            return self._not_found("corpus")
        kind = (query.get("kind") or ["characteristics"])[0]
        collapse = (query.get("collapse") or ["false"])[0]
        if kind not in ("characteristics", "competencies") or collapse not in ("true", "false"):
            from .descriptor import ValidationIssue
            return self._issues([ValidationIssue(
                "UnknownEnum", "query",
                "kind must be characteristics|competencies, collapse true|false")])
        if kind == "characteristics":
            table = characteristics_taxonomy(self.state.fixtures)
        else:
            table = competencies_taxonomy(self.state.fixtures, self.state.ruleset,
                                          collapse_groups=collapse == "true")
        return self._json(200, table.to_json_dict())

    def _static(self, route: str):
        root = self.state.static_root.resolve()
        relative = route.lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            return self._not_found("path")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            return self._not_found("path")
        content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)

    # -- POST ---------------------------------------------------------------

    def do_POST(self):  # noqa: N802 - stdlib naming
        route = urlparse(self.path).path
        handlers = {
            "/api/analyze": self._post_analyze,
            "/api/derive": self._post_derive,
            "/api/design": self._post_design,
        }
        handler = handlers.get(route)
        if handler is None:
            return self._not_found("endpoint")
        body = self._body()
        try:
            data = json.loads(body) if body.strip() else None
        except json.JSONDecodeError as exc:
            from .descriptor import ValidationIssue
            return self._issues([ValidationIssue("BadFieldPresence", "(document)",
                                                 f"invalid JSON: {exc.msg}")])
        return handler(body, data)

    def _descriptor_profile(self, body: str):
        """Descriptor text -> (profile, None) or (None, handled response)."""
        try:
            descriptor = parse_descriptor(body)
        except ParseError as exc:
            from .descriptor import ValidationIssue
            return None, self._issues([ValidationIssue("BadFieldPresence", "(document)", str(exc))])
        except SchemaError as exc:
            return None, self._issues(exc.issues)
        issues = validate_descriptor(descriptor)
        if issues:
            return None, self._issues(issues)
        return derive_characteristics(descriptor), None

    def _post_analyze(self, body: str, data):
        if isinstance(data, dict) and "components" in data:
            profile, handled = self._descriptor_profile(body)
            if profile is None:
                return handled
        else:
            profile, issues = profile_from_json(data)
            if issues:
                return self._issues(issues)
        report = analyze(profile, self.state.ruleset)
        return self._json(200, report.to_json_dict())

    def _post_derive(self, body: str, data):
        profile, handled = self._descriptor_profile(body)
        if profile is None:
            return handled
        return self._json(200, profile.to_json_dict())

    def _post_design(self, body: str, data):
        query, issues = query_from_json(data)
        if issues:
            return self._issues(issues)
        solution = design_constraints(query, self.state.ruleset)
        return self._json(200, solution.to_json_dict())


def build_server(port: int = 8787, ruleset: RuleSet | None = None,
                 fixtures_directory=None, static_root: Path | None = None,
                 host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Create the HTTP server (bound, not yet serving)."""
    fixtures = None
    directory = Path(fixtures_directory) if fixtures_directory else paths.fixtures_dir()
    if directory.is_dir():
        fixtures = load_corpus(directory)
    state = AppState(
        ruleset=ruleset or default_ruleset(),
        fixtures=fixtures,
        static_root=static_root or paths.static_dir(),
    )
    handler = type("Handler", (_Handler,), {"state": state})
    try:
        return ThreadingHTTPServer((host, port), handler)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            raise PortInUse(f"port {port} is not available") from exc
        raise


def serve(port: int = 8787, ruleset: RuleSet | None = None,
          fixtures_directory=None, static_root: Path | None = None) -> None:
    """Serve until interrupted."""
    server = build_server(port, ruleset, fixtures_directory, static_root)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def start_background(port: int = 0, **kwargs) -> tuple[ThreadingHTTPServer, threading.Thread]:
    """Serve on a daemon thread; port 0 picks a free port (for tests/tools)."""
    server = build_server(port, **kwargs)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread

"""HTTP JSON API with in-memory game sessions, powering the web client.

Endpoints (ordinals travel as grammar strings, URL-encoded in queries):

    POST /games                    {"game": "welter"|"nim", "position": [..],
                                    "human_first": bool, "seed": int}
    GET  /games/{id}
    POST /games/{id}/moves         {"from": "w^2+w*5+25", "to": "w^2+w*4+30"}
    POST /games/{id}/engine-move
    GET  /games/{id}/analysis?candidates=FROM->TO,FROM->TO

Errors: 400 malformed input, 404 unknown session, 409 move out of turn or
game over, 422 illegal move with a reason string (occupied / not smaller /
no such coin).  The engine core is pure, so analysis runs concurrently;
mutations are serialized per session.
"""

from __future__ import annotations

import json
import mimetypes
import os
import random
import threading
import uuid
from dataclasses import dataclass, field
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .moves import Move
from .nim_transfinite import grundy_nim, winning_moves_nim
from .oracle import apply_move, engine_move, is_terminal
from .ordinal import Ordinal, cmp, format_ordinal, omega_unsplit, parse_ordinal
from .welter_transfinite import (
    blocks,
    canonical_position,
    grundy_welter_transfinite,
    winning_moves_transfinite,
)

DEFAULT_BIND = "127.0.0.1:8000"
BIND_ENV_VAR = "WELTER_BIND"


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class GameSession:
    id: str
    kind: str
    initial: tuple[Ordinal, ...]
    position: tuple[Ordinal, ...]
    human_first: bool
    to_move: str
    status: str
    history: list[dict] = field(default_factory=list)
    rng: random.Random = field(default_factory=random.Random)
    budget: int = 64
    lock: threading.Lock = field(default_factory=threading.Lock)


def _parse_ordinal_lenient(text: str) -> Ordinal:
    # '+' decodes to ' ' when a query string arrives unencoded; the grammar
    # itself never needs a space, so retrying with '+' restored is safe.
    try:
        return parse_ordinal(text)
    except ValueError:
        if " " in text:
            return parse_ordinal(text.replace(" ", "+"))
        raise


def session_payload(s: GameSession) -> dict:
    return {
        "id": s.id,
        "game": s.kind,
        "position": [format_ordinal(c) for c in s.position],
        "to_move": s.to_move,
        "status": s.status,
        "human_first": s.human_first,
        "history": list(s.history),
    }


def _value_of(position, kind: str) -> Ordinal:
    return grundy_nim(position) if kind == "nim" else grundy_welter_transfinite(position)


def _check_move(position, kind: str, source: Ordinal, target: Ordinal) -> None:
    """Raise ApiError(422, reason) unless source -> target is legal."""
    if kind == "nim":
        if source not in position:
            raise ApiError(422, "no such coin")
        if not cmp(target, source) < 0:
            raise ApiError(422, "not smaller")
        return
    occupied = set(position)
    if source not in occupied:
        raise ApiError(422, "no such coin")
    if target in occupied:
        raise ApiError(422, "occupied")
    if not cmp(target, source) < 0:
        raise ApiError(422, "not smaller")


class SessionStore:
    """In-memory sessions with optional JSON-lines snapshots."""

    def __init__(self, snapshot_path: str | None = None, seed: int = 0):
        self.sessions: dict[str, GameSession] = {}
        self.lock = threading.Lock()
        self.snapshot_path = snapshot_path
        self.seed = seed

    def create(self, kind: str, position_texts, human_first: bool, seed=None, budget=64) -> GameSession:
        if kind not in ("nim", "welter"):
            raise ApiError(400, f"unknown game kind {kind!r}")
        if not isinstance(position_texts, (list, tuple)):
            raise ApiError(400, "position must be a list of ordinal strings")
        try:
            coins = tuple(_parse_ordinal_lenient(str(t)) for t in position_texts)
            position = coins if kind == "nim" else canonical_position(coins)
        except ValueError as exc:
            raise ApiError(400, str(exc)) from exc
        session = GameSession(
            id=uuid.uuid4().hex[:12],
            kind=kind,
            initial=position,
            position=position,
            human_first=bool(human_first),
            to_move="human" if human_first else "engine",
            status="ongoing",
            rng=random.Random(self.seed if seed is None else int(seed)),
            budget=int(budget),
        )
        self._settle_status(session)
        with self.lock:
            self.sessions[session.id] = session
        self._write_snapshot(self._snapshot_record(session))
        return session

    def get(self, session_id: str) -> GameSession:
        with self.lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"no session {session_id!r}")
        return session

    def _settle_status(self, s: GameSession) -> None:
        if is_terminal(s.position, s.kind):
            s.status = "engine_won" if s.to_move == "human" else "human_won"

    def _record(self, s: GameSession, by: str, move: Move) -> None:
        s.history.append(
            {"by": by, "from": format_ordinal(move.source), "to": format_ordinal(move.target)}
        )
        s.position = apply_move(s.position, move, s.kind)
        if is_terminal(s.position, s.kind):
            s.status = f"{by}_won"
        else:
            s.to_move = "engine" if by == "human" else "human"

    def human_move(self, session_id: str, from_text: str, to_text: str) -> GameSession:
        s = self.get(session_id)
        with s.lock:
            if s.status != "ongoing":
                raise ApiError(409, "game over")
            if s.to_move != "human":
                raise ApiError(409, "move out of turn")
            try:
                source = _parse_ordinal_lenient(str(from_text))
                target = _parse_ordinal_lenient(str(to_text))
            except ValueError as exc:
                raise ApiError(400, str(exc)) from exc
            _check_move(s.position, s.kind, source, target)
            index = list(s.position).index(source)
            self._record(s, "human", Move(index=index, source=source, target=target))
            record = self._snapshot_record(s)
        self._write_snapshot(record)
        return s

    def engine_move(self, session_id: str) -> GameSession:
        s = self.get(session_id)
        with s.lock:
            if s.status != "ongoing":
                raise ApiError(409, "game over")
            if s.to_move != "engine":
                raise ApiError(409, "move out of turn")
            move = engine_move(s.position, s.kind, s.rng, s.budget)
            self._record(s, "engine", move)
            record = self._snapshot_record(s)
        self._write_snapshot(record)
        return s

    def analysis(self, session_id: str, candidates: list[tuple[str, str]]) -> dict:
        s = self.get(session_id)
        with s.lock:
            position, kind = s.position, s.kind
        value = _value_of(position, kind)
        if kind == "nim":
            moves = winning_moves_nim(position)
            block_rows = None
        else:
            moves = winning_moves_transfinite(position)
            table = blocks(position)
            # "prefix" is the w*lambda part as a grammar string ("" for the
            # finite block), so clients can label square m inside a block
            # without any ordinal arithmetic of their own.
            block_rows = [
                {
                    "lambda": format_ordinal(lam),
                    "prefix": "" if lam.is_zero else format_ordinal(omega_unsplit(lam, 0)),
                    "squares": sorted(table[lam]),
                }
                for lam in sorted(table)
            ]
        what_if = []
        for from_text, to_text in candidates:
            entry: dict = {"from": from_text, "to": to_text}
            try:
                source = _parse_ordinal_lenient(from_text)
                target = _parse_ordinal_lenient(to_text)
                _check_move(position, kind, source, target)
            except ApiError as exc:
                entry.update(legal=False, reason=exc.message)
                what_if.append(entry)
                continue
            except ValueError as exc:
                entry.update(legal=False, reason=str(exc))
                what_if.append(entry)
                continue
            index = list(position).index(source)
            after = apply_move(position, Move(index=index, source=source, target=target), kind)
            entry.update(legal=True, value=format_ordinal(_value_of(after, kind)))
            what_if.append(entry)
        out = {
            "value": format_ordinal(value),
            "p_position": value.is_zero,
            "winning_moves": [
                {"from": format_ordinal(m.source), "to": format_ordinal(m.target)}
                for m in moves
            ],
            "what_if": what_if,
        }
        if block_rows is not None:
            out["blocks"] = block_rows
        return out

    def _snapshot_record(self, s: GameSession) -> dict:
        # caller holds s.lock, so the capture is consistent
        record = session_payload(s)
        record["initial"] = [format_ordinal(c) for c in s.initial]
        return record

    def _write_snapshot(self, record: dict) -> None:
        if not self.snapshot_path:
            return
        with self.lock:
            with open(self.snapshot_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")

    def restore(self, path: str) -> int:
        """Load the latest snapshot of each session from a JSON-lines file."""
        latest: dict[str, dict] = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    record = json.loads(line)
                    latest[record["id"]] = record
        for record in latest.values():
            session = GameSession(
                id=record["id"],
                kind=record["game"],
                initial=tuple(parse_ordinal(t) for t in record["initial"]),
                position=tuple(parse_ordinal(t) for t in record["position"]),
                human_first=record["human_first"],
                to_move=record["to_move"],
                status=record["status"],
                history=list(record["history"]),
                rng=random.Random(self.seed),
            )
            if session.kind == "welter":
                session.position = canonical_position(session.position)
            with self.lock:
                self.sessions[session.id] = session
        return len(latest)


def _split_candidates(raw: str) -> list[tuple[str, str]]:
    out = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "->" not in chunk:
            raise ApiError(400, f"candidate {chunk!r} must look like FROM->TO")
        from_text, to_text = chunk.split("->", 1)
        out.append((from_text.strip(), to_text.strip()))
    return out


def make_handler(store: SessionStore, static_dir: str | None):
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):  # quiet by default
            pass

        def _send_json(self, status: int, payload: dict) -> None:
            body = json.dumps(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_json(self) -> dict:
            try:
                length = int(self.headers.get("Content-Length", "0"))
            except ValueError:
                raise ApiError(400, "invalid Content-Length")
            raw = self.rfile.read(length) if length else b"{}"
            try:
                payload = json.loads(raw.decode("utf-8") or "{}")
            except json.JSONDecodeError:
                raise ApiError(400, "invalid JSON body")
            if not isinstance(payload, dict):
                raise ApiError(400, "JSON body must be an object")
            return payload

        def _serve_static(self, path: str) -> None:
            if static_root is None:
                self._send_json(404, {"error": "not found"})
                return
            rel = path.lstrip("/") or "index.html"
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                self._send_json(404, {"error": "not found"})
                return
            ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
            body = target.read_bytes()
            self.send_response(HTTPStatus.OK)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_OPTIONS(self):
            self.send_response(HTTPStatus.NO_CONTENT)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_GET(self):
            parsed = urlparse(self.path)
            parts = [p for p in parsed.path.split("/") if p]
            try:
                if len(parts) == 2 and parts[0] == "games":
                    session = store.get(parts[1])
                    self._send_json(200, session_payload(session))
                    return
                if len(parts) == 3 and parts[0] == "games" and parts[2] == "analysis":
                    query = parse_qs(parsed.query)
                    raw = ",".join(query.get("candidates", []))
                    self._send_json(200, store.analysis(parts[1], _split_candidates(raw)))
                    return
            except ApiError as exc:
                self._send_json(exc.status, {"error": exc.message})
                return
            self._serve_static(parsed.path)

        def do_POST(self):
            parsed = urlparse(self.path)
            parts = [p for p in parsed.path.split("/") if p]
            try:
                body = self._read_json()
                if parts == ["games"]:
                    session = store.create(
                        kind=body.get("game", "welter"),
                        position_texts=body.get("position", []),
                        human_first=body.get("human_first", True),
                        seed=body.get("seed"),
                        budget=body.get("budget", 64),
                    )
                    self._send_json(201, session_payload(session))
                    return
                if len(parts) == 3 and parts[0] == "games" and parts[2] == "moves":
                    if "from" not in body or "to" not in body:
                        raise ApiError(400, "body must carry 'from' and 'to'")
                    session = store.human_move(parts[1], body["from"], body["to"])
                    self._send_json(200, session_payload(session))
                    return
                if len(parts) == 3 and parts[0] == "games" and parts[2] == "engine-move":
                    session = store.engine_move(parts[1])
                    self._send_json(200, session_payload(session))
                    return
                raise ApiError(404, "not found")
            except ApiError as exc:
                self._send_json(exc.status, {"error": exc.message})

    return Handler


def parse_bind(bind: str) -> tuple[str, int]:
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"bind address must be HOST:PORT, got {bind!r}")
    return host, int(port)


def make_server(
    bind: str | None = None,
    snapshot: str | None = None,
    static_dir: str | None = None,
    seed: int = 0,
) -> ThreadingHTTPServer:
    bind = bind or os.environ.get(BIND_ENV_VAR) or DEFAULT_BIND
    store = SessionStore(snapshot_path=snapshot, seed=seed)
    if snapshot and os.path.exists(snapshot):
        store.restore(snapshot)
    host, port = parse_bind(bind)
    server = ThreadingHTTPServer((host, port), make_handler(store, static_dir))
    server.store = store  # handy for tests
    return server


def serve(
    bind: str | None = None,
    snapshot: str | None = None,
    static_dir: str | None = None,
    seed: int = 0,
) -> None:
    server = make_server(bind=bind, snapshot=snapshot, static_dir=static_dir, seed=seed)
    host, port = server.server_address[:2]
    print(f"welter API listening on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()

"""Interactive human-as-robber sessions over a JSON wire protocol.

The protocol is transport-agnostic: SessionManager.handle maps one request
object to one response object, and is exposed over a WebSocket by serve()
(or over line-delimited stdio in tests).  Each session serializes its
commands behind a lock; sessions are fully isolated from each other.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from .copsets import (
    BadSpec,
    CopSetSpec,
    Verdict,
    classify,
    contains,
    even_rows_spec,
    halfplane_spec,
    parse_spec,
    spec_to_json,
    theorem1_spec,
)
from .engine import _static_capture  # same capture semantics as batch play
from .geometry import Move, Point
from .strategy import Roster, cop_turn, match_state, potentials, select_active_cops

PLACEMENT_LIMIT = 10**6

PRESETS = {
    "theorem1": theorem1_spec,
    "halfplane": lambda: halfplane_spec(),
    "sublattice": lambda: even_rows_spec(),
}


class SessionError(Exception):
    def __init__(self, code: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.detail = detail


@dataclass
class Session:
    id: str
    spec: CopSetSpec
    verdict: Verdict
    phase: str = "awaiting_placement"  # -> awaiting_robber_move -> finished
    robber: Point | None = None
    roster: Roster = field(default_factory=dict)
    turn: int = 0
    bound: int = 0
    status: str = "running"
    captured_by: str | None = None
    moves: list[Move] = field(default_factory=list)
    last_access: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)

    def view(self) -> dict:
        pots = potentials(self.roster, self.robber) if self.robber is not None else {}
        matched = match_state(self.roster, self.robber) if self.robber is not None else {}
        return {
            "id": self.id,
            "turn": self.turn,
            "actor": "robber",
            "robber": list(self.robber) if self.robber is not None else None,
            "cops": {d.label: list(c.pos) for d, c in self.roster.items()},
            "potentials": {d.label: v for d, v in pots.items()},
            "matched": {d.label: v for d, v in matched.items()},
            "status": self.status,
            "phase": self.phase,
            "bound": self.bound,
            "verdict": self.verdict.to_json(),
            "spec": spec_to_json(self.spec),
            "dimension": self.spec.dimension,
        }


class SessionManager:
    def __init__(self, idle_timeout_secs: float = 1800.0, clock=time.monotonic):
        self._sessions: dict[str, Session] = {}
        self._timeout = idle_timeout_secs
        self._clock = clock
        self._registry_lock = threading.Lock()

    # -- protocol entry point ------------------------------------------------

    def handle(self, msg: dict) -> dict:
        try:
            if not isinstance(msg, dict) or "op" not in msg:
                raise SessionError("BadSpec", "request must be an object with an 'op'")
            op = msg["op"]
            if op == "create":
                return {"ok": True, "view": self.create(msg)}
            sess = self._get(msg.get("id"))
            with sess.lock:
                sess.last_access = self._clock()
                if op == "place":
                    view = self._place(sess, msg)
                elif op == "move":
                    view = self._move(sess, msg)
                elif op == "state":
                    view = sess.view()
                elif op == "resign":
                    view = self._resign(sess)
                else:
                    raise SessionError("BadSpec", f"unknown op {op!r}")
            return {"ok": True, "view": view}
        except SessionError as exc:
            return {"ok": False, "error": exc.code, "detail": exc.detail}

    def handle_line(self, line: str) -> str:
        """Line-delimited variant for stdio transports and tests."""
        try:
            msg = json.loads(line)
        except json.JSONDecodeError as exc:
            return json.dumps({"ok": False, "error": "BadSpec", "detail": str(exc)})
        return json.dumps(self.handle(msg), sort_keys=True)

    # -- operations ----------------------------------------------------------

    def create(self, msg: dict) -> dict:
        if "preset" in msg:
            name = msg["preset"]
            if name not in PRESETS:
                raise SessionError("BadSpec", f"unknown preset {name!r}")
            spec = PRESETS[name]()
        elif "spec" in msg:
            try:
                spec = parse_spec(msg["spec"])
            except BadSpec as exc:
                raise SessionError("BadSpec", str(exc))
        else:
            raise SessionError("BadSpec", "create needs 'preset' or 'spec'")
        sess = Session(
            id=secrets.token_urlsafe(12),
            spec=spec,
            verdict=classify(spec),
            last_access=self._clock(),
        )
        with self._registry_lock:
            self._sessions[sess.id] = sess
        return sess.view()

    def _get(self, sid) -> Session:
        with self._registry_lock:
            sess = self._sessions.get(sid)
            if sess is not None and self._clock() - sess.last_access > self._timeout:
                del self._sessions[sid]
                sess = None
        if sess is None:
            raise SessionError("UnknownSession", f"no session {sid!r}")
        return sess

    def _place(self, sess: Session, msg: dict) -> dict:
        if sess.phase != "awaiting_placement":
            raise SessionError("WrongPhase", f"cannot place in phase {sess.phase}")
        point = msg.get("point")
        if not isinstance(point, list) or len(point) != sess.spec.dimension:
            raise SessionError("BadSpec", f"point must be a list of {sess.spec.dimension} integers")
        try:
            p: Point = tuple(int(x) for x in point)
        except (TypeError, ValueError):
            raise SessionError("BadSpec", f"point must be integers, got {point!r}")
        if any(abs(x) > PLACEMENT_LIMIT for x in p):
            raise SessionError("BadSpec", f"placement outside |coord| <= {PLACEMENT_LIMIT}")
        sess.robber = p
        sess.roster = select_active_cops(sess.spec, p, partial=not sess.verdict.winning)
        sess.bound = sum(potentials(sess.roster, p).values())
        if _static_capture(sess.spec, p, sess.roster):
            sess.status = "captured"
            sess.phase = "finished"
        else:
            sess.phase = "awaiting_robber_move"
        return sess.view()

    def _parse_move(self, sess: Session, msg: dict) -> Move:
        if msg.get("stay"):
            return Move()
        axis, sign = msg.get("axis"), msg.get("sign")
        if not isinstance(axis, int) or not 1 <= axis <= sess.spec.dimension:
            raise SessionError("IllegalMove", f"axis must be 1..{sess.spec.dimension}, got {axis!r}")
        if sign not in (-1, 1):
            raise SessionError("IllegalMove", f"sign must be +1 or -1, got {sign!r}")
        return Move(axis - 1, sign)

    def _move(self, sess: Session, msg: dict) -> dict:
        if sess.phase != "awaiting_robber_move":
            raise SessionError("WrongPhase", f"cannot move in phase {sess.phase}")
        mv = self._parse_move(sess, msg)
        prev = sess.robber
        sess.turn += 1
        sess.robber = mv.apply(prev)
        sess.moves.append(mv)
        captured_by = None
        for d, cop in sess.roster.items():
            if cop.pos == sess.robber:
                captured_by = d
                break
        if captured_by is None and _static_capture(sess.spec, sess.robber, sess.roster):
            captured_by = "static"
        if captured_by is None:
            for d, cmove in cop_turn(sess.roster, prev, mv).items():
                sess.roster[d] = sess.roster[d].moved(cmove)
            for d, cop in sess.roster.items():
                if cop.pos == sess.robber:
                    captured_by = d
                    break
        if captured_by is not None:
            sess.status = "captured"
            sess.phase = "finished"
            sess.captured_by = (
                captured_by if isinstance(captured_by, str) else captured_by.label
            )
        view = sess.view()
        if sess.captured_by is not None:
            view["capturedBy"] = sess.captured_by
        return view

    def _resign(self, sess: Session) -> dict:
        sess.status = "resigned"
        sess.phase = "finished"
        return sess.view()


# ---------------------------------------------------------------------------
# WebSocket transport


def build_app(manager: SessionManager | None = None):
    manager = manager or SessionManager()
    app = FastAPI(title="latticecops session server")
    app.state.manager = manager

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):
        await ws.accept()
        try:
            while True:
                raw = await ws.receive_text()
                await ws.send_text(manager.handle_line(raw))
        except WebSocketDisconnect:
            pass

    @app.post("/debug/contains")
    async def debug_contains(body: dict):
        # Parity check for client-side static-cop rendering.
        try:
            if "preset" in body:
                if body["preset"] not in PRESETS:
                    return {"ok": False, "error": "BadSpec"}
                spec = PRESETS[body["preset"]]()
            else:
                spec = parse_spec(body.get("spec", {}))
        except BadSpec as exc:
            return {"ok": False, "error": "BadSpec", "detail": str(exc)}
        points = [tuple(int(x) for x in p) for p in body.get("points", [])]
        return {"ok": True, "results": [contains(spec, p) for p in points]}

    return app


def serve(bind: str = "127.0.0.1", port: int = 8642, idle_timeout_secs: float = 1800.0):
    import uvicorn

    app = build_app(SessionManager(idle_timeout_secs=idle_timeout_secs))
    uvicorn.run(app, host=bind, port=port)

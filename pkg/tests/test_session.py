import json

from starlette.testclient import TestClient

from latticecops.copsets import theorem1_spec
from latticecops.engine import GameConfig, run_game
from latticecops.geometry import Move
from latticecops.session import SessionManager, build_app
from latticecops.strategy import Scripted


class FakeClock:
    def __init__(self):
        self.t = 0.0

    def __call__(self):
        return self.t


def mgr(**kw):
    return SessionManager(**kw)


def create(m, **extra):
    resp = m.handle({"op": "create", **extra})
    assert resp["ok"], resp
    return resp["view"]


# -- lifecycle ---------------------------------------------------------------


def test_create_place_move_capture():
    m = mgr()
    view = create(m, preset="theorem1")
    sid = view["id"]
    assert view["phase"] == "awaiting_placement"
    assert view["verdict"]["outcome"] == "winning"
    assert view["dimension"] == 2

    view = m.handle({"op": "place", "id": sid, "point": [1, 1]})["view"]
    assert view["phase"] == "awaiting_robber_move"
    assert view["bound"] == 20
    assert set(view["cops"]) == {"X1+", "X1-", "X2+", "X2-"}

    last = None
    for _ in range(30):
        resp = m.handle({"op": "move", "id": sid, "axis": 1, "sign": 1})
        if not resp["ok"]:
            break
        last = resp["view"]
        if last["phase"] == "finished":
            break
    assert last["status"] == "captured"
    assert last["capturedBy"] == "X1+"
    assert last["turn"] <= 20


def test_stay_move_and_state():
    m = mgr()
    sid = create(m, preset="theorem1")["id"]
    m.handle({"op": "place", "id": sid, "point": [0, 0]})
    view = m.handle({"op": "move", "id": sid, "stay": True})["view"]
    assert view["robber"] == [0, 0]
    assert view["turn"] == 1
    state = m.handle({"op": "state", "id": sid})["view"]
    assert state == view


def test_resign():
    m = mgr()
    sid = create(m, preset="halfplane")["id"]
    view = m.handle({"op": "resign", "id": sid})["view"]
    assert view["status"] == "resigned" and view["phase"] == "finished"
    resp = m.handle({"op": "move", "id": sid, "axis": 1, "sign": 1})
    assert resp == {
        "ok": False,
        "error": "WrongPhase",
        "detail": "cannot move in phase finished",
    }


def test_create_with_inline_spec():
    m = mgr()
    doc = {
        "dimension": 2,
        "generators": [{"kind": "half_space", "axis": 2, "sign": "+", "threshold": 0}],
    }
    view = create(m, spec=doc)
    assert view["verdict"]["outcome"] == "losing"
    assert view["spec"]["dimension"] == 2
    assert view["spec"]["generators"][0]["kind"] == "half_space"
    sid = view["id"]
    # Placing on an occupied half-plane cell captures immediately.
    view = m.handle({"op": "place", "id": sid, "point": [3, 5]})["view"]
    assert view["status"] == "captured" and view["phase"] == "finished"


# -- errors ------------------------------------------------------------------


def test_error_codes():
    m = mgr()
    assert m.handle({"op": "create", "preset": "nope"})["error"] == "BadSpec"
    assert m.handle({"op": "create"})["error"] == "BadSpec"
    assert m.handle({"nonsense": 1})["error"] == "BadSpec"
    assert m.handle({"op": "state", "id": "ghost"})["error"] == "UnknownSession"

    sid = create(m, preset="theorem1")["id"]
    assert m.handle({"op": "move", "id": sid, "axis": 1, "sign": 1})["error"] == "WrongPhase"
    assert m.handle({"op": "place", "id": sid, "point": [1]})["error"] == "BadSpec"
    assert m.handle({"op": "place", "id": sid, "point": [10**7, 0]})["error"] == "BadSpec"
    m.handle({"op": "place", "id": sid, "point": [1, 1]})
    assert m.handle({"op": "place", "id": sid, "point": [1, 1]})["error"] == "WrongPhase"
    assert m.handle({"op": "move", "id": sid, "axis": 3, "sign": 1})["error"] == "IllegalMove"
    assert m.handle({"op": "move", "id": sid, "axis": 1, "sign": 2})["error"] == "IllegalMove"
    assert m.handle({"op": "frobnicate", "id": sid})["error"] == "BadSpec"


def test_idle_timeout_expiry():
    clock = FakeClock()
    m = mgr(idle_timeout_secs=100, clock=clock)
    sid = create(m, preset="theorem1")["id"]
    clock.t = 99
    assert m.handle({"op": "state", "id": sid})["ok"]
    clock.t = 99 + 101
    resp = m.handle({"op": "state", "id": sid})
    assert resp["error"] == "UnknownSession"
    # Expired and unknown sessions are indistinguishable.
    ghost = m.handle({"op": "state", "id": "ghost"})
    assert resp["detail"].split("'")[0] == ghost["detail"].split("'")[0]


def test_sessions_are_isolated():
    m = mgr()
    a = create(m, preset="theorem1")["id"]
    b = create(m, preset="theorem1")["id"]
    m.handle({"op": "place", "id": a, "point": [1, 1]})
    m.handle({"op": "place", "id": b, "point": [5, -5]})
    va = m.handle({"op": "state", "id": a})["view"]
    vb = m.handle({"op": "state", "id": b})["view"]
    assert va["robber"] == [1, 1] and vb["robber"] == [5, -5]
    assert va["cops"] != vb["cops"]


# -- engine equivalence ------------------------------------------------------


def test_protocol_replay_matches_engine():
    moves = [Move(0, 1), Move(1, -1), Move(), Move(0, 1), Move(1, 1)] * 5
    engine = run_game(
        GameConfig(
            copset=theorem1_spec(2),
            robber_start=(1, 1),
            policy=Scripted(list(moves)),
        )
    )

    m = mgr()
    sid = create(m, preset="theorem1")["id"]
    m.handle({"op": "place", "id": sid, "point": [1, 1]})
    view = None
    for mv in moves:
        msg = {"op": "move", "id": sid}
        if mv.axis is None:
            msg["stay"] = True
        else:
            msg.update(axis=mv.axis + 1, sign=mv.sign)
        resp = m.handle(msg)
        if not resp["ok"]:
            break
        view = resp["view"]
        if view["phase"] == "finished":
            break

    assert view["status"] == "captured"
    assert view["turn"] == engine.state.turn
    assert tuple(view["robber"]) == engine.state.captured_at
    by = engine.state.captured_by
    assert view["capturedBy"] == (by.label if by is not None else "static")
    final = engine.trace[-1]
    assert view["cops"] == {d.label: list(p) for d, p in final.cops.items()}


# -- websocket transport -----------------------------------------------------


def test_websocket_roundtrip():
    app = build_app()
    client = TestClient(app)
    with client.websocket_connect("/ws") as ws:
        ws.send_text(json.dumps({"op": "create", "preset": "theorem1"}))
        view = json.loads(ws.receive_text())["view"]
        sid = view["id"]
        ws.send_text(json.dumps({"op": "place", "id": sid, "point": [0, 0]}))
        view = json.loads(ws.receive_text())["view"]
        assert view["bound"] == 8
        ws.send_text(json.dumps({"op": "move", "id": sid, "axis": 2, "sign": -1}))
        view = json.loads(ws.receive_text())["view"]
        assert view["robber"] == [0, -1]
        ws.send_text("{broken")
        err = json.loads(ws.receive_text())
        assert err["ok"] is False and err["error"] == "BadSpec"


def test_debug_contains_endpoint():
    client = TestClient(build_app())
    resp = client.post(
        "/debug/contains",
        json={"preset": "theorem1", "points": [[4, 0], [3, 0], [0, -8]]},
    ).json()
    assert resp == {"ok": True, "results": [True, False, True]}
    resp = client.post(
        "/debug/contains",
        json={
            "spec": {
                "dimension": 2,
                "generators": [
                    {"kind": "sublattice", "moduli": [1, 2], "residues": [0, 0]}
                ],
            },
            "points": [[7, -4], [7, -3]],
        },
    ).json()
    assert resp == {"ok": True, "results": [True, False]}


def test_handle_line_sorted_json():
    m = mgr()
    out = m.handle_line(json.dumps({"op": "create", "preset": "sublattice"}))
    doc = json.loads(out)
    assert doc["ok"] is True
    assert list(doc) == sorted(doc)

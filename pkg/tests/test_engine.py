import json

import pytest

from latticecops.copsets import theorem1_spec
from latticecops.engine import (
    BoundedDirectionError,
    GameConfig,
    IllegalMove,
    Status,
    capture_bound,
    run_game,
    run_multi,
    trace_to_ndjson,
)
from latticecops.geometry import Direction, Move, l1_distance, shell_index
from latticecops.strategy import (
    AxisRunner,
    GreedyEvader,
    RandomWalk,
    RobberPolicy,
    Scripted,
    select_active_cops,
)

X2M = Direction(1, -1)


# -- single game -------------------------------------------------------------


def test_z1_capture_turn_one():
    spec = theorem1_spec(1)
    res = run_game(GameConfig(spec, (1,), AxisRunner(Direction(0, 1))))
    assert res.state.status is Status.CAPTURED
    assert res.state.turn == 1
    assert res.state.captured_at == (2,)


def test_z2_greedy_captured_within_bound(theorem1):
    res = run_game(GameConfig(theorem1, (1, 1), GreedyEvader()))
    assert res.state.status is Status.CAPTURED
    assert res.state.turn == 6
    assert res.state.turn <= res.bound == 20


def test_capture_bound_examples(theorem1):
    assert capture_bound(select_active_cops(theorem1, (0, 0)), (0, 0)) == 8
    assert capture_bound(select_active_cops(theorem1, (1, 1)), (1, 1)) == 20
    spec1 = theorem1_spec(1)
    assert capture_bound(select_active_cops(spec1, (1,)), (1,)) == 4


def test_halfplane_runner_escapes(halfplane):
    cfg = GameConfig(halfplane, (0, -2), AxisRunner(X2M), max_turns=500)
    res = run_game(cfg)
    assert res.state.status is Status.HORIZON
    assert res.state.robber == (0, -502)
    assert res.trace[-1].status == "horizon"


def test_random_walks_always_captured(theorem1):
    for seed in range(8):
        res = run_game(GameConfig(theorem1, (2, -1), RandomWalk(seed)))
        assert res.state.status is Status.CAPTURED
        assert res.state.turn <= res.bound


def test_placement_on_cop_is_immediate_capture(theorem1):
    # (1,0) holds no cop; (2,0) does and the active roster never starts there.
    res = run_game(GameConfig(theorem1, (16, 0), Scripted([])))
    assert res.state.status is Status.CAPTURED
    assert res.state.turn == 0
    assert len(res.trace) == 1


def test_robber_walking_onto_static_cop(theorem1):
    res = run_game(GameConfig(theorem1, (3, 0), Scripted([Move(0, 1)])))
    # Roster excludes (4,0) only if selected; for start (3,0) min shell is 4,
    # so the X1+ cop starts at (4,0) and the robber steps straight into it.
    assert res.state.status is Status.CAPTURED
    assert res.state.turn == 1
    assert res.state.captured_at == (4, 0)


def test_illegal_move_rejected(theorem1):
    class Diagonal(RobberPolicy):
        def next_move(self, view):
            return Move(5, 1)

    with pytest.raises(IllegalMove):
        run_game(GameConfig(theorem1, (1, 1), Diagonal()))


def test_potential_nonincreasing_throughout(theorem1):
    res = run_game(GameConfig(theorem1, (1, 1), RandomWalk(11)))
    cops_records = [r for r in res.trace if r.actor == "cops"]
    for prev, cur in zip(cops_records, cops_records[1:]):
        for d, v in cur.potentials.items():
            assert v <= prev.potentials[d]


def test_trace_is_replayable(theorem1):
    res = run_game(GameConfig(theorem1, (1, 1), GreedyEvader()))
    for rec in res.trace:
        for d, p in rec.cops.items():
            assert rec.potentials[d] == l1_distance(p, rec.robber)
            if rec.potentials[d] > 0 and rec.status == "running":
                assert shell_index(p, d, rec.robber) >= 1
    # Half-turn structure: robber then cops, same turn number, steps of one.
    for prev, cur in zip(res.trace, res.trace[1:]):
        moved = [
            abs(a - b)
            for a, b in zip(prev.robber, cur.robber)
        ]
        if cur.actor == "robber":
            assert sum(moved) <= 1


def test_trace_ndjson_deterministic(theorem1):
    a = trace_to_ndjson(run_game(GameConfig(theorem1, (1, 1), RandomWalk(4))).trace)
    b = trace_to_ndjson(run_game(GameConfig(theorem1, (1, 1), RandomWalk(4))).trace)
    assert a == b
    assert a.endswith("\n")
    first = json.loads(a.splitlines()[0])
    assert set(first) == {
        "turn", "actor", "robber", "cops", "potentials", "matched", "status"
    }
    assert set(first["cops"]) == {"X1+", "X1-", "X2+", "X2-"}


def test_record_trace_off(theorem1):
    res = run_game(GameConfig(theorem1, (1, 1), GreedyEvader(), record_trace=False))
    assert res.trace == []
    assert res.state.status is Status.CAPTURED


def test_horizon_in_winning_game(theorem1):
    res = run_game(GameConfig(theorem1, (1, 1), GreedyEvader(), max_turns=2))
    assert res.state.status is Status.HORIZON


# -- multi-robber ------------------------------------------------------------


def test_multi_disjoint_rosters_and_bounds(theorem1):
    robbers = [((1, 0), GreedyEvader()), ((21, 0), GreedyEvader())]
    res = run_multi(theorem1, robbers)
    starts = [c.start for s in res.robbers for c in s.roster.values()]
    assert len(starts) == len(set(starts)) == 8
    assert {c.start for c in res.robbers[0].roster.values()} == {
        (2, 0), (-2, 0), (0, 2), (0, -2)
    }
    assert {c.start for c in res.robbers[1].roster.values()} == {
        (32, 0), (-32, 0), (0, 32), (0, -32)
    }
    for s in res.robbers:
        assert s.status is Status.CAPTURED
        assert s.captured_turn <= s.bound


def test_multi_three_evaders(theorem1):
    robbers = [
        ((1, 1), GreedyEvader()),
        ((-3, 2), RandomWalk(1)),
        ((0, -5), RandomWalk(2)),
    ]
    res = run_multi(theorem1, robbers)
    starts = [c.start for s in res.robbers for c in s.roster.values()]
    assert len(starts) == len(set(starts)) == 12
    for s in res.robbers:
        assert s.status is Status.CAPTURED


def test_multi_rejects_losing_spec(halfplane):
    with pytest.raises(BoundedDirectionError):
        run_multi(halfplane, [((0, 0), GreedyEvader())])


def test_multi_matches_single_for_one_robber(theorem1):
    multi = run_multi(theorem1, [((1, 1), GreedyEvader())])
    single = run_game(GameConfig(theorem1, (1, 1), GreedyEvader()))
    s = multi.robbers[0]
    assert s.captured_turn == single.state.turn
    assert s.pos == single.state.captured_at

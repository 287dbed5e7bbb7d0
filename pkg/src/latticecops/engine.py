"""Turn loop, capture accounting, trace emission, and multi-robber play."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .copsets import CopSetSpec, classify, contains, find_cop_in_cone
from .geometry import Direction, Move, Point, directions
from .strategy import (
    ActiveCop,
    GameView,
    RobberPolicy,
    Roster,
    cop_turn,
    match_state,
    potentials,
    select_active_cops,
)


class IllegalMove(ValueError):
    """The robber policy emitted a move that is not Stay or a unit step."""


class Status(Enum):
    RUNNING = "running"
    CAPTURED = "captured"
    HORIZON = "horizon"


@dataclass(frozen=True)
class GameConfig:
    copset: CopSetSpec
    robber_start: Point
    policy: RobberPolicy
    max_turns: int = 10_000
    record_trace: bool = True
    check_invariants: bool = True

    @property
    def dimension(self) -> int:
        return self.copset.dimension


@dataclass
class GameState:
    turn: int
    robber: Point
    roster: Roster
    status: Status = Status.RUNNING
    captured_by: Direction | None = None
    captured_at: Point | None = None
    full_roster: bool = True

    def potentials(self) -> dict[Direction, int]:
        return potentials(self.roster, self.robber)

    def matched(self) -> dict[Direction, bool]:
        return match_state(self.roster, self.robber)


@dataclass(frozen=True)
class TraceRecord:
    turn: int
    actor: str  # "robber" or "cops"
    robber: Point
    cops: dict[Direction, Point]
    potentials: dict[Direction, int]
    matched: dict[Direction, bool]
    status: str

    def to_json(self) -> dict:
        return {
            "turn": self.turn,
            "actor": self.actor,
            "robber": list(self.robber),
            "cops": {d.label: list(p) for d, p in self.cops.items()},
            "potentials": {d.label: v for d, v in self.potentials.items()},
            "matched": {d.label: v for d, v in self.matched.items()},
            "status": self.status,
        }


def trace_to_ndjson(trace: Sequence[TraceRecord]) -> str:
    return "\n".join(
        json.dumps(rec.to_json(), sort_keys=True, separators=(",", ":")) for rec in trace
    ) + ("\n" if trace else "")


def capture_bound(roster: Roster, robber: Point) -> int:
    """Sum of initial potentials: a hard upper bound on the capture turn."""
    return sum(potentials(roster, robber).values())


class InvariantViolation(AssertionError):
    """A pursuit invariant failed; indicates a bug, never expected in play."""


def _check_invariants(
    roster: Roster,
    robber: Point,
    pot_before: dict[Direction, int],
    *,
    require_strict: bool,
) -> None:
    pot_after = potentials(roster, robber)
    strict = False
    for d, cop in roster.items():
        if pot_after[d] > pot_before[d]:
            raise InvariantViolation(
                f"potential increased for {d.label}: {pot_before[d]} -> {pot_after[d]}"
            )
        if pot_after[d] < pot_before[d]:
            strict = True
        if pot_after[d] == 0:
            continue  # capture; sidedness no longer applies
        gap = d.sign * (cop.pos[d.axis] - robber[d.axis])
        off = sum(
            abs(c - x) for j, (c, x) in enumerate(zip(cop.pos, robber)) if j != d.axis
        )
        if gap <= off:
            raise InvariantViolation(
                f"sidedness lost for {d.label}: gap {gap} <= off-axis sum {off}"
            )
    if require_strict and roster and not strict:
        raise InvariantViolation("no potential decreased on a cops' turn")


def _static_capture(spec: CopSetSpec, pos: Point, roster: Roster) -> bool:
    """Whether a frozen (non-roster) cop occupies pos."""
    if not contains(spec, pos):
        return False
    for cop in roster.values():
        if cop.start == pos:
            # That cell's cop is active; it is only occupied if he is home.
            return cop.pos == pos
    return True


def _validate_move(mv: Move, n: int) -> None:
    if not isinstance(mv, Move):
        raise IllegalMove(f"expected a Move, got {type(mv).__name__}")
    if mv.axis is not None and not 0 <= mv.axis < n:
        raise IllegalMove(f"move axis {mv.axis} out of range for dimension {n}")


@dataclass
class GameResult:
    state: GameState
    trace: list[TraceRecord]
    bound: int


def _record(trace: list[TraceRecord] | None, state: GameState, actor: str) -> None:
    if trace is None:
        return
    trace.append(
        TraceRecord(
            turn=state.turn,
            actor=actor,
            robber=state.robber,
            cops={d: c.pos for d, c in state.roster.items()},
            potentials=state.potentials(),
            matched=state.matched(),
            status=state.status.value,
        )
    )


def run_game(config: GameConfig) -> GameResult:
    """Play one game to capture or horizon, emitting one record per half-turn."""
    spec = config.copset
    verdict = classify(spec)
    roster = select_active_cops(spec, config.robber_start, partial=not verdict.winning)
    state = GameState(
        turn=0,
        robber=config.robber_start,
        roster=roster,
        full_roster=verdict.winning,
    )
    bound = capture_bound(roster, config.robber_start)
    trace: list[TraceRecord] | None = [] if config.record_trace else None

    if _static_capture(spec, state.robber, roster):
        state.status = Status.CAPTURED
        state.captured_at = state.robber
        _record(trace, state, "cops")
        return GameResult(state, trace or [], bound)
    _record(trace, state, "robber")

    for k in range(1, config.max_turns + 1):
        state.turn = k
        # Potentials are compared at full-turn boundaries: mirror moves can
        # transiently restore distance within a turn without ever gaining.
        pot_before = state.potentials()
        mv = config.policy.next_move(
            GameView(
                dimension=config.dimension,
                robber=state.robber,
                cops={d: c.pos for d, c in roster.items()},
                turn=k,
            )
        )
        _validate_move(mv, config.dimension)
        state.robber = mv.apply(state.robber)
        # Robber half-turn capture: walking onto any cop, active or frozen.
        for d, cop in roster.items():
            if cop.pos == state.robber:
                state.status = Status.CAPTURED
                state.captured_by = d
                state.captured_at = state.robber
                break
        if state.status is Status.RUNNING and _static_capture(spec, state.robber, roster):
            state.status = Status.CAPTURED
            state.captured_at = state.robber
        _record(trace, state, "robber")
        if state.status is not Status.RUNNING:
            break

        moves = cop_turn(roster, _undo(mv, state.robber), mv)
        for d, cmove in moves.items():
            roster[d] = roster[d].moved(cmove)
        if config.check_invariants:
            _check_invariants(
                roster, state.robber, pot_before, require_strict=state.full_roster
            )
        for d, cop in roster.items():
            if cop.pos == state.robber:
                state.status = Status.CAPTURED
                state.captured_by = d
                state.captured_at = state.robber
                break
        _record(trace, state, "cops")
        if state.status is not Status.RUNNING:
            break

    if state.status is Status.RUNNING:
        state.status = Status.HORIZON
        if trace:
            trace[-1] = TraceRecord(
                turn=trace[-1].turn,
                actor=trace[-1].actor,
                robber=trace[-1].robber,
                cops=trace[-1].cops,
                potentials=trace[-1].potentials,
                matched=trace[-1].matched,
                status=Status.HORIZON.value,
            )
    return GameResult(state, trace or [], bound)


def _undo(mv: Move, pos: Point) -> Point:
    if mv.axis is None:
        return pos
    return Move(mv.axis, -mv.sign).apply(pos)


# ---------------------------------------------------------------------------
# Multi-robber team play


@dataclass
class RobberSlot:
    start: Point
    policy: RobberPolicy
    roster: Roster
    bound: int
    pos: Point
    status: Status = Status.RUNNING
    captured_turn: int | None = None
    captured_by: Direction | None = None
    last_move: Move | None = None
    pot_before: dict[Direction, int] = field(default_factory=dict)


@dataclass
class MultiResult:
    robbers: list[RobberSlot]
    turns: int


def run_multi(
    spec: CopSetSpec,
    robbers: Sequence[tuple[Point, RobberPolicy]],
    max_turns: int = 10_000,
    check_invariants: bool = True,
) -> MultiResult:
    """All robbers move each robber half-turn; each team chases its own robber.

    Team rosters are pairwise disjoint (greedy selection with a shared
    exclusion set), as the countable-robbers argument requires.
    """
    verdict = classify(spec)
    if not verdict.winning:
        raise BoundedDirectionError(verdict)
    n = spec.dimension
    taken: set[Point] = set()
    slots: list[RobberSlot] = []
    origin = (0,) * n
    for start, policy in robbers:
        roster: Roster = {}
        min_shell = sum(abs(x) for x in start) + 1
        for d in directions(n):
            c = find_cop_in_cone(spec, d, origin, min_shell, exclude=taken)
            taken.add(c)
            roster[d] = ActiveCop(d, c, c)
        slots.append(
            RobberSlot(
                start=start,
                policy=policy,
                roster=roster,
                bound=capture_bound(roster, start),
                pos=start,
            )
        )

    all_active = lambda: {c.pos for s in slots for c in s.roster.values()}

    def occupied_static(pos: Point) -> bool:
        if not contains(spec, pos):
            return False
        for s in slots:
            for cop in s.roster.values():
                if cop.start == pos:
                    return cop.pos == pos
        return True

    turn = 0
    for turn in range(1, max_turns + 1):
        running = [s for s in slots if s.status is Status.RUNNING]
        if not running:
            turn -= 1
            break
        for s in running:
            s.pot_before = potentials(s.roster, s.pos)
            mv = s.policy.next_move(
                GameView(
                    dimension=n,
                    robber=s.pos,
                    cops={d: c.pos for d, c in s.roster.items()},
                    turn=turn,
                )
            )
            _validate_move(mv, n)
            s.pos = mv.apply(s.pos)
            s.last_move = mv
            if s.pos in all_active() or occupied_static(s.pos):
                s.status = Status.CAPTURED
                s.captured_turn = turn
        for s in slots:
            if s.status is not Status.RUNNING:
                continue
            mv = s.last_move
            moves = cop_turn(s.roster, _undo(mv, s.pos), mv)
            for d, cmove in moves.items():
                s.roster[d] = s.roster[d].moved(cmove)
            if check_invariants:
                _check_invariants(s.roster, s.pos, s.pot_before, require_strict=True)
            for d, cop in s.roster.items():
                if cop.pos == s.pos:
                    s.status = Status.CAPTURED
                    s.captured_turn = turn
                    s.captured_by = d
                    break
    for s in slots:
        if s.status is Status.RUNNING:
            s.status = Status.HORIZON
    return MultiResult(slots, turn)


class BoundedDirectionError(RuntimeError):
    def __init__(self, verdict):
        super().__init__("spec is losing; cannot assemble disjoint rosters")
        self.verdict = verdict

"""The coordinate-matching cop strategy and the robber policies."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .copsets import BoundedDirection, CopSetSpec, find_cop_in_cone
from .geometry import STAY, Direction, Move, Point, directions, l1_distance, shell_index


class StrategyError(RuntimeError):
    """A strategy contract was violated (e.g. a move after capture)."""


@dataclass(frozen=True)
class ActiveCop:
    direction: Direction
    start: Point
    pos: Point

    def moved(self, mv: Move) -> "ActiveCop":
        return replace(self, pos=mv.apply(self.pos))


Roster = dict[Direction, ActiveCop]


def select_active_cops(
    spec: CopSetSpec, robber_start: Point, *, partial: bool = False
) -> Roster:
    """Pick one distinct cop per direction with origin-shell >= |r|_1 + 1.

    By the shell shift bound every chosen cop then has robber-relative
    shell >= 1, which is the sidedness invariant the pursuit needs.  With
    partial=True, directions holding no qualifying cop are skipped instead
    of raising (used when running provably losing configurations).
    """
    n = spec.dimension
    origin = (0,) * n
    min_shell = sum(abs(x) for x in robber_start) + 1
    roster: Roster = {}
    chosen: set[Point] = set()
    for d in directions(n):
        try:
            c = find_cop_in_cone(spec, d, origin, min_shell, exclude=chosen)
        except BoundedDirection:
            if partial:
                continue
            raise
        chosen.add(c)
        roster[d] = ActiveCop(d, c, c)
    return roster


def is_matched(cop_pos: Point, robber: Point, axis: int) -> bool:
    """Coordinate matched: the cop agrees with the robber off its own axis."""
    return all(c == x for j, (c, x) in enumerate(zip(cop_pos, robber)) if j != axis)


def match_state(roster: Roster, robber: Point) -> dict[Direction, bool]:
    return {d: is_matched(cop.pos, robber, d.axis) for d, cop in roster.items()}


def potentials(roster: Roster, robber: Point) -> dict[Direction, int]:
    return {d: l1_distance(cop.pos, robber) for d, cop in roster.items()}


def _pursuit_move(cop: ActiveCop, robber: Point) -> Move:
    """Close the least-index off-axis mismatch, or advance along the own axis."""
    a = cop.direction.axis
    for j, (c, x) in enumerate(zip(cop.pos, robber)):
        if j != a and c != x:
            return Move(j, 1 if x > c else -1)
    if cop.pos[a] == robber[a]:
        return STAY  # co-located: capture was already recorded
    return Move(a, 1 if robber[a] > cop.pos[a] else -1)


def cop_turn(roster: Roster, robber_prev: Point, robber_move: Move) -> dict[Direction, Move]:
    """Per-direction cop responses to the robber's half-turn.

    Robber steps along axis i: cops on other axes mirror the step; cops on
    axis i close their least-index mismatch, or advance along axis i once
    matched.  Robber stays: every cop makes pursuit progress.
    """
    robber_new = robber_move.apply(robber_prev)
    for cop in roster.values():
        if cop.pos == robber_prev:
            raise StrategyError("cop_turn called after capture")
    moves: dict[Direction, Move] = {}
    for d, cop in roster.items():
        if cop.pos == robber_new:
            moves[d] = STAY  # robber walked onto this cop
        elif not robber_move.is_stay and d.axis != robber_move.axis:
            moves[d] = robber_move  # mirror
        else:
            moves[d] = _pursuit_move(cop, robber_new)
    return moves


def interception_predicate(cop: Point, start: Point, d: Direction) -> bool:
    """Whether cop can ever catch a robber running from start in direction d.

    Closed form: true iff the cop's shell index about the start is >= 0.
    """
    return shell_index(cop, d, start) >= 0


# ---------------------------------------------------------------------------
# Robber policies


@dataclass(frozen=True)
class GameView:
    """What a robber policy sees: perfect information on the active cops."""

    dimension: int
    robber: Point
    cops: dict[Direction, Point]
    turn: int


class RobberPolicy:
    name = "policy"

    def next_move(self, view: GameView) -> Move:
        raise NotImplementedError


class AxisRunner(RobberPolicy):
    """Run one unit in a fixed direction every turn (the escape strategy)."""

    def __init__(self, direction: Direction):
        self.direction = direction
        self.name = f"runner[{direction.label}]"

    def next_move(self, view: GameView) -> Move:
        return Move(self.direction.axis, self.direction.sign)


class GreedyEvader(RobberPolicy):
    """Maximize the minimum L1 distance to the active cops after moving.

    Ties prefer Stay, then the lexicographically least (axis, sign) step.
    """

    name = "greedy"

    def next_move(self, view: GameView) -> Move:
        if not view.cops:
            return STAY
        candidates = [STAY] + [
            Move(a, s) for a in range(view.dimension) for s in (-1, 1)
        ]
        best, best_score = STAY, None
        for mv in candidates:
            pos = mv.apply(view.robber)
            score = min(l1_distance(pos, c) for c in view.cops.values())
            if best_score is None or score > best_score:
                best, best_score = mv, score
        return best


class Scripted(RobberPolicy):
    """Play a fixed move list; stays once the script is exhausted."""

    name = "scripted"

    def __init__(self, moves: list[Move]):
        self.moves = list(moves)
        self._i = 0

    def next_move(self, view: GameView) -> Move:
        if self._i >= len(self.moves):
            return STAY
        mv = self.moves[self._i]
        self._i += 1
        return mv


class RandomWalk(RobberPolicy):
    """Uniform over the 2n+1 legal moves; the only randomness in the engine."""

    def __init__(self, seed: int):
        self.seed = seed
        self.name = f"random[{seed}]"
        self._rng = random.Random(seed)

    def next_move(self, view: GameView) -> Move:
        choices = [STAY] + [Move(a, s) for a in range(view.dimension) for s in (-1, 1)]
        return self._rng.choice(choices)

"""Independent brute-force oracles used to check the analytic paths."""

from __future__ import annotations

import itertools

from latticecops.copsets import CopSetSpec, contains
from latticecops.geometry import Direction, Point, l1_distance, shell_index


def box_points(n: int, m: int):
    return itertools.product(range(-m, m + 1), repeat=n)


def window_cops(spec: CopSetSpec, m: int) -> list[Point]:
    return [p for p in box_points(spec.dimension, m) if contains(spec, p)]


def window_max_shell(spec: CopSetSpec, d: Direction, m: int) -> int | None:
    """Largest occupied shell about the origin within [-m, m]^n, or None."""
    origin = (0,) * spec.dimension
    shells = [shell_index(p, d, origin) for p in window_cops(spec, m)]
    return max(shells) if shells else None


def window_count(spec: CopSetSpec, m: int) -> int:
    return len(window_cops(spec, m))


def window_best_cop(
    spec: CopSetSpec,
    d: Direction,
    apex: Point,
    min_shell: int,
    m: int,
    exclude: set[Point] = frozenset(),
) -> Point | None:
    """Best qualifying cop in a window under the (distance, shell, lex) key."""
    best = None
    for p in box_points(spec.dimension, m):
        if p in exclude or not contains(spec, p):
            continue
        s = shell_index(p, d, apex)
        if s < min_shell:
            continue
        key = (l1_distance(p, apex), s, p)
        if best is None or key < best:
            best = key
    return best[2] if best else None


def runner_caught_by(cop: Point, start: Point, d: Direction, k_max: int) -> bool:
    """Scan of the straight-runner interception inequality over k <= k_max."""
    for k in range(1, k_max + 1):
        pos = list(start)
        pos[d.axis] += d.sign * k
        if l1_distance(cop, tuple(pos)) <= k:
            return True
    return False

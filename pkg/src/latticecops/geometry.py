"""Lattice points, unit moves, and L1 cone/shell geometry on Z^n."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

Point = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Raised when two points or a point and a context disagree on dimension."""


_DIR_RE = re.compile(r"^X(\d+)([+-])$")


@dataclass(frozen=True, order=True)
class Direction:
    """One of the 2n escape directions: an axis (0-based) with a sign."""

    axis: int
    sign: int

    def __post_init__(self) -> None:
        if self.axis < 0:
            raise ValueError(f"axis must be nonnegative, got {self.axis}")
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def label(self) -> str:
        return f"X{self.axis + 1}{'+' if self.sign > 0 else '-'}"

    def opposite(self) -> "Direction":
        return Direction(self.axis, -self.sign)

    @staticmethod
    def parse(label: str) -> "Direction":
        m = _DIR_RE.match(label)
        if m is None:
            raise ValueError(f"bad direction label {label!r} (want e.g. 'X1+')")
        return Direction(int(m.group(1)) - 1, 1 if m.group(2) == "+" else -1)


def directions(n: int) -> list[Direction]:
    """All 2n directions in canonical order: (X1+, X1-, X2+, X2-, ...)."""
    return [Direction(a, s) for a in range(n) for s in (1, -1)]


@dataclass(frozen=True)
class Move:
    """A unit step along one axis, or a stay (axis is None)."""

    axis: int | None = None
    sign: int = 0

    def __post_init__(self) -> None:
        if self.axis is None:
            if self.sign != 0:
                raise ValueError("stay move must have sign 0")
        elif self.sign not in (-1, 1):
            raise ValueError(f"step sign must be +1 or -1, got {self.sign}")

    @property
    def is_stay(self) -> bool:
        return self.axis is None

    def apply(self, p: Point) -> Point:
        if self.axis is None:
            return p
        if self.axis >= len(p):
            raise DimensionMismatch(f"move axis {self.axis} out of range for {p}")
        q = list(p)
        q[self.axis] += self.sign
        return tuple(q)


STAY = Move()


def step(axis: int, sign: int) -> Move:
    return Move(axis, sign)


def _check_dims(p: Point, q: Point) -> None:
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension mismatch: {len(p)} vs {len(q)}")


def l1_distance(p: Point, q: Point) -> int:
    _check_dims(p, q)
    return sum(abs(a - b) for a, b in zip(p, q))


def shell_index(p: Point, d: Direction, apex: Point) -> int:
    """Sum-form shell index of p about apex in direction d.

    sigma * (p_m - apex_m) - sum_{j != m} |p_j - apex_j|.  Point p lies on
    shell l iff the result equals l, and in the closed cone of level l iff
    the result is >= l.
    """
    _check_dims(p, apex)
    m = d.axis
    off = sum(abs(a - b) for j, (a, b) in enumerate(zip(p, apex)) if j != m)
    return d.sign * (p[m] - apex[m]) - off


def shell_shift_bound(p: Point, d: Direction, apex: Point, apex2: Point) -> bool:
    """Check shell_index(p, d, apex2) >= shell_index(p, d, apex) - l1(apex, apex2)."""
    return shell_index(p, d, apex2) >= shell_index(p, d, apex) - l1_distance(apex, apex2)


def offaxis_vectors(k: int, r: int) -> Iterator[tuple[int, ...]]:
    """All vectors in Z^k with L1 norm exactly r, in lexicographic order."""
    if k == 0:
        if r == 0:
            yield ()
        return
    for first in range(-r, r + 1):
        for rest in offaxis_vectors(k - 1, r - abs(first)):
            yield (first,) + rest


def shell_points(apex: Point, d: Direction, s: int, r: int) -> list[Point]:
    """Points on shell s about apex in direction d with off-axis L1 radius r.

    Lexicographically sorted; finite for every (s, r).
    """
    n = len(apex)
    m = d.axis
    own = apex[m] + d.sign * (s + r)
    pts = []
    for w in offaxis_vectors(n - 1, r):
        coords = list(w[:m]) + [0] + list(w[m:])
        p = tuple(apex[j] + coords[j] if j != m else own for j in range(n))
        pts.append(p)
    pts.sort()
    return pts

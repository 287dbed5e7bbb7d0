"""Symbolic (possibly infinite) cop configurations on Z^n.

A CopSetSpec is a union of generator primitives.  Every primitive supports
membership, a per-direction census about the origin, exact counting inside
boxes, and deterministic retrieval of a cop inside a cone -- the infinite
set is never materialized.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .geometry import (
    Direction,
    DimensionMismatch,
    Point,
    directions,
    l1_distance,
    shell_index,
    shell_points,
)


class BadSpec(ValueError):
    """Raised when a copset specification fails validation."""


class BoundedDirection(Exception):
    """No qualifying cop exists in the requested cone: a losing direction."""

    def __init__(self, direction: Direction):
        super().__init__(f"direction {direction.label} holds no qualifying cop")
        self.direction = direction


# ---------------------------------------------------------------------------
# Generator primitives


@dataclass(frozen=True)
class ExplicitFinite:
    points: frozenset[Point]


@dataclass(frozen=True)
class AxisGeometric:
    """Cops at sigma * base**e * e_axis for e >= start_exponent, sigma in signs."""

    axis: int
    base: int
    signs: frozenset[int]
    start_exponent: int = 0


@dataclass(frozen=True)
class AxisArithmetic:
    """Cops at sigma * (offset + k*step) * e_axis for k >= 0, sigma in signs."""

    axis: int
    step: int
    offset: int
    signs: frozenset[int]


@dataclass(frozen=True)
class Sublattice:
    """Cops at every point congruent to residues modulo moduli (1 = free axis)."""

    moduli: tuple[int, ...]
    residues: tuple[int, ...]


@dataclass(frozen=True)
class HalfSpace:
    """Cops at every point with sign * x_axis >= threshold."""

    axis: int
    sign: int
    threshold: int


Generator = Union[ExplicitFinite, AxisGeometric, AxisArithmetic, Sublattice, HalfSpace]


@dataclass(frozen=True)
class CopSetSpec:
    dimension: int
    generators: tuple[Generator, ...]

    def __post_init__(self) -> None:
        n = self.dimension
        if n < 1:
            raise BadSpec(f"dimension must be >= 1, got {n}")
        if not self.generators:
            raise BadSpec("spec needs at least one generator")
        for g in self.generators:
            _validate_generator(g, n)


def _validate_generator(g: Generator, n: int) -> None:
    if isinstance(g, ExplicitFinite):
        for p in g.points:
            if len(p) != n:
                raise BadSpec(f"explicit point {p} has dimension {len(p)}, want {n}")
    elif isinstance(g, (AxisGeometric, AxisArithmetic)):
        if not 0 <= g.axis < n:
            raise BadSpec(f"axis {g.axis} out of range for dimension {n}")
        if not g.signs or not g.signs <= {-1, 1}:
            raise BadSpec(f"signs must be a nonempty subset of {{+1,-1}}, got {set(g.signs)}")
        if isinstance(g, AxisGeometric):
            if g.base < 2:
                raise BadSpec(f"geometric base must be >= 2, got {g.base}")
            if g.start_exponent < 0:
                raise BadSpec("start_exponent must be >= 0")
        else:
            if g.step < 1:
                raise BadSpec(f"arithmetic step must be >= 1, got {g.step}")
            if g.offset < 0:
                raise BadSpec(f"arithmetic offset must be >= 0, got {g.offset}")
    elif isinstance(g, Sublattice):
        if len(g.moduli) != n or len(g.residues) != n:
            raise BadSpec("sublattice moduli/residues must have one entry per axis")
        for mu, r in zip(g.moduli, g.residues):
            if mu < 1:
                raise BadSpec(f"modulus must be >= 1, got {mu}")
            if not 0 <= r < mu:
                raise BadSpec(f"residue {r} out of range for modulus {mu}")
    elif isinstance(g, HalfSpace):
        if not 0 <= g.axis < n:
            raise BadSpec(f"axis {g.axis} out of range for dimension {n}")
        if g.sign not in (-1, 1):
            raise BadSpec(f"half-space sign must be +1 or -1, got {g.sign}")
    else:
        raise BadSpec(f"unknown generator type {type(g).__name__}")


# ---------------------------------------------------------------------------
# Membership


def _axis_values(g: AxisGeometric | AxisArithmetic) -> Iterator[int]:
    """Nonnegative magnitudes of the one-axis family, ascending."""
    if isinstance(g, AxisGeometric):
        v = g.base**g.start_exponent
        while True:
            yield v
            v *= g.base
    else:
        v = g.offset
        while True:
            yield v
            v += g.step


def _axis_value_member(g: AxisGeometric | AxisArithmetic, v: int) -> bool:
    """Whether magnitude v >= 0 belongs to the family's value set."""
    if isinstance(g, AxisGeometric):
        lo = g.base**g.start_exponent
        if v < lo:
            return False
        while v % g.base == 0:
            v //= g.base
        return v == 1
    return v >= g.offset and (v - g.offset) % g.step == 0


def generator_contains(g: Generator, p: Point) -> bool:
    if isinstance(g, ExplicitFinite):
        return p in g.points
    if isinstance(g, (AxisGeometric, AxisArithmetic)):
        if any(x != 0 for j, x in enumerate(p) if j != g.axis):
            return False
        v = p[g.axis]
        if v == 0:
            return _axis_value_member(g, 0)
        return (1 if v > 0 else -1) in g.signs and _axis_value_member(g, abs(v))
    if isinstance(g, Sublattice):
        return all(x % mu == r for x, mu, r in zip(p, g.moduli, g.residues))
    return g.sign * p[g.axis] >= g.threshold


def contains(spec: CopSetSpec, p: Point) -> bool:
    if len(p) != spec.dimension:
        raise DimensionMismatch(f"point {p} has dimension {len(p)}, want {spec.dimension}")
    return any(generator_contains(g, p) for g in spec.generators)


# ---------------------------------------------------------------------------
# Census and classification


@dataclass(frozen=True)
class CensusEntry:
    """Occupied-shell summary for one direction about the origin.

    unbounded means the occupied shell indices are unbounded above;
    otherwise max_shell is the largest occupied shell (None if the
    direction's cone carries no cop at all).
    """

    unbounded: bool
    max_shell: int | None = None

    def to_json(self) -> dict:
        if self.unbounded:
            return {"kind": "unbounded"}
        return {"kind": "bounded", "maxShell": self.max_shell}


DirectionCensus = dict[Direction, CensusEntry]

ORIGIN_CACHE: dict[int, Point] = {}


def _origin(n: int) -> Point:
    if n not in ORIGIN_CACHE:
        ORIGIN_CACHE[n] = (0,) * n
    return ORIGIN_CACHE[n]


def _generator_census(g: Generator, d: Direction, n: int) -> CensusEntry:
    origin = _origin(n)
    if isinstance(g, ExplicitFinite):
        if not g.points:
            return CensusEntry(False, None)
        return CensusEntry(False, max(shell_index(p, d, origin) for p in g.points))
    if isinstance(g, (AxisGeometric, AxisArithmetic)):
        if d.axis == g.axis and d.sign in g.signs:
            return CensusEntry(True)
        # Every family point off the cone axis (or on the wrong side) has
        # shell -|v|; the maximum is attained at the smallest magnitude.
        v0 = next(_axis_values(g))
        return CensusEntry(False, -v0)
    if isinstance(g, Sublattice):
        return CensusEntry(True)
    if d.axis == g.axis and d.sign == -g.sign:
        return CensusEntry(False, -g.threshold)
    return CensusEntry(True)


def census(spec: CopSetSpec) -> DirectionCensus:
    out: DirectionCensus = {}
    for d in directions(spec.dimension):
        entries = [_generator_census(g, d, spec.dimension) for g in spec.generators]
        if any(e.unbounded for e in entries):
            out[d] = CensusEntry(True)
        else:
            shells = [e.max_shell for e in entries if e.max_shell is not None]
            out[d] = CensusEntry(False, max(shells) if shells else None)
    return out


@dataclass(frozen=True)
class EscapeWitness:
    """A losing direction plus a start from which straight running escapes."""

    direction: Direction
    bound_shell: int
    start: Point

    def to_json(self) -> dict:
        return {
            "direction": self.direction.label,
            "boundShell": self.bound_shell,
            "start": list(self.start),
            "strategy": f"run straight in {self.direction.label} forever",
        }


@dataclass(frozen=True)
class Verdict:
    winning: bool
    census: DirectionCensus
    witness: EscapeWitness | None = None

    def to_json(self) -> dict:
        return {
            "outcome": "winning" if self.winning else "losing",
            "census": {d.label: e.to_json() for d, e in self.census.items()},
            "witness": self.witness.to_json() if self.witness else None,
        }


def classify(spec: CopSetSpec) -> Verdict:
    cen = census(spec)
    losing = [d for d in directions(spec.dimension) if not cen[d].unbounded]
    if not losing:
        return Verdict(True, cen)
    d = losing[0]
    bound = cen[d].max_shell
    a = max(0, bound) if bound is not None else 0
    start = list(_origin(spec.dimension))
    start[d.axis] = d.sign * (a + 2)
    return Verdict(False, cen, EscapeWitness(d, a, tuple(start)))


# ---------------------------------------------------------------------------
# Cone search


def _family_shell_candidates(
    g: AxisGeometric | AxisArithmetic, d: Direction, apex: Point, min_shell: int
) -> Iterator[int]:
    """Shell indices >= min_shell occupied by a one-axis family, ascending."""
    apex_l1 = sum(abs(x) for x in apex)
    tail_signs = []
    finite: set[int] = set()
    for sigma in sorted(g.signs):
        if g.axis == d.axis and sigma == d.sign:
            tail_signs.append(sigma)
        else:
            # Shell is bounded above along this branch; magnitudes beyond
            # 2*|apex|_1 - min_shell cannot reach min_shell anymore.
            for v in _axis_values(g):
                if v > 2 * apex_l1 + abs(min_shell) + 4:
                    break
                p = _family_point(g, sigma, v, len(apex))
                s = shell_index(p, d, apex)
                if s >= min_shell:
                    finite.add(s)
    finite_sorted = iter(sorted(finite))

    def tail() -> Iterator[int]:
        sigma = tail_signs[0]
        for v in _axis_values(g):
            p = _family_point(g, sigma, v, len(apex))
            s = shell_index(p, d, apex)
            if s >= min_shell:
                yield s

    if tail_signs:
        yield from heapq.merge(finite_sorted, tail())
    else:
        yield from finite_sorted


def _family_point(g: AxisGeometric | AxisArithmetic, sigma: int, v: int, n: int) -> Point:
    coords = [0] * n
    coords[g.axis] = sigma * v
    return tuple(coords)


def _candidate_shells(spec: CopSetSpec, d: Direction, apex: Point, min_shell: int) -> Iterator[int]:
    iters: list[Iterator[int]] = []
    dense = False
    for g in spec.generators:
        if isinstance(g, (Sublattice, HalfSpace)):
            dense = True
        elif isinstance(g, ExplicitFinite):
            shells = sorted({shell_index(p, d, apex) for p in g.points})
            iters.append(iter([s for s in shells if s >= min_shell]))
        else:
            iters.append(_family_shell_candidates(g, d, apex, min_shell))
    if dense:
        iters.append(itertools.count(min_shell))
    last = None
    for s in heapq.merge(*iters):
        if s != last:
            yield s
            last = s


def _radius_cap(spec: CopSetSpec, apex: Point, min_shell: int) -> int:
    apex_l1 = sum(abs(x) for x in apex)
    cap = 3 * apex_l1 + abs(min_shell) + 8
    for g in spec.generators:
        if isinstance(g, HalfSpace):
            cap = max(cap, abs(g.threshold) + apex_l1 + 8)
        elif isinstance(g, Sublattice):
            cap = max(cap, 2 * math.lcm(*g.moduli) + sum(g.moduli))
        elif isinstance(g, ExplicitFinite):
            for p in g.points:
                cap = max(cap, l1_distance(p, apex))
    return cap


def find_cop_in_cone(
    spec: CopSetSpec,
    d: Direction,
    apex: Point,
    min_shell: int,
    exclude: frozenset[Point] | set[Point] = frozenset(),
) -> Point:
    """Deterministically pick a cop with shell_index >= min_shell about apex.

    Selection key: smallest L1 distance from apex, then smallest shell,
    then lexicographically least coordinates.  Raises BoundedDirection when
    no qualifying cop exists.
    """
    if len(apex) != spec.dimension:
        raise DimensionMismatch(f"apex {apex} has dimension {len(apex)}, want {spec.dimension}")
    entry = census(spec)[d]
    s_limit: int | None = None
    if not entry.unbounded:
        # Occupied shells about the origin top out at max_shell; the shift
        # bound caps apex-relative shells at max_shell + |apex|_1.
        if entry.max_shell is None:
            raise BoundedDirection(d)
        s_limit = entry.max_shell + sum(abs(x) for x in apex)
        if s_limit < min_shell:
            raise BoundedDirection(d)
    r_cap = _radius_cap(spec, apex, min_shell)
    best: tuple[int, int, Point] | None = None
    for s in _candidate_shells(spec, d, apex, min_shell):
        if s_limit is not None and s > s_limit:
            break
        if best is not None and s > best[0]:
            break
        max_r = r_cap if best is None else min(r_cap, (best[0] - s) // 2)
        for r in range(max_r + 1):
            if best is not None and (s + 2 * r, s) >= (best[0], best[1]):
                break
            hit = None
            for p in shell_points(apex, d, s, r):
                if p not in exclude and contains(spec, p):
                    hit = p
                    break
            if hit is not None:
                best = (s + 2 * r, s, hit)
                break
    if best is None:
        raise BoundedDirection(d)
    return best[2]


# ---------------------------------------------------------------------------
# Density: analytic and estimated

# Sublattice and HalfSpace are products of per-axis integer sets (an interval
# intersected with a congruence class), so unions of them admit exact
# inclusion-exclusion counting.  Explicit and one-axis families are
# enumerated directly; they carry density zero.


@dataclass(frozen=True)
class _AxisSet:
    lo: int | None  # None = -inf
    hi: int | None  # None = +inf
    mod: int = 1
    res: int = 0


def _product_region(g: Sublattice | HalfSpace, n: int) -> tuple[_AxisSet, ...]:
    if isinstance(g, Sublattice):
        return tuple(_AxisSet(None, None, mu, r) for mu, r in zip(g.moduli, g.residues))
    axes = []
    for j in range(n):
        if j != g.axis:
            axes.append(_AxisSet(None, None))
        elif g.sign > 0:
            axes.append(_AxisSet(g.threshold, None))
        else:
            axes.append(_AxisSet(None, -g.threshold))
    return tuple(axes)


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    g = math.gcd(m1, m2)
    if (r2 - r1) % g != 0:
        return None
    lcm = m1 // g * m2
    # Solve r1 + m1*t == r2 (mod m2).
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return ((r1 + m1 * t) % lcm, lcm)


def _intersect_axis(a: _AxisSet, b: _AxisSet) -> _AxisSet | None:
    lo = a.lo if b.lo is None else (b.lo if a.lo is None else max(a.lo, b.lo))
    hi = a.hi if b.hi is None else (b.hi if a.hi is None else min(a.hi, b.hi))
    cong = _crt(a.res, a.mod, b.res, b.mod)
    if cong is None:
        return None
    return _AxisSet(lo, hi, cong[1], cong[0])


def _count_axis(a: _AxisSet, m: int) -> int:
    lo = -m if a.lo is None else max(a.lo, -m)
    hi = m if a.hi is None else min(a.hi, m)
    if lo > hi:
        return 0
    first = lo + (a.res - lo) % a.mod
    if first > hi:
        return 0
    return (hi - first) // a.mod + 1


def _density_axis(a: _AxisSet) -> Fraction:
    if a.lo is not None and a.hi is not None:
        return Fraction(0)
    if a.lo is None and a.hi is None:
        return Fraction(1, a.mod)
    return Fraction(1, 2 * a.mod)


def _dense_regions(spec: CopSetSpec) -> list[tuple[_AxisSet, ...]]:
    return [
        _product_region(g, spec.dimension)
        for g in spec.generators
        if isinstance(g, (Sublattice, HalfSpace))
    ]


def _inclusion_exclusion(regions, term) -> Fraction:
    total = Fraction(0)
    for k in range(1, len(regions) + 1):
        for combo in itertools.combinations(regions, k):
            inter = combo[0]
            for other in combo[1:]:
                axes = [_intersect_axis(x, y) for x, y in zip(inter, other)]
                if any(a is None for a in axes):
                    inter = None
                    break
                inter = tuple(axes)
            if inter is None:
                continue
            total += (-1) ** (k + 1) * term(inter)
    return total


def analytic_density(spec: CopSetSpec) -> Fraction:
    """Exact natural density of the union (sparse generators contribute 0)."""
    regions = _dense_regions(spec)
    if not regions:
        return Fraction(0)
    return _inclusion_exclusion(
        regions, lambda reg: math.prod((_density_axis(a) for a in reg), start=Fraction(1))
    )


def _sparse_points_in_box(g: Generator, m: int, n: int) -> set[Point]:
    if isinstance(g, ExplicitFinite):
        return {p for p in g.points if all(abs(x) <= m for x in p)}
    pts: set[Point] = set()
    for v in _axis_values(g):
        if v > m:
            break
        for sigma in g.signs:
            pts.add(_family_point(g, sigma, v, n))
    return pts


@dataclass
class DensityEstimate:
    """Box ratios |C ∩ [-m,m]^n| / (2m+1)^n for m = 1..m_max."""

    samples: list[tuple[int, int, int, Fraction]] = field(default_factory=list)
    truncated_at: int | None = None


def count_in_box(spec: CopSetSpec, m: int, budget: int = 10**6) -> int:
    """Exact number of cops in [-m, m]^n.  Raises OverBudget via ValueError."""
    regions = _dense_regions(spec)
    total = 0
    if regions:
        total = int(
            _inclusion_exclusion(
                regions, lambda reg: Fraction(math.prod(_count_axis(a, m) for a in reg))
            )
        )
    sparse: set[Point] = set()
    for g in spec.generators:
        if not isinstance(g, (Sublattice, HalfSpace)):
            sparse |= _sparse_points_in_box(g, m, spec.dimension)
            if len(sparse) > budget:
                raise BudgetExceeded(m)
    dense_gens = [g for g in spec.generators if isinstance(g, (Sublattice, HalfSpace))]
    total += sum(1 for p in sparse if not any(generator_contains(g, p) for g in dense_gens))
    return total


class BudgetExceeded(Exception):
    def __init__(self, m: int):
        super().__init__(f"point enumeration budget exceeded at m={m}")
        self.m = m


def estimate_density(spec: CopSetSpec, m_max: int, budget: int = 10**6) -> DensityEstimate:
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    est = DensityEstimate()
    for m in range(1, m_max + 1):
        box = (2 * m + 1) ** spec.dimension
        try:
            cnt = count_in_box(spec, m, budget)
        except BudgetExceeded:
            est.truncated_at = m
            break
        est.samples.append((m, cnt, box, Fraction(cnt, box)))
    return est


# ---------------------------------------------------------------------------
# Max-form counterexample (why cone membership uses the sum form for n >= 3)


def maxform_level(p: Point, d: Direction, apex: Point) -> int:
    """Max-form pyramid level: sigma*(p_m - q_m) - max_{j != m} |p_j - q_j|."""
    m = d.axis
    others = [abs(a - b) for j, (a, b) in enumerate(zip(p, apex)) if j != m]
    return d.sign * (p[m] - apex[m]) - (max(others) if others else 0)


@dataclass(frozen=True)
class CounterexampleCertificate:
    dimension: int
    depth: int
    rows: tuple[dict, ...]  # one per point: membership + interception facts


def maxform_counterexample(n: int, depth: int) -> tuple[CopSetSpec, CounterexampleCertificate]:
    """Explicit set whose max-form census looks winning yet loses for n >= 3.

    For each a in 1..depth and direction (m, sigma): the point with
    sigma*x_m = 3a and every other coordinate 2a.  Each point sits on
    max-form level a, but its sum-form shell is 3a - 2a(n-1) < 0, so a
    straight runner from the origin is never intercepted.
    """
    if n < 3:
        raise ValueError("max-form and sum-form coincide for n <= 2; need n >= 3")
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    origin = _origin(n)
    pts = []
    rows = []
    for a in range(1, depth + 1):
        for d in directions(n):
            coords = [2 * a] * n
            coords[d.axis] = d.sign * 3 * a
            p = tuple(coords)
            pts.append(p)
            rows.append(
                {
                    "point": p,
                    "direction": d.label,
                    "level": a,
                    "maxformLevel": maxform_level(p, d, origin),
                    "sumformShell": shell_index(p, d, origin),
                    "interceptsRunner": {
                        run.label: shell_index(p, run, origin) >= 0 for run in directions(n)
                    },
                }
            )
    spec = CopSetSpec(n, (ExplicitFinite(frozenset(pts)),))
    return spec, CounterexampleCertificate(n, depth, tuple(rows))


# ---------------------------------------------------------------------------
# JSON (de)serialization: the copset file format


_SIGN_STR = {1: "+", -1: "-"}
_STR_SIGN = {"+": 1, "-": -1}


def generator_to_json(g: Generator) -> dict:
    if isinstance(g, ExplicitFinite):
        return {"kind": "explicit", "points": sorted([list(p) for p in g.points])}
    if isinstance(g, AxisGeometric):
        return {
            "kind": "axis_geometric",
            "axis": g.axis + 1,
            "base": g.base,
            "signs": sorted(_SIGN_STR[s] for s in g.signs),
            "startExponent": g.start_exponent,
        }
    if isinstance(g, AxisArithmetic):
        return {
            "kind": "axis_arithmetic",
            "axis": g.axis + 1,
            "step": g.step,
            "offset": g.offset,
            "signs": sorted(_SIGN_STR[s] for s in g.signs),
        }
    if isinstance(g, Sublattice):
        return {"kind": "sublattice", "moduli": list(g.moduli), "residues": list(g.residues)}
    return {
        "kind": "half_space",
        "axis": g.axis + 1,
        "sign": _SIGN_STR[g.sign],
        "threshold": g.threshold,
    }


def spec_to_json(spec: CopSetSpec) -> dict:
    return {
        "dimension": spec.dimension,
        "generators": [generator_to_json(g) for g in spec.generators],
    }


def _require(doc: dict, key: str, kind: str):
    if key not in doc:
        raise BadSpec(f"{kind} generator missing field {key!r}")
    return doc[key]


def _parse_signs(raw, kind: str) -> frozenset[int]:
    try:
        signs = frozenset(_STR_SIGN[s] for s in raw)
    except (KeyError, TypeError):
        raise BadSpec(f"{kind} signs must be a list drawn from ['+','-'], got {raw!r}")
    return signs


def parse_generator(doc: dict) -> Generator:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise BadSpec(f"generator must be an object with a 'kind', got {doc!r}")
    kind = doc["kind"]
    try:
        if kind == "explicit":
            return ExplicitFinite(frozenset(tuple(int(x) for x in p) for p in _require(doc, "points", kind)))
        if kind == "axis_geometric":
            return AxisGeometric(
                axis=int(_require(doc, "axis", kind)) - 1,
                base=int(_require(doc, "base", kind)),
                signs=_parse_signs(_require(doc, "signs", kind), kind),
                start_exponent=int(doc.get("startExponent", 0)),
            )
        if kind == "axis_arithmetic":
            return AxisArithmetic(
                axis=int(_require(doc, "axis", kind)) - 1,
                step=int(_require(doc, "step", kind)),
                offset=int(_require(doc, "offset", kind)),
                signs=_parse_signs(_require(doc, "signs", kind), kind),
            )
        if kind == "sublattice":
            return Sublattice(
                moduli=tuple(int(x) for x in _require(doc, "moduli", kind)),
                residues=tuple(int(x) for x in _require(doc, "residues", kind)),
            )
        if kind == "half_space":
            sign = _require(doc, "sign", kind)
            if sign not in _STR_SIGN:
                raise BadSpec(f"half_space sign must be '+' or '-', got {sign!r}")
            return HalfSpace(
                axis=int(_require(doc, "axis", kind)) - 1,
                sign=_STR_SIGN[sign],
                threshold=int(_require(doc, "threshold", kind)),
            )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, BadSpec):
            raise
        raise BadSpec(f"malformed {kind} generator: {exc}") from exc
    raise BadSpec(f"unknown generator kind {kind!r}")


def parse_spec(doc: dict) -> CopSetSpec:
    if not isinstance(doc, dict):
        raise BadSpec(f"copset document must be an object, got {type(doc).__name__}")
    if "dimension" not in doc or "generators" not in doc:
        raise BadSpec("copset document needs 'dimension' and 'generators'")
    try:
        n = int(doc["dimension"])
    except (TypeError, ValueError):
        raise BadSpec(f"dimension must be an integer, got {doc['dimension']!r}")
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise BadSpec("'generators' must be a nonempty list")
    return CopSetSpec(n, tuple(parse_generator(g) for g in gens))


# ---------------------------------------------------------------------------
# Well-known configurations


def theorem1_spec(n: int = 2) -> CopSetSpec:
    """Density-zero winning set: cops at +/- 2**m on every axis, m >= 1."""
    return CopSetSpec(
        n,
        tuple(
            AxisGeometric(axis=a, base=2, signs=frozenset({1, -1}), start_exponent=1)
            for a in range(n)
        ),
    )


def halfplane_spec() -> CopSetSpec:
    """The upper half plane of Z^2: density 1/2, yet losing."""
    return CopSetSpec(2, (HalfSpace(axis=1, sign=1, threshold=0),))


def even_rows_spec() -> CopSetSpec:
    """Z x 2Z: density 1/2 and winning."""
    return CopSetSpec(2, (Sublattice(moduli=(1, 2), residues=(0, 0)),))

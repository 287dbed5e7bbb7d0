"""Cops-and-Robbers pursuit on the infinite lattice Z^n."""

from .copsets import (
    AxisArithmetic,
    AxisGeometric,
    BadSpec,
    BoundedDirection,
    CopSetSpec,
    ExplicitFinite,
    HalfSpace,
    Sublattice,
    analytic_density,
    census,
    classify,
    contains,
    estimate_density,
    even_rows_spec,
    find_cop_in_cone,
    halfplane_spec,
    maxform_counterexample,
    parse_spec,
    spec_to_json,
    theorem1_spec,
)
from .engine import GameConfig, GameResult, Status, capture_bound, run_game, run_multi
from .geometry import STAY, Direction, Move, Point, l1_distance, shell_index
from .strategy import (
    AxisRunner,
    GreedyEvader,
    RandomWalk,
    Scripted,
    interception_predicate,
    select_active_cops,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

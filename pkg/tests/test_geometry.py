import random

import pytest
from hypothesis import given, strategies as st

from latticecops.geometry import (
    STAY,
    DimensionMismatch,
    Direction,
    Move,
    directions,
    l1_distance,
    offaxis_vectors,
    shell_index,
    shell_points,
    shell_shift_bound,
)

points3 = st.tuples(*[st.integers(-50, 50)] * 3)


def test_l1_examples():
    assert l1_distance((0, 0), (0, 0)) == 0
    assert l1_distance((0, 0), (3, -4)) == 7
    assert l1_distance((1, 1, 1), (2, 0, 1)) == 2


def test_l1_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        l1_distance((0, 0), (0, 0, 0))


@given(points3, points3, points3)
def test_l1_metric_axioms(p, q, r):
    assert l1_distance(p, p) == 0
    assert l1_distance(p, q) == l1_distance(q, p)
    assert (l1_distance(p, q) == 0) == (p == q)
    assert l1_distance(p, r) <= l1_distance(p, q) + l1_distance(q, r)


def test_shell_index_examples():
    assert shell_index((4, 0), Direction(0, 1), (0, 0)) == 4
    # The max-form/sum-form divergence witness: max-form would give level 1.
    assert shell_index((3, 2, 2), Direction(0, 1), (0, 0, 0)) == -1
    assert shell_index((2, 1), Direction(0, 1), (1, 1)) == 1


def test_shell_shift_bound_examples():
    assert shell_shift_bound((8, 0), Direction(0, 1), (0, 0), (1, 1))
    assert shell_shift_bound((3, -2), Direction(1, -1), (2, 2), (2, 2))


def test_shell_shift_bound_sampled():
    rng = random.Random(20240817)
    dirs = directions(3)
    for _ in range(10_000):
        p, q, q2 = (
            tuple(rng.randint(-40, 40) for _ in range(3)) for _ in range(3)
        )
        d = rng.choice(dirs)
        assert shell_shift_bound(p, d, q, q2)


@given(points3, points3, st.sampled_from(directions(3)))
def test_opposite_cones_overlap_nonpositively(p, apex, d):
    assert shell_index(p, d, apex) + shell_index(p, d.opposite(), apex) <= 0


@given(
    st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
    st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
    st.sampled_from(directions(2)),
)
def test_sum_form_equals_max_form_in_2d(p, apex, d):
    m = d.axis
    j = 1 - m
    max_form = d.sign * (p[m] - apex[m]) - abs(p[j] - apex[j])
    assert shell_index(p, d, apex) == max_form


def test_directions_canonical_order():
    assert [d.label for d in directions(2)] == ["X1+", "X1-", "X2+", "X2-"]
    assert len(directions(4)) == 8


def test_direction_parse_roundtrip():
    for d in directions(3):
        assert Direction.parse(d.label) == d
    with pytest.raises(ValueError):
        Direction.parse("Y1+")


def test_move_apply():
    assert STAY.apply((1, 2)) == (1, 2)
    assert Move(0, 1).apply((1, 2)) == (2, 2)
    assert Move(1, -1).apply((1, 2)) == (1, 1)
    with pytest.raises(ValueError):
        Move(0, 2)


def test_offaxis_vectors_norm_and_count():
    vs = list(offaxis_vectors(2, 3))
    assert all(sum(abs(x) for x in v) == 3 for v in vs)
    assert len(vs) == len(set(vs)) == 12  # 4*r vectors at L1 radius r in Z^2


def test_shell_points_lie_on_shell():
    apex = (1, -2, 3)
    d = Direction(1, -1)
    for p in shell_points(apex, d, 2, 3):
        assert shell_index(p, d, apex) == 2
        off = sum(abs(a - b) for j, (a, b) in enumerate(zip(p, apex)) if j != d.axis)
        assert off == 3

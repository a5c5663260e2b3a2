import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signbal import (
    DegenerateHullError,
    EuclideanNorm,
    EvenCardinalityError,
    MaxNorm,
    NotUnitError,
    Vec2,
    ZeroVectorError,
    alternating_balance,
    alternating_sum,
    balance_three,
    boundary_order,
    canonical_flip,
    cross,
    edge_vectors,
    hull_of_plus_minus,
    odd_prefix_points,
    polygon_norm,
)
from conftest import (
    all_sign_tuples,
    norm_and_units_strategy,
    signed_sum,
    unit_vectors_strategy,
)

TAU = 1e-9
EUCLID = EuclideanNorm()
R3 = math.sqrt(3.0) / 2.0  # exact-unit stand-in for the 0.866 of the examples
HEX_UNITS = [Vec2(1.0, 0.0), Vec2(0.5, R3), Vec2(-0.5, R3)]  # 0, 60, 120 degrees


def test_canonical_flip_examples():
    assert canonical_flip(Vec2(0.5, -0.2)) == (Vec2(-0.5, 0.2), -1)
    assert canonical_flip(Vec2(1.0, 0.0)) == (Vec2(1.0, 0.0), 1)
    assert canonical_flip(Vec2(-1.0, 0.0)) == (Vec2(1.0, 0.0), -1)
    with pytest.raises(ZeroVectorError):
        canonical_flip(Vec2(0.0, 0.0))


def test_boundary_order_flip_and_tie_break():
    ordering = boundary_order([Vec2(0, 1), Vec2(1, 0), Vec2(-1, 0)])
    assert [v.as_tuple() for v in ordering.ordered] == [(1.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
    assert ordering.perm == (1, 2, 0)
    assert ordering.flips == (1, 1, -1)


def test_boundary_order_keeps_sorted_input():
    ordering = boundary_order(HEX_UNITS)
    assert ordering.perm == (0, 1, 2)
    assert ordering.flips == (1, 1, 1)
    assert list(ordering.ordered) == HEX_UNITS


def test_boundary_order_flip_then_sort():
    ordering = boundary_order([Vec2(-0.5, -R3), Vec2(1.0, 0.0)])
    assert [v.as_tuple() for v in ordering.ordered] == [(1.0, 0.0), (0.5, R3)]
    assert ordering.flips == (-1, 1)
    assert ordering.perm == (1, 0)


@given(data=norm_and_units_strategy(min_size=1, max_size=11))
def test_boundary_order_postconditions(data):
    # independent angle check: directions nondecreasing in [0, pi)
    _, units = data
    ordering = boundary_order(units)
    for j, i in enumerate(ordering.perm):
        assert ordering.ordered[j] == units[i] * float(ordering.flips[i])
    for v in ordering.ordered:
        assert v.y > 0.0 or (v.y == 0.0 and v.x > 0.0)
    # independent sortedness check via computed angles (atan2 rounds the
    # near-pi boundary onto pi itself, hence the slack)
    angles = [math.atan2(v.y, v.x) for v in ordering.ordered]
    for a, b in zip(angles, angles[1:]):
        assert b >= a - 1e-12
    # ties are consecutive and by ascending input index
    for j in range(len(units) - 1):
        if cross(ordering.ordered[j], ordering.ordered[j + 1]) == 0.0:
            same = ordering.ordered[j] == ordering.ordered[j + 1]
            if same:
                assert ordering.perm[j] < ordering.perm[j + 1]


def test_edge_vectors_examples():
    order2 = boundary_order([Vec2(1, 0), Vec2(0, 1)])
    assert [e.as_tuple() for e in edge_vectors(order2)] == [(-1.0, 1.0), (-1.0, -1.0)]
    order1 = boundary_order([Vec2(0.6, 0.8)])
    assert edge_vectors(order1) == [Vec2(-1.2, -1.6)]  # -2v for a single vector
    order3 = boundary_order([Vec2(1.0, 0.0), Vec2(0.5, 0.866), Vec2(-0.5, 0.866)])
    assert [e.as_tuple() for e in edge_vectors(order3)] == [
        (-0.5, 0.866),
        (-1.0, 0.0),
        (-0.5, -0.866),
    ]


def test_alternating_balance_same_vector():
    # n copies of one unit vector: the signed sum telescopes to the vector
    # itself, so the bound 1 is attained exactly
    v = Vec2(1.0, 0.0)
    cert = alternating_balance(EUCLID, [v, v, v])
    assert cert.signed_sum == v
    assert EUCLID.value(cert.signed_sum) == 1.0


def test_alternating_balance_hexagon_cancels():
    cert = alternating_balance(EUCLID, HEX_UNITS)
    assert abs(cert.signed_sum.x) <= TAU and abs(cert.signed_sum.y) <= TAU
    assert cert.prefix_norms[-1] <= TAU
    assert cert.signs_original == (1, -1, 1)


def test_alternating_balance_max_norm_triple_against_brute_force():
    norm = MaxNorm()
    units = [Vec2(1.0, 0.5), Vec2(-1.0, 0.5), Vec2(0.0, 1.0)]
    cert = alternating_balance(norm, units)
    achieved = norm.value(cert.signed_sum)
    assert achieved <= 1.0 + TAU
    best = min(
        norm.value(signed_sum(units, signs)) for signs in all_sign_tuples(3, fix_first=False)
    )
    assert best <= achieved + 1e-12


def test_alternating_balance_rejects_even_and_non_unit():
    with pytest.raises(EvenCardinalityError):
        alternating_balance(EUCLID, [Vec2(1, 0), Vec2(0, 1)])
    with pytest.raises(NotUnitError) as exc_info:
        alternating_balance(EUCLID, [Vec2(1, 0), Vec2(0.5, 0.5), Vec2(0, 1)])
    assert exc_info.value.indices == [1]


def test_certificate_shape():
    cert = alternating_balance(EUCLID, HEX_UNITS)
    assert cert.signs_ordered == (1, -1, 1)
    assert cert.bound_total == 1.0
    assert cert.bound_odd_prefix == 1.0
    assert cert.bound_all_prefix == 2.0
    assert cert.norm_used == "euclidean"
    assert len(cert.prefix_sums) == 3 and len(cert.prefix_norms) == 3
    assert cert.bound_verdicts() == {"total": True, "odd_prefix": True, "all_prefix": True}


@given(data=norm_and_units_strategy(min_size=1, max_size=11, odd=True))
def test_balance_bounds_hold(data):
    norm, units = data
    cert = alternating_balance(norm, units)
    assert norm.value(cert.signed_sum) <= 1.0 + TAU
    assert cert.max_odd_prefix_norm() <= 1.0 + TAU
    assert cert.max_prefix_norm() <= 2.0 + TAU
    # consistency of the two signed-sum computations
    assert abs(cert.signed_sum.x - cert.prefix_sums[-1].x) <= TAU
    assert abs(cert.signed_sum.y - cert.prefix_sums[-1].y) <= TAU


@given(data=norm_and_units_strategy(min_size=1, max_size=11, odd=True))
def test_proof_identity_edge_sum_is_minus_double_alternating_sum(data):
    # w* = a_1 - a_2 + ... + a_n telescopes to -2 * (v_1 - v_2 + ... + v_n)
    _, units = data
    ordering = boundary_order(units)
    u_star = alternating_sum(ordering.ordered) * 2.0
    w_star = alternating_sum(edge_vectors(ordering))
    assert abs(w_star.x + u_star.x) <= 1e-12
    assert abs(w_star.y + u_star.y) <= 1e-12


@given(data=norm_and_units_strategy(min_size=1, max_size=11, odd=True),
       j=st.integers(0, 10))
def test_negation_invariance(data, j):
    norm, units = data
    j %= len(units)
    cert = alternating_balance(norm, units)
    negated = list(units)
    negated[j] = -negated[j]
    cert2 = alternating_balance(norm, negated)
    assert cert2.signed_sum == cert.signed_sum
    assert cert2.prefix_norms == cert.prefix_norms
    assert cert2.signs_original[j] == -cert.signs_original[j]
    others = [i for i in range(len(units)) if i != j]
    assert all(cert2.signs_original[i] == cert.signs_original[i] for i in others)


@given(data=norm_and_units_strategy(min_size=1, max_size=9, odd=True),
       seed=st.integers(0, 2**32))
def test_permutation_invariance(data, seed):
    import random as pyrandom

    norm, units = data
    cert = alternating_balance(norm, units)
    shuffled = list(units)
    pyrandom.Random(seed).shuffle(shuffled)
    cert2 = alternating_balance(norm, shuffled)
    # distinct directions: the ordered sequence is unique, so prefix data is
    # bit-identical; exact direction ties can only permute equal vectors
    assert cert2.prefix_norms == pytest.approx(cert.prefix_norms, abs=1e-12)
    assert abs(cert2.signed_sum.x - cert.signed_sum.x) <= 1e-12
    assert abs(cert2.signed_sum.y - cert.signed_sum.y) <= 1e-12


@given(units=unit_vectors_strategy(EUCLID, min_size=1, max_size=11, odd=True),
       rot=st.integers(1, 719))
def test_euclidean_rotation_equivariance(units, rot):
    # rotating every input rotates the signed sum (up to global sign: the
    # boundary order may start elsewhere) and preserves its norm
    theta = 2.0 * math.pi * rot / 720.0
    c, s = math.cos(theta), math.sin(theta)
    rotated = [Vec2(c * v.x - s * v.y, s * v.x + c * v.y) for v in units]
    cert = alternating_balance(EUCLID, units)
    cert2 = alternating_balance(EUCLID, rotated)
    assert EUCLID.value(cert2.signed_sum) == pytest.approx(
        EUCLID.value(cert.signed_sum), abs=1e-9
    )
    expected = Vec2(
        c * cert.signed_sum.x - s * cert.signed_sum.y,
        s * cert.signed_sum.x + c * cert.signed_sum.y,
    )
    same = (
        abs(cert2.signed_sum.x - expected.x) <= 1e-9
        and abs(cert2.signed_sum.y - expected.y) <= 1e-9
    )
    negated = (
        abs(cert2.signed_sum.x + expected.x) <= 1e-9
        and abs(cert2.signed_sum.y + expected.y) <= 1e-9
    )
    assert same or negated


def test_odd_prefix_points_examples():
    single = boundary_order([Vec2(0.0, 1.0)])
    assert odd_prefix_points(single) == [Vec2(0.0, 1.0)]
    ordering = boundary_order(HEX_UNITS)
    points = odd_prefix_points(ordering)
    assert len(points) == 2
    assert points[0] == Vec2(1.0, 0.0)
    assert abs(points[1].x) <= TAU and abs(points[1].y) <= TAU
    with pytest.raises(EvenCardinalityError):
        odd_prefix_points(boundary_order([Vec2(1, 0), Vec2(0, 1)]))


@given(data=norm_and_units_strategy(min_size=1, max_size=11, odd=True))
def test_odd_prefix_points_match_certificate_and_lie_in_hull(data):
    norm, units = data
    cert = alternating_balance(norm, units)
    points = odd_prefix_points(cert.ordering)
    for k, point in enumerate(points):
        ref = cert.prefix_sums[2 * k]
        assert abs(point.x - ref.x) <= TAU and abs(point.y - ref.y) <= TAU
    try:
        gauge = polygon_norm(hull_of_plus_minus(units))
    except DegenerateHullError:
        return
    for point in points:
        assert gauge.value(point) <= 1.0 + TAU


def test_balance_three_examples():
    v = Vec2(1.0, 0.0)
    eu, ev, ew = balance_three(EUCLID, v, v, v)
    assert eu == 1 and sorted((ev, ew)) == [-1, 1]

    eu, ev, ew = balance_three(EUCLID, Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0))
    assert eu == 1
    total = signed_sum([Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0)], (eu, ev, ew))
    assert EUCLID.value(total) == pytest.approx(1.0, abs=TAU)
    # brute force over the 4 sign pairs with the first sign +1: norm 1 is best
    best = min(
        EUCLID.value(signed_sum([Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0)], signs))
        for signs in all_sign_tuples(3, fix_first=True)
    )
    assert best == pytest.approx(1.0, abs=1e-12)

    eu, ev, ew = balance_three(EUCLID, *HEX_UNITS)
    total = signed_sum(HEX_UNITS, (eu, ev, ew))
    assert EUCLID.value(total) <= TAU


@given(data=norm_and_units_strategy(min_size=3, max_size=3))
def test_balance_three_contract(data):
    norm, (u, v, w) = data
    eu, ev, ew = balance_three(norm, u, v, w)
    assert eu == 1 and ev in (-1, 1) and ew in (-1, 1)
    assert norm.value(signed_sum([u, v, w], (eu, ev, ew))) <= 1.0 + TAU


def test_all_parallel_inputs_still_balance():
    # degenerate hull: the ordered vectors coincide and the sum telescopes
    v = Vec2(0.6, 0.8)
    cert = alternating_balance(EUCLID, [v, -v, v, -v, v])
    assert cert.signed_sum == v or cert.signed_sum == -v
    assert EUCLID.value(cert.signed_sum) == pytest.approx(1.0, abs=1e-12)
    assert cert.max_odd_prefix_norm() <= 1.0 + TAU
    with pytest.raises(DegenerateHullError):
        hull_of_plus_minus([v, -v, v, -v, v])

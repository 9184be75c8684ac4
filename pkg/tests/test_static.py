import pytest
from gmpy2 import mpq

from frechet1d.core import TimeSeries
from frechet1d.oracle import freespace_decide, freespace_distance, random_instance
from frechet1d.static import (
    build_modified_matrix,
    compute_landmarks,
    decide_static,
    exact_distance,
    reachable,
)


def test_reversed_pair_is_unreachable():
    P, Q = TimeSeries([0, 2]), TimeSeries([2, 0])
    M = build_modified_matrix(P, Q, mpq(1))
    assert M.shape == (3, 3)
    assert M.entry(1, 1) == 0
    assert not reachable(M)
    assert exact_distance(P, Q) == 2


def test_identical_curves_at_zero():
    P = TimeSeries([0, 3, 1, 4, -2])
    assert decide_static(P, P, 0)
    assert exact_distance(P, P) == 0


def test_back_and_forth_costs_half_height():
    # the wiggle in Q has to be matched to a single point of P
    assert exact_distance(TimeSeries([0, 10]), TimeSeries([0, 6, 2, 10])) == 2


def test_reachable_accepts_raw_bits():
    assert reachable([bytearray(b"\x01\x01"), bytearray(b"\x00\x01")])
    assert reachable([bytearray(b"\x01\x00"), bytearray(b"\x00\x01")])  # diagonal step
    assert not reachable([bytearray(b"\x01\x00\x00"), bytearray(b"\x00\x00\x01")])


@pytest.mark.parametrize("family", ["uniform", "near-ties", "flat", "2delta-edge"])
def test_decision_matches_oracle(family):
    for seed in range(150):
        P, Q, d = random_instance(seed, n_range=(2, 9), family=family)
        assert decide_static(P, Q, d) == freespace_decide(P, Q, d), (P, Q, d)


def test_distance_matches_oracle():
    for seed in range(120):
        P, Q, _ = random_instance(1000 + seed, n_range=(2, 8))
        assert exact_distance(P, Q) == freespace_distance(P, Q)


def test_landmarks_agree_with_value_based_computation():
    for seed in range(200):
        P, Q, d = random_instance(seed, n_range=(2, 9))
        M = build_modified_matrix(P, Q, d)
        assert M.landmarks == compute_landmarks(P, Q, d, M.sig_p, M.sig_q)


def test_float_mode_tolerance():
    P, Q = TimeSeries([0.0, 0.3]), TimeSeries([0.1, 0.4])
    assert not decide_static(P, Q, 0.1 - 1e-12)
    assert decide_static(P, Q, 0.1 - 1e-12, tol=1e-9)


def _grid(*rows):
    return [bytearray(r) for r in rows]


def test_reachability_small_grids():
    assert reachable(_grid([1, 1, 1], [1, 1, 1], [1, 1, 1]))
    assert not reachable(_grid([1, 1, 1], [0, 0, 0], [1, 1, 1]))
    assert reachable(_grid([1, 1, 1], [1, 0, 1], [1, 1, 1]))


def test_segment_examples():
    P = TimeSeries([0, 2])
    assert decide_static(P, TimeSeries([0, 1]), 1)
    assert exact_distance(P, TimeSeries([0, 1])) == 1
    assert not decide_static(P, TimeSeries([2, 0]), mpq(199, 100))
    assert decide_static(P, TimeSeries([2, 0]), 2)


def test_symmetry_and_monotonicity():
    for seed in range(150):
        P, Q, d = random_instance(3000 + seed, n_range=(2, 9))
        a = decide_static(P, Q, d)
        assert a == decide_static(Q, P, d)
        if a:
            assert decide_static(P, Q, d + mpq(1, 3))

import random

from gmpy2 import mpq

from frechet1d.boundary import (
    INF,
    boundaries,
    brute_deadlock,
    check_extreme_point_sequence,
    decide_boundary_frechet,
    extreme_point_sequence,
    has_deadlock,
    minimal_matcher,
    preliminary_assignment,
)
from frechet1d.core import TimeSeries
from frechet1d.oracle import brute_min_matcher, freespace_decide
from frechet1d.signature import compute_extended_signature


def _band(rng, n, width):
    # a boundary series ends at a global extremum of itself
    base = rng.randint(-5, 5)
    vals = [base + rng.randint(0, width) for _ in range(n - 1)]
    vals.append(rng.choice((min(vals), max(vals))) if n > 1 else base)
    return TimeSeries(vals, allow_single=True)


def test_extreme_points_are_valid():
    rng = random.Random(1)
    for _ in range(200):
        B = _band(rng, rng.randint(1, 8) + 1, 6)
        seq = extreme_point_sequence(B)
        assert seq[0] == 0
        assert check_extreme_point_sequence(B, seq)


def test_deadlock_fast_equals_brute():
    rng = random.Random(2)
    for _ in range(2000):
        d = mpq(rng.randint(1, 3))
        P, Q = _band(rng, rng.randint(2, 8), int(2 * d)), _band(rng, rng.randint(2, 8), int(2 * d))
        a, b = extreme_point_sequence(P), extreme_point_sequence(Q)
        X = preliminary_assignment(P, a, Q, b, d)
        Y = preliminary_assignment(Q, b, P, a, d)
        assert has_deadlock(X, Y)[0] == brute_deadlock(X, Y)


def test_preliminary_assignment():
    P = TimeSeries([0, 2])
    Q = TimeSeries([0, 5])
    assert preliminary_assignment(P, [0, 1], Q, [0, 1], mpq(1)) == [0, INF]
    assert preliminary_assignment(Q, [0, 1], P, [0, 1], mpq(1)) == [0, INF]


def test_boundary_decision_matches_oracle():
    rng = random.Random(3)
    checked = 0
    for _ in range(600):
        d = mpq(rng.randint(1, 4))
        P, Q = _band(rng, rng.randint(2, 7), int(2 * d)), _band(rng, rng.randint(2, 7), int(2 * d))
        assert decide_boundary_frechet(P, Q, d) == freespace_decide(P, Q, d)
        checked += 1
    assert checked == 600


def test_boundaries_split_at_signature():
    P = TimeSeries([0, 1, 9, 8, 0, 1])
    S = compute_extended_signature(P, mpq(1))
    pre, suf = boundaries(P, S)
    assert pre.anchor_index == S.second and not pre.is_suffix
    assert suf.is_suffix and suf.series[0] == P[-1]


def test_minimal_matcher_matches_brute():
    rng = random.Random(4)
    for _ in range(400):
        d = mpq(rng.randint(1, 3))
        B = _band(rng, rng.randint(1, 5) + 1, int(2 * d))
        # as inside the pipeline: Q[0..j2] is itself a boundary band, then anything
        head = _band(rng, rng.randint(1, 5), int(2 * d))
        j2 = len(head) - 1
        Q = TimeSeries(list(head) + [rng.randint(-6, 10) for _ in range(rng.randint(1, 3))])
        got = minimal_matcher(B, Q, j2, d)
        ref = brute_min_matcher(B, Q.subseries(0, j2, allow_single=True), d)
        assert got == ref, (B, Q, j2, d)

"""From-scratch recomputations the incremental sweeps are checked against."""

from frechet1d.boundary import _assignments, boundaries, has_deadlock
from frechet1d.signature import compute_extended_signature

FAMILIES = ("uniform", "near-ties", "flat", "2delta-edge")


def scratch_deadlock_free(P, Q, delta):
    """``(prefix deadlock-free, suffix deadlock-free)`` for the static pair."""
    SP, SQ = compute_extended_signature(P, delta), compute_extended_signature(Q, delta)
    (pp, ps), (qp, qs) = boundaries(P, SP), boundaries(Q, SQ)
    pre = not has_deadlock(*_assignments(pp.series, qp.series, delta))[0]
    suf = not has_deadlock(*_assignments(ps.series, qs.series, delta))[0]
    return pre, suf

from gmpy2 import mpq

from frechet1d.oracle import random_instance
from frechet1d.scaling import _engine as scaling_engine
from frechet1d.scaling import scaling_representatives
from frechet1d.static import build_modified_matrix
from frechet1d.sweep import BREAK, ENTRY, EXIT, Flip, SweepStats, representatives, run_sweep
from frechet1d.translation import _engine as translation_engine
from frechet1d.translation import translation_representatives

from helpers import FAMILIES


def _gap(x, y):
    return x + 1 if y is None else (x + y) / 2


def test_flip_order_entries_first():
    fl = sorted([Flip(1, BREAK, -1, -1, 1), Flip(1, EXIT, 0, 0, -1), Flip(1, ENTRY, 0, 1, 0)], key=Flip.key)
    assert [f.order for f in fl] == [ENTRY, EXIT, BREAK]


def test_representatives_skip_unrealizable_states():
    flips = [Flip(1, ENTRY, 0, 0, 0), Flip(1, EXIT, 0, 1, -1), Flip(3, EXIT, 1, 1, -1)]
    assert representatives(flips, 0, _gap) == [(0, 0), (1, 1), (2, 2), (4, 3)]


def test_representatives_merge_duplicate_prefixes():
    flips = [Flip(1, EXIT, 0, 0, -1), Flip(2, ENTRY, 0, 1, 0)]
    assert representatives(flips, 0, _gap) == [(0, 0), (mpq(3, 2), 1), (2, 2)]


def test_stats_dict():
    st = SweepStats(events=3, backend="baseline")
    assert st.as_dict() == {"events": 3, "representatives": 0, "cell_updates": 0, "backend": "baseline"}


def test_incremental_grid_equals_static_grid():
    checked = 0
    for seed in range(80):
        P, Q, d = random_instance(seed, n_range=(2, 7), family=FAMILIES[seed % 4])
        E = translation_representatives(P, Q, d)

        def chk(r, eng, E=E):
            nonlocal checked
            checked += 1
            assert eng.bits == build_modified_matrix(P, Q.translate(E.representatives[r][0]), d).bits

        run_sweep(translation_engine(P, Q, d), E.flips, E.representatives, on_rep=chk)
        if all(q == 0 for q in Q):
            continue
        S = scaling_representatives(P, Q, d)

        def chk2(r, eng, S=S):
            nonlocal checked
            checked += 1
            assert eng.bits == build_modified_matrix(P, Q.scale(S.representatives[r][0]), d).bits

        run_sweep(scaling_engine(S), S.flips, S.representatives, frames=S.frames, on_rep=chk2)
    assert checked > 1000

import random

import pytest

from frechet1d.reach import (
    KERNEL,
    BaselineBackend,
    GridUpdate,
    PyReachGrid,
    ReachGrid,
    available_backends,
    get_backend,
    offline_reachability,
    register_backend,
)
from frechet1d.static import reachable

KERNELS = [PyReachGrid] + ([ReachGrid] if ReachGrid is not PyReachGrid else [])


def _random_case(rng):
    rows, cols = rng.randint(1, 7), rng.randint(1, 7)
    grid = [bytearray(rng.random() < 0.7 for _ in range(cols)) for _ in range(rows)]
    ups = []
    for _ in range(rng.randint(0, 25)):
        kind = rng.choice(("activate", "deactivate"))
        ups.append(GridUpdate(kind, (rng.randrange(rows), rng.randrange(cols))))
    return grid, ups


def _reference(grid, ups):
    g = [bytearray(r) for r in grid]
    out = [reachable(g)]
    for u in ups:
        g[u.cell[0]][u.cell[1]] = u.value
        out.append(reachable(g))
    return out


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.__module__.rsplit(".", 1)[-1])
def test_backend_matches_recomputation(kernel):
    rng = random.Random(5)
    for _ in range(600):
        grid, ups = _random_case(rng)
        assert BaselineBackend(grid, ups, kernel=kernel).answers() == _reference(grid, ups)


def test_prefix_subset():
    rng = random.Random(6)
    grid, ups = _random_case(rng)
    full = offline_reachability(grid, ups)
    part = BaselineBackend(grid, ups).answers(prefixes=[0, len(ups)])
    assert part[0] == full[0] and part[-1] == full[-1]
    assert all(x is None for x in part[1:-1])


def test_kernel_set_reports_change():
    for kernel in KERNELS:
        g = kernel(2, 2, [bytearray(b"\x01\x01"), bytearray(b"\x01\x01")])
        assert g.reachable()
        assert g.set(0, 1, 1) is False or g.set(0, 1, 1) == 0
        assert g.set(1, 1, 0)
        assert not g.reachable()
        assert g.get(1, 1) == 0


def test_validation():
    with pytest.raises(ValueError):
        BaselineBackend([], [])
    with pytest.raises(IndexError):
        BaselineBackend([bytearray(b"\x01")], [GridUpdate("activate", (1, 0))])
    with pytest.raises(ValueError):
        GridUpdate("flip", (0, 0)).value


def test_registry():
    assert "baseline" in available_backends()
    register_backend("baseline-alias", BaselineBackend)
    assert get_backend("baseline-alias") is BaselineBackend
    with pytest.raises(KeyError):
        get_backend("nope")


def test_kernel_name():
    assert KERNEL in ("cython", "python")

import importlib
import math

import numpy as np
import pytest

from midarc import _pykernels, kernels
from midarc.arcs import arcs_of, iterate_angular, iterate_arcs, to_angular

try:
    from midarc import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


@pytest.fixture(scope="module")
def batch(samples):
    refs = [to_angular(t) for t in samples[:100]]
    thetas = np.array([r.thetas for r in refs])
    radius = np.array([r.circle.radius for r in refs])
    return refs, thetas, radius


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_angular_matches_scalar(impl, batch):
    refs, thetas, radius = batch
    traj = impl.angular_trajectories(thetas, 12)
    for i in range(0, 100, 9):
        for n in (0, 1, 5, 12):
            want = iterate_angular(refs[i], n).thetas
            assert traj[i, n] == pytest.approx(want, abs=1e-13)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_arcs_and_deviation_match_scalar(impl, batch):
    refs, thetas, radius = batch
    arcs = impl.arcs_from_positions(thetas[:, None, :], radius)[:, 0, :]
    traj = impl.arc_trajectories(arcs, 20)
    devs = impl.deviations(traj, 2 * math.pi * radius)
    for i in range(0, 100, 7):
        l0 = arcs_of(refs[i])
        assert arcs[i] == pytest.approx(l0.as_tuple(), abs=1e-14)
        for n in (0, 3, 20):
            want = iterate_arcs(l0, n)
            assert traj[i, n] == pytest.approx(want.as_tuple(), rel=1e-12)
            third = l0.circumference / 3
            assert devs[i, n] == pytest.approx(max(abs(x - third) for x in traj[i, n]), abs=0)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_bitwise_equal(batch):
    _, thetas, radius = batch
    a = _pykernels.angular_trajectories(thetas, 60)
    b = _ckernels.angular_trajectories(thetas, 60)
    assert np.array_equal(a, b)
    la = _pykernels.arcs_from_positions(a, radius)
    lb = _ckernels.arcs_from_positions(b, radius)
    assert np.array_equal(la, lb)
    assert np.array_equal(_pykernels.arc_trajectories(la[:, 0], 30), _ckernels.arc_trajectories(lb[:, 0], 30))
    circ = 2 * math.pi * radius
    assert np.array_equal(_pykernels.deviations(la, circ), _ckernels.deviations(lb, circ))


def test_pure_python_switch(monkeypatch):
    monkeypatch.setenv("MIDARC_PURE_PYTHON", "1")
    forced = importlib.reload(kernels)
    try:
        assert forced.BACKEND == "python"
        assert forced.angular_trajectories is _pykernels.angular_trajectories
    finally:
        monkeypatch.delenv("MIDARC_PURE_PYTHON")
        importlib.reload(kernels)


def test_empty_batch():
    for impl in BACKENDS:
        assert impl.angular_trajectories(np.zeros((0, 3)), 5).shape == (0, 6, 3)

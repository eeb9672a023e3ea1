import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scgraphs import _accel
from scgraphs.kernels import EigenSolverError, jacobi_eigh

BACKENDS = ["numpy"] + (["numba"] if _accel.NUMBA_AVAILABLE else [])


def sym(seed, n):
    r = np.random.default_rng(seed)
    a = r.normal(size=(n, n))
    return (a + a.T) / 2


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 5, 17, 40])
def test_matches_lapack(backend, n):
    a = sym(n, n)
    w, v, off, _ = jacobi_eigh(a, backend=backend)
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    np.testing.assert_allclose(w, ref, atol=1e-11)
    np.testing.assert_allclose(v @ np.diag(w) @ v.T, a, atol=1e-11)
    np.testing.assert_allclose(v.T @ v, np.eye(n), atol=1e-12)
    assert off <= 1e-14 * max(1.0, np.linalg.norm(a))


@given(st.integers(0, 10_000), st.integers(1, 12))
def test_backends_agree(seed, n):
    if len(BACKENDS) < 2:
        pytest.skip("numba missing")
    a = sym(seed, n)
    w1 = jacobi_eigh(a, backend="numpy")[0]
    w2 = jacobi_eigh(a, backend="numba")[0]
    np.testing.assert_allclose(w1, w2, atol=1e-12)


def test_input_untouched():
    a = sym(3, 6)
    b = a.copy()
    jacobi_eigh(a)
    assert np.array_equal(a, b)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        jacobi_eigh(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        jacobi_eigh(np.eye(2), backend="lapack")


def test_sweep_cap_raises():
    with pytest.raises(EigenSolverError):
        jacobi_eigh(sym(1, 30), max_sweeps=1)


def test_env_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("SCGRAPHS_NUMBA", "0")
    mod = importlib.reload(_accel)
    assert mod.USE_NUMBA is False
    monkeypatch.setenv("SCGRAPHS_NUMBA", "1")
    importlib.reload(_accel)

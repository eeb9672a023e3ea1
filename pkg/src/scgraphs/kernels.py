"""Cyclic Jacobi eigensolver for dense real symmetric matrices.

Two implementations share one contract:

* ``_jacobi_loops`` - scalar loops, compiled with numba when enabled;
* ``_jacobi_numpy`` - the same rotations written with numpy slices.

:func:`jacobi_eigh` picks one according to :data:`scgraphs._accel.USE_NUMBA`
unless a backend is requested explicitly.
"""

from __future__ import annotations

import math

import numpy as np

from ._accel import NUMBA_AVAILABLE, USE_NUMBA, njit

DEFAULT_MAX_SWEEPS = 60


class EigenSolverError(RuntimeError):
    """The Jacobi iteration did not reach the requested off-diagonal norm."""

    def __init__(self, sweeps: int, off_norm: float, target: float):
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps: "
            f"off-diagonal norm {off_norm:.3e} > {target:.3e}"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.target = target


def _rotation(app, aqq, apq):
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


_rotation_jit = njit(_rotation, cache=True)


def _off_norm_py(a):
    n = a.shape[0]
    s = 0.0
    for p in range(n):
        for q in range(n):
            if p != q:
                s += a[p, q] * a[p, q]
    return math.sqrt(s)


_off_norm_jit = njit(_off_norm_py, cache=True)


@njit(cache=True)
def _jacobi_loops(a, v, target, max_sweeps):
    n = a.shape[0]
    off = _off_norm_jit(a)
    sweeps = 0
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                c, s = _rotation_jit(a[p, p], a[q, q], apq)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        sweeps += 1
        off = _off_norm_jit(a)
    return off, sweeps


def _jacobi_numpy(a, v, target, max_sweeps):
    n = a.shape[0]
    mask = ~np.eye(n, dtype=bool)

    def off_norm():
        return float(np.sqrt(np.sum(a[mask] ** 2)))

    off = off_norm()
    sweeps = 0
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                c, s = _rotation(a[p, p], a[q, q], apq)
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_norm()
    return off, sweeps


def jacobi_eigh(
    matrix,
    *,
    rel_tol: float = 1e-14,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    backend: str | None = None,
):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    matrix : array_like, shape (n, n)
        Symmetric input; it is copied, never modified.
    rel_tol : float
        Iterate until the Frobenius norm of the off-diagonal part is at most
        ``rel_tol * max(1, ||matrix||_F)``.  By Weyl's inequality this also
        bounds the absolute error of every returned eigenvalue.
    max_sweeps : int
        Hard cap on the number of full sweeps.
    backend : {"numba", "numpy", None}
        ``None`` follows the ``SCGRAPHS_NUMBA`` environment switch.

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Sorted in descending order.
    eigenvectors : ndarray, shape (n, n)
        Column ``i`` belongs to ``eigenvalues[i]``.
    off_norm : float
        Achieved off-diagonal Frobenius norm (an a-posteriori error bound).
    sweeps : int

    Raises
    ------
    EigenSolverError
        If ``max_sweeps`` is exhausted before reaching the target.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    v = np.eye(n)
    target = rel_tol * max(1.0, float(np.linalg.norm(a)))

    if backend is None:
        backend = "numba" if USE_NUMBA else "numpy"
    if backend == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not installed")
        off, sweeps = _jacobi_loops(a, v, target, max_sweeps)
    elif backend == "numpy":
        off, sweeps = _jacobi_numpy(a, v, target, max_sweeps)
    else:
        raise ValueError(f"unknown backend {backend!r}")

    if off > target:
        raise EigenSolverError(sweeps, off, target)
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order], float(off), int(sweeps)

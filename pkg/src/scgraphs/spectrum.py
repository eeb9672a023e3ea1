"""Floating-point spectra, singular values, energy and Schatten norms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph
from .kernels import jacobi_eigh

TOL_FACTOR = 1e-9
ZERO_FACTOR = 1e-7
CLUSTER_GAP = 10.0


@dataclass(frozen=True)
class SpectrumNumeric:
    """Adjacency eigenvalues (descending) with tolerance-clustered multiplicities."""

    eigenvalues: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    tol: float
    residual: float = 0.0

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def radius(self) -> float:
        return max((abs(x) for x in self.eigenvalues), default=0.0)

    def to_json(self) -> str:
        """``{"groups": [[value, mult], ...], "tol": t}`` with 17 significant digits."""
        groups = ", ".join(f"[{_fmt(v)}, {m}]" for v, m in self.groups)
        return f'{{"groups": [{groups}], "tol": {_fmt(self.tol)}}}'

    def as_dict(self) -> dict:
        return {"groups": [[v, m] for v, m in self.groups], "tol": self.tol}


def _fmt(x: float) -> str:
    if x == 0:
        return "0"
    return f"{x:.17g}"


def default_tol(radius: float) -> float:
    return TOL_FACTOR * max(1.0, radius)


def zero_threshold(radius: float) -> float:
    return ZERO_FACTOR * max(1.0, radius)


def cluster(values, tol: float) -> tuple[tuple[float, int], ...]:
    """Single-linkage grouping of descending ``values``: a gap above ``10*tol`` starts a group."""
    groups: list[list[float]] = []
    for v in values:
        if groups and groups[-1][-1] - v <= CLUSTER_GAP * tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((float(np.mean(g)), len(g)) for g in groups)


@lru_cache(maxsize=16384)
def _decompose(g: Graph):
    w, v, off, _ = jacobi_eigh(g.adjacency())
    w.setflags(write=False)
    v.setflags(write=False)
    return w, v, off


def eigen_decomposition(g: Graph) -> tuple[np.ndarray, np.ndarray, float]:
    """``(eigenvalues desc, eigenvectors as columns, off-diagonal residual)``."""
    if g.n == 0:
        return np.zeros(0), np.zeros((0, 0)), 0.0
    return _decompose(g)


def eigenvalues(g: Graph, tol: float | None = None) -> SpectrumNumeric:
    """Adjacency spectrum of ``g``.

    ``tol`` defaults to ``1e-9 * max(1, rho(G))``.  The Jacobi solver runs to
    near machine precision and its a-posteriori residual is checked against
    ``tol``; a solver failure raises :class:`~scgraphs.kernels.EigenSolverError`.
    """
    if tol is not None and tol <= 0:
        raise ValueError("tol must be positive")
    w, _, off = eigen_decomposition(g)
    rho = float(np.max(np.abs(w))) if g.n else 0.0
    if tol is None:
        tol = default_tol(rho)
    if off > tol:
        raise ArithmeticError(f"eigenvalue residual {off:.3e} exceeds tol {tol:.3e}")
    vals = tuple(float(x) for x in w)
    return SpectrumNumeric(vals, cluster(vals, tol), tol, off)


def singular_values(g: Graph, tol: float | None = None) -> list[float]:
    """Absolute eigenvalues, descending."""
    spec = eigenvalues(g, tol)
    return sorted((abs(x) for x in spec.eigenvalues), reverse=True)


def nonzero_singular_values(g: Graph, tol: float | None = None) -> list[float]:
    """Singular values above the zero threshold ``1e-7 * max(1, rho)``."""
    s = singular_values(g, tol)
    cut = zero_threshold(s[0] if s else 0.0)
    return [x for x in s if x > cut]


def energy(g: Graph, tol: float | None = None) -> float:
    return math.fsum(singular_values(g, tol))


def schatten(g: Graph, p: float, tol: float | None = None) -> float:
    """Schatten p-norm ``(sum s_i**p)**(1/p)`` of the adjacency matrix, ``p >= 1``."""
    if not p >= 1:
        raise ValueError(f"Schatten norm needs p >= 1, got {p}")
    s = singular_values(g, tol)
    if not s or s[0] == 0.0:
        return 0.0
    top = s[0]
    # scale by s_1 so large p cannot overflow
    return top * math.fsum((x / top) ** p for x in s) ** (1.0 / p)


def spectral_radius(g: Graph, tol: float | None = None) -> float:
    return eigenvalues(g, tol).radius

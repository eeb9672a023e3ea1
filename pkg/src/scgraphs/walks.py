"""Closed-walk counts and the walk characterisation of singular cospectrality.

Two graphs are singularly cospectral iff they have equally many closed walks
of every even length.  Closed walks of length ``2k`` number
``trace(A**2k) = sum_i s_i**(2k)``; by Newton's identities the first
``max(n_g, n_h)`` even lengths already decide the question.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import disjoint_union
from .graph import Graph, cycle
from .poly import trace_powers


@dataclass(frozen=True)
class WalkProfile:
    """``counts[k - 1]`` is the number of closed walks of length ``2k``, ``k = 1..horizon``."""

    counts: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.counts)

    def closed_walks(self, k: int) -> int:
        """Closed walks of length ``2k``."""
        if not 1 <= k <= self.horizon:
            raise IndexError(f"k={k} outside 1..{self.horizon}")
        return self.counts[k - 1]


def walk_profile(g: Graph, horizon: int) -> WalkProfile:
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    traces = trace_powers(g, 2 * horizon)
    return WalkProfile(tuple(traces[1::2]))


def walk_equivalent(g: Graph, h: Graph, horizon: int | None = None) -> bool:
    """Equal closed-walk counts for all even lengths up to ``2 * horizon``.

    The default horizon ``max(n_g, n_h)`` makes this equivalent to singular
    cospectrality.
    """
    if horizon is None:
        horizon = max(g.n, h.n, 1)
    if g.m != h.m:
        return False
    return walk_profile(g, horizon) == walk_profile(h, horizon)


def cycle_pair(j: int) -> tuple[Graph, Graph]:
    """``(C_{2j}, C_j + C_j)``.

    Singularly cospectral (and NCSC) exactly when ``j`` is odd, where C_{2j} is
    the double cover of C_j.  For even ``j`` the closed 4-walk counts differ.
    """
    if j < 3:
        raise ValueError("cycle pair needs j >= 3")
    return cycle(2 * j), disjoint_union(cycle(j), cycle(j)).with_label(f"2C{j}")

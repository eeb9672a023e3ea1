"""Graph-building recipes: products, double covers, vertex addition, coalescence.

Vertex-order conventions (relied upon by the family builders and figures):

* two-copy constructions put copy one at ``0..n-1`` and copy two at ``n..2n-1``;
* products index ``(g, h)`` as ``g * n_h + h`` (row-major);
* an added vertex is always the last index;
* ``coalesce`` keeps the left graph's indices, the merged vertex keeps the
  left index, and the right graph's other vertices follow in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .graph import Graph, complete
from .poly import IntPolynomial
from .spectrum import cluster, default_tol, eigen_decomposition


def vertex_set(members: Iterable[int], n: int) -> tuple[int, ...]:
    """Sorted duplicate-free tuple of vertices, each checked against ``n``."""
    s = tuple(sorted(set(int(v) for v in members)))
    for v in s:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    return s


def tensor_k2(f: Graph) -> Graph:
    """Bipartite double cover F x K2, adjacency [[0, A], [A, 0]]."""
    n = f.n
    rows = [r << n for r in f.rows] + list(f.rows)
    return Graph(2 * n, tuple(rows), f"({f.label or 'F'})xK2")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows), f"({g.label or 'G'})+({h.label or 'H'})")


def double(f: Graph) -> Graph:
    """2F: two disjoint copies of ``f``."""
    return disjoint_union(f, f).with_label(f"2({f.label or 'F'})")


def _product(g: Graph, h: Graph, rule, tag: str) -> Graph:
    nh = h.n
    edges = []
    for g1 in range(g.n):
        for h1 in range(nh):
            for g2 in range(g.n):
                for h2 in range(nh):
                    a, b = g1 * nh + h1, g2 * nh + h2
                    if a < b and rule(g1 == g2, g.has_edge(g1, g2), h1 == h2, h.has_edge(h1, h2)):
                        edges.append((a, b))
    return Graph.from_edges(g.n * nh, edges, f"({g.label or 'G'}){tag}({h.label or 'H'})")


def strong_product(g: Graph, h: Graph) -> Graph:
    return _product(
        g, h,
        lambda geq, gadj, heq, hadj: (geq and hadj) or (heq and gadj) or (gadj and hadj),
        "[x]",
    )


def cartesian_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda geq, gadj, heq, hadj: (geq and hadj) or (heq and gadj), "[]")


def tensor_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda geq, gadj, heq, hadj: gadj and hadj, "x")


def add_vertex(g: Graph, s: Iterable[int]) -> Graph:
    """Append vertex ``n`` adjacent exactly to the nonempty set ``s``."""
    s = vertex_set(s, g.n)
    if not s:
        raise ValueError("the neighbour set of the added vertex must be nonempty")
    n = g.n
    mask = sum(1 << v for v in s)
    rows = [r | ((mask >> i) & 1) << n for i, r in enumerate(g.rows)]
    rows.append(mask)
    return Graph(n + 1, tuple(rows), f"({g.label or 'G'})+v")


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    low = (1 << v) - 1

    def squeeze(r):
        return (r & low) | ((r >> (v + 1)) << v)

    rows = tuple(squeeze(r) for i, r in enumerate(g.rows) if i != v)
    return Graph(g.n - 1, rows, f"({g.label or 'G'})-{v}")


def coalesce(g: Graph, gv: int, h: Graph, hv: int) -> Graph:
    """Identify vertex ``gv`` of ``g`` with vertex ``hv`` of ``h``.

    The result has ``n_g + n_h - 1`` vertices; the merged vertex is ``gv``.
    """
    if not 0 <= gv < g.n:
        raise ValueError(f"left vertex {gv} outside 0..{g.n - 1}")
    if not 0 <= hv < h.n:
        raise ValueError(f"right vertex {hv} outside 0..{h.n - 1}")
    hmap = {}
    nxt = g.n
    for u in range(h.n):
        if u == hv:
            hmap[u] = gv
        else:
            hmap[u] = nxt
            nxt += 1
    edges = list(g.edges()) + [(hmap[a], hmap[b]) for a, b in h.edges()]
    return Graph.from_edges(g.n + h.n - 1, edges, f"({g.label or 'G'}).({h.label or 'H'})")


# -- Rowlinson vertex addition ----------------------------------------------


@dataclass(frozen=True)
class RowlinsonResult:
    """Float coefficients (ascending powers) of the characteristic polynomial of G + v."""

    coeffs: np.ndarray
    eigenvalues: tuple[float, ...]
    rho_squared: tuple[float, ...]
    residual: float


def rowlinson_charpoly(g: Graph, s: Iterable[int], tol: float | None = None) -> RowlinsonResult:
    """P_{G*}(x) = P_G(x) * (x - sum_i rho_i**2 / (x - mu_i)) from the spectral decomposition.

    ``mu_i`` are the distinct eigenvalues of ``g`` (clustered at ``tol``) and
    ``rho_i`` is the norm of the projection of the indicator vector of ``s``
    onto the ``mu_i`` eigenspace.  The rational right-hand side is assembled as
    a polynomial of degree ``n + 1``.
    """
    s = vertex_set(s, g.n)
    if not s:
        raise ValueError("the neighbour set of the added vertex must be nonempty")
    w, vecs, _ = eigen_decomposition(g)
    rho = float(np.max(np.abs(w))) if g.n else 0.0
    if tol is None:
        tol = default_tol(rho)
    a = g.adjacency().astype(float)
    residual = float(np.linalg.norm(a @ vecs - vecs * w)) if g.n else 0.0
    if residual > 1e3 * tol:
        raise ArithmeticError(f"eigen-decomposition residual {residual:.3e} too large")

    groups = cluster(tuple(w), tol)
    indicator = np.zeros(g.n)
    indicator[list(s)] = 1.0
    mus, rho2 = [], []
    start = 0
    for value, mult in groups:
        block = vecs[:, start:start + mult]
        start += mult
        proj = block @ (block.T @ indicator)
        mus.append(value)
        rho2.append(float(proj @ proj))

    mults = [m for _, m in groups]

    def poly_from_roots(roots):
        # np.poly returns descending coefficients
        return np.poly(roots)[::-1] if len(roots) else np.ones(1)

    all_roots = [mu for mu, m in zip(mus, mults) for _ in range(m)]
    p_g = poly_from_roots(all_roots)
    result = np.zeros(g.n + 2)
    result[1:] += p_g
    for i, (mu, r2) in enumerate(zip(mus, rho2)):
        if r2 == 0.0:
            continue
        roots_i = [x for k, (nu, m) in enumerate(zip(mus, mults)) for x in [nu] * (m - (k == i))]
        term = poly_from_roots(roots_i)
        result[: len(term)] -= r2 * term
    return RowlinsonResult(result, tuple(mus), tuple(rho2), residual)


# -- families over K_n ------------------------------------------------------


def _family_set(n: int, j: int) -> list[int]:
    if n < 3:
        raise ValueError(f"family needs n >= 3, got {n}")
    if not 1 <= j <= n:
        raise ValueError(f"family needs 1 <= j <= n, got j={j}, n={n}")
    return list(range(j)) + list(range(n, n + j))


def family_gknj(n: int, j: int) -> Graph:
    """K_n x K_2 plus a vertex joined to x_1..x_j and y_1..y_j; the new vertex is ``2n``."""
    s = _family_set(n, j)
    return add_vertex(tensor_k2(complete(n)), s).with_label(f"G[K{n},{j}]")


def family_hknj(n: int, j: int) -> Graph:
    """2K_n plus a vertex joined to the same index set as :func:`family_gknj`."""
    s = _family_set(n, j)
    return add_vertex(double(complete(n)), s).with_label(f"H[K{n},{j}]")


def family_added_vertex(n: int) -> int:
    return 2 * n


def q_nj(n: int, j: int) -> IntPolynomial:
    """x(x+1)(x-(n-1)) - 2j(x-(n-1-j))."""
    x = IntPolynomial.x()
    return x * (x + 1) * (x - (n - 1)) - 2 * j * (x - (n - 1 - j))


def gknj_charpoly_formula(n: int, j: int) -> IntPolynomial:
    """(x-1)^{n-1} (x+1)^{n-2} (x+n-1) Q_{n,j}(x)."""
    x = IntPolynomial.x()
    return (x - 1) ** (n - 1) * (x + 1) ** (n - 2) * (x + (n - 1)) * q_nj(n, j)


def hknj_charpoly_formula(n: int, j: int, *, literal: bool = False) -> IntPolynomial:
    """(x+1)^{2n-3} (x-(n-1)) Q_{n,j}(x).

    ``literal=True`` returns the variant with ``(x-1)^{2n-3}``; it is not the
    characteristic polynomial (2K_n has no eigenvalue 1) and exists so that
    form stays testable.
    """
    x = IntPolynomial.x()
    base = (x - 1) if literal else (x + 1)
    return base ** (2 * n - 3) * (x - (n - 1)) * q_nj(n, j)


def coalesce_chain(n: int, j: int, k: int) -> tuple[Graph, Graph]:
    """k-fold coalescence chains of the G and H family graphs at their added vertex.

    Every step glues a fresh copy at the current distinguished vertex, which
    stays at index ``2n``; both graphs have ``k(2n+1) - (k-1)`` vertices.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    base_g = family_gknj(n, j)
    base_h = family_hknj(n, j)
    v = family_added_vertex(n)
    g, h = base_g, base_h
    for _ in range(k - 1):
        g = coalesce(g, v, base_g, v)
        h = coalesce(h, v, base_h, v)
    return g.with_label(f"G[K{n},{j},{k}]"), h.with_label(f"H[K{n},{j},{k}]")


# -- declarative builder ----------------------------------------------------

_KINDS = {
    "tensor_k2": ("base",),
    "double": ("base",),
    "disjoint_union": ("left", "right"),
    "strong_product": ("left", "right"),
    "cartesian_product": ("left", "right"),
    "tensor_product": ("left", "right"),
    "add_vertex": ("base", "s"),
    "family_gknj": ("n", "j"),
    "family_hknj": ("n", "j"),
    "coalesce": ("left", "lv", "right", "rv"),
    "coalesce_chain": ("n", "j", "k"),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction plus its parameters, validated before building."""

    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown construction {self.kind!r}; choose from {sorted(_KINDS)}")
        missing = [p for p in _KINDS[self.kind] if p not in self.params]
        if missing:
            raise ValueError(f"{self.kind} needs parameters {missing}")
        p = self.params
        if self.kind in ("family_gknj", "family_hknj", "coalesce_chain"):
            _family_set(p["n"], p["j"])
        if self.kind == "coalesce_chain" and p["k"] < 1:
            raise ValueError("k must be at least 1")
        if self.kind == "add_vertex":
            if not p["s"]:
                raise ValueError("the neighbour set of the added vertex must be nonempty")
            vertex_set(p["s"], p["base"].n)
        if self.kind == "coalesce":
            if not 0 <= p["lv"] < p["left"].n or not 0 <= p["rv"] < p["right"].n:
                raise ValueError("coalescence vertex out of range")

    def build(self) -> Graph | tuple[Graph, Graph]:
        p = self.params
        k = self.kind
        if k == "tensor_k2":
            return tensor_k2(p["base"])
        if k == "double":
            return double(p["base"])
        if k == "disjoint_union":
            return disjoint_union(p["left"], p["right"])
        if k == "strong_product":
            return strong_product(p["left"], p["right"])
        if k == "cartesian_product":
            return cartesian_product(p["left"], p["right"])
        if k == "tensor_product":
            return tensor_product(p["left"], p["right"])
        if k == "add_vertex":
            return add_vertex(p["base"], p["s"])
        if k == "family_gknj":
            return family_gknj(p["n"], p["j"])
        if k == "family_hknj":
            return family_hknj(p["n"], p["j"])
        if k == "coalesce":
            return coalesce(p["left"], p["lv"], p["right"], p["rv"])
        return coalesce_chain(p["n"], p["j"], p["k"])

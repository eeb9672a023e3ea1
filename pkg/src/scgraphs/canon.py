"""Canonical graph6 labels by colour refinement and individualisation.

Search tree: refine an ordered partition to an equitable one, individualise
each vertex of the first smallest non-singleton cell, recurse.  Each leaf is a
vertex ordering; the canonical form is the lexicographically largest relabelled
adjacency among the leaves.  Leaves with equal certificates yield
automorphisms, which prune sibling branches lying in the same orbit.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, write_graph6

Cells = list[list[int]]


def _refine(rows: tuple[int, ...], cells: Cells) -> Cells:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            by_sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                sig = tuple((r & mk).bit_count() for mk in masks)
                by_sig.setdefault(sig, []).append(v)
            if len(by_sig) > 1:
                split = True
                for sig in sorted(by_sig):
                    out.append(by_sig[sig])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << pos[low.bit_length() - 1]
            r ^= low
        cert.append(nr)
    return tuple(cert)


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.generators: list[list[int]] = []

    def run(self):
        if self.n == 0:
            return (), []
        degs: dict[int, list[int]] = {}
        for v in range(self.n):
            degs.setdefault(self.rows[v].bit_count(), []).append(v)
        cells = _refine(self.rows, [degs[d] for d in sorted(degs)])
        self._visit(cells, [])
        return self.best, self.best_order

    def _orbit_rep(self, prefix: list[int], cell: list[int]):
        parent = {v: v for v in range(self.n)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            if all(gen[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gen[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _visit(self, cells: Cells, prefix: list[int]):
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = _certificate(self.rows, order)
            if self.best is None or cert > self.best:
                self.best, self.best_order = cert, order
            elif cert == self.best:
                auto = [0] * self.n
                for a, b in zip(self.best_order, order):
                    auto[a] = b
                self.generators.append(auto)
            return
        t = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[t]
        done_roots: set[int] = set()
        for v in sorted(target):
            if done_roots:
                find = self._orbit_rep(prefix, target)
                if find(v) in {find(u) for u in done_roots}:
                    continue
            rest = [u for u in target if u != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            self._visit(_refine(self.rows, child), prefix + [v])
            done_roots.add(v)


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering ``order`` so that vertex ``order[i]`` becomes ``i`` in the canonical form."""
    return _Search(g).run()[1]


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff ``g`` and ``h`` are isomorphic."""
    cert, _ = _Search(g).run()
    return write_graph6(Graph(g.n, tuple(cert) if cert else ()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)

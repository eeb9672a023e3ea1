"""All graphs on n vertices up to isomorphism, and random graphs.

Generation extends every graph on ``n - 1`` vertices by one vertex with each
possible neighbourhood and keeps one representative per canonical form.
Every graph on ``n`` vertices arises this way (delete any vertex), so the
output is complete; canonical forms make it duplicate free.
"""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources

from .canon import canonical_form
from .graph import Graph, is_connected, parse_graph6, read_graph6_lines

# OEIS A000088 and A001349
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@lru_cache(maxsize=None)
def generate_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on ``n`` vertices, sorted by graph6."""
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[str, Graph] = {}
    for base in generate_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            rows = [r | (((mask >> i) & 1) << (n - 1)) for i, r in enumerate(base.rows)]
            rows.append(mask)
            g = Graph(n, tuple(rows))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = parse_graph6(key)
    return tuple(seen[k] for k in sorted(seen))


def shipped_graphs(n: int) -> list[Graph]:
    """The graph6 corpus shipped in ``scgraphs/data`` (n = 1..7)."""
    text = resources.files("scgraphs").joinpath(f"data/graphs{n}.g6").read_text()
    return [parse_graph6(s, label=s) for _, s in read_graph6_lines(text.splitlines())]


def corpus(n_max: int, *, connected: bool = False, n_min: int = 1) -> list[Graph]:
    """All graphs with ``n_min <= n <= n_max`` vertices (shipped files where available)."""
    out = []
    for n in range(n_min, n_max + 1):
        graphs = shipped_graphs(n) if 1 <= n <= 7 else list(generate_graphs(n))
        out.extend(g for g in graphs if not connected or is_connected(g))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)

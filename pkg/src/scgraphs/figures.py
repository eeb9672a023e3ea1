"""Graphs drawn in the figures, rebuilt from their definitions.

Figure labels are 1-based; everything here is 0-based.
"""

from __future__ import annotations

from importlib import resources

from .constructions import add_vertex, coalesce, double, tensor_k2
from .graph import Graph, complete, parse_graph6, read_graph6_lines

# F of figure 1: edges 12, 13, 23, 24, 34, 25, 35 in figure labels
FIG1_F_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5)]

# figure 2 neighbourhood S = {3,4,5,8,9,10}
FIG2_S = [2, 3, 4, 7, 8, 9]


def _shift(edges):
    return [(u - 1, v - 1) for u, v in edges]


def fig1_f() -> Graph:
    return Graph.from_edges(5, _shift(FIG1_F_EDGES), "fig1_F")


def fig1_pair() -> tuple[Graph, Graph]:
    f = fig1_f()
    return tensor_k2(f).with_label("fig1_GF"), double(f).with_label("fig1_HF")


def fig2_pair() -> tuple[Graph, Graph]:
    k5 = complete(5)
    g = add_vertex(tensor_k2(k5), FIG2_S).with_label("fig2_G")
    h = add_vertex(double(k5), FIG2_S).with_label("fig2_H")
    return g, h


def fig3_pair() -> tuple[Graph, Graph]:
    """H1 = 2K4 (disconnected), H2 = K4 x K2."""
    k4 = complete(4)
    return double(k4).with_label("fig3_H1"), tensor_k2(k4).with_label("fig3_H2")


def fig4_pair() -> tuple[Graph, Graph]:
    """H1: two K5 on {1..5} and {4..8}; H2: C6 on 1..6 joined to the edge 78."""
    h1_edges = [(u, v) for block in (range(1, 6), range(4, 9)) for u in block for v in block if u < v]
    h1 = Graph.from_edges(8, _shift(set(h1_edges)), "fig4_H1")
    h2_edges = [(i, i % 6 + 1) for i in range(1, 7)] + [(7, 8)]
    h2_edges += [(i, 7) for i in range(1, 7)] + [(i, 8) for i in range(1, 7)]
    h2 = Graph.from_edges(8, _shift(h2_edges), "fig4_H2")
    return h1, h2


def fig5_parts() -> tuple[Graph, int, Graph, int]:
    """Triangle G on (g, x, y) and 4-cycle H on (h, u, z, w); g and h are vertex 0."""
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], "fig5_G")
    h = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], "fig5_H")
    return g, 0, h, 0


def fig5_coalescence() -> Graph:
    g, gv, h, hv = fig5_parts()
    return coalesce(g, gv, h, hv).with_label("fig5_GH")


def all_figures() -> dict[str, Graph]:
    out = {"fig1_F": fig1_f()}
    for pair in (fig1_pair(), fig2_pair(), fig3_pair(), fig4_pair()):
        for g in pair:
            out[g.label] = g
    g, _, h, _ = fig5_parts()
    out["fig5_G"] = g
    out["fig5_H"] = h
    out["fig5_GH"] = fig5_coalescence()
    return out


def golden_figures() -> dict[str, Graph]:
    """The shipped ``figures.txt`` golden file; each line is ``<graph6> <name>``."""
    text = resources.files("scgraphs").joinpath("data/figures.txt").read_text()
    out = {}
    for _, line in read_graph6_lines(text.splitlines()):
        code, name = line.split()
        out[name] = parse_graph6(code, label=name)
    return out

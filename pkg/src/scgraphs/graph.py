"""Immutable simple graphs, graph6 I/O and structural predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the offending byte index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as one integer bitmask per vertex: bit ``j`` of
    ``rows[i]`` is set iff ``i`` and ``j`` are adjacent.  Equality and hashing
    ignore ``label``.
    """

    n: int
    rows: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise ValueError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if (r >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            rest = r
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                rest ^= low

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @classmethod
    def from_adjacency(cls, matrix, label: str | None = None) -> Graph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency matrix must be 0/1")
        n = a.shape[0]
        rows = tuple(sum(1 << j for j in range(n) if a[i, j]) for i in range(n))
        return cls(n, rows, label)

    def with_label(self, label: str | None) -> Graph:
        return Graph(self.n, self.rows, label)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        tag = f", label={self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.m}{tag}, g6={write_graph6(self)!r})"

    # -- structure ----------------------------------------------------------

    @cached_property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        r = self.rows[v]
        return [j for j in range(self.n) if (r >> j) & 1]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    yield (i, j)
                r >>= 1
                j += 1

    @cached_property
    def _adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        a.setflags(write=False)
        return a

    def adjacency(self) -> np.ndarray:
        """Read-only int64 adjacency matrix."""
        return self._adjacency


# -- graph6 -----------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_size(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((rows[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, label: str | None = None) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and surrounding whitespace are tolerated.
    """
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", offset)
    data = []
    for k, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside 63..126", offset + k)
        data.append(b - 63)

    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size prefix", offset + len(data))
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
        if n < 258048:
            raise Graph6Error(f"size {n} must use a shorter prefix", offset)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size prefix", offset + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
        if n < 63:
            raise Graph6Error(f"size {n} must use the 1-byte prefix", offset)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for n={n}, found {len(body)}",
            offset + pos + min(len(body), need),
        )
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset + pos + need - 1)

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for d in body:
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if (d >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows), label)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for non-blank, non-header lines (1-based)."""
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):]
        if s:
            yield lineno, s


def load_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(s) for _, s in read_graph6_lines(fh)]


# -- predicates -------------------------------------------------------------


def degree_sequence(g: Graph) -> list[int]:
    return sorted(r.bit_count() for r in g.rows)


def is_regular(g: Graph) -> int | None:
    """Common degree if every vertex has it, else ``None``."""
    degs = {r.bit_count() for r in g.rows}
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """BFS 2-colouring ``(side0, side1)``, or ``None`` when an odd cycle exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = [v for v in range(g.n) if color[v] == 0]
    side1 = [v for v in range(g.n) if color[v] == 1]
    return side0, side1


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append([u for u in range(g.n) if (comp >> u) & 1])
    return comps


def is_connected(g: Graph) -> bool:
    """``True`` for connected graphs; the null graph counts as disconnected."""
    return len(components(g)) == 1


# -- named graphs -----------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)), f"K{n}")


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n, f"E{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)], f"K{r},{s}")


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()), g.label)

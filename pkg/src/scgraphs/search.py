"""Bucketed scan of graph6 streams for singularly cospectral pairs.

Each graph gets exact fingerprints.  Graphs sharing ``(m, rank, sc_key)``
are exactly the singularly cospectral classes; inside a bucket the full
characteristic polynomial separates cospectral mates from NCSC pairs.
"""

from __future__ import annotations

import json
import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field
from typing import Iterable

from .canon import canonical_form
from .classify import ac_signature, sc_signature
from .graph import Graph, Graph6Error, parse_graph6, read_graph6_lines
from .poly import Inertia, char_poly, inertia

WORKERS_ENV = "SCGRAPHS_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Fingerprint:
    edges: int
    rank: int
    sc_key: bytes
    cp_key: bytes
    ac_key: bytes
    inertia: Inertia

    @property
    def bucket(self) -> tuple[int, int, bytes]:
        # m and rank are invariant across SC mates; inertia is not, so it
        # cannot salt the bucket key.
        return (self.edges, self.rank, self.sc_key)


def fingerprint(g: Graph) -> Fingerprint:
    i = inertia(g)
    return Fingerprint(
        edges=g.m,
        rank=i.positive + i.negative,
        sc_key=sc_signature(g).key(),
        cp_key=char_poly(g).key(),
        ac_key=ac_signature(g).key(),
        inertia=i,
    )


@dataclass
class Bucket:
    sc_key: bytes
    members: list[str] = field(default_factory=list)
    fingerprints: list[Fingerprint] = field(default_factory=list)
    ncsc_pairs: list[tuple[int, int]] = field(default_factory=list)
    cospectral_pairs: list[tuple[int, int]] = field(default_factory=list)
    ac_only_pairs: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "sc_key": self.sc_key.decode(),
            "members": list(self.members),
            "ncsc_pairs": [list(p) for p in self.ncsc_pairs],
            "cospectral_pairs": [list(p) for p in self.cospectral_pairs],
            "ac_only_pairs": [list(p) for p in self.ac_only_pairs],
        }


@dataclass
class SearchResult:
    buckets: list[Bucket]
    stats: dict
    errors: list[tuple[int, str]]

    def ncsc_pairs(self) -> set[frozenset[str]]:
        """NCSC pairs as unordered pairs of canonical graph6 strings."""
        return {
            frozenset((b.members[i], b.members[j])) for b in self.buckets for i, j in b.ncsc_pairs
        }

    def as_dict(self, include_timing: bool = False) -> dict:
        stats = dict(self.stats)
        if not include_timing:
            stats.pop("wall_time", None)
        return {
            "buckets": [b.as_dict() for b in self.buckets],
            "stats": stats,
            "errors": [{"line": ln, "message": msg} for ln, msg in self.errors],
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.as_dict(include_timing), indent=1, sort_keys=True)


def _work(item: tuple[int, str]):
    lineno, text = item
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return lineno, None, None, str(exc)
    return lineno, canonical_form(g), fingerprint(g), None


def _fingerprints(items: list[tuple[int, str]], workers: int):
    if workers <= 1 or len(items) < 2:
        return [_work(it) for it in items]
    chunk = max(1, len(items) // (workers * 4))
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    with ctx.Pool(workers) as pool:
        return pool.map(_work, items, chunksize=chunk)


def scan(
    lines: Iterable[str],
    workers: int | None = None,
    chunk_lines: int = 4096,
    keep_singletons: bool = False,
) -> SearchResult:
    """Group a graph6 stream into singularly cospectral classes.

    Isomorphic duplicates are dropped (first occurrence wins).  Lines that fail
    to parse are recorded in ``errors`` with their 1-based line number and the
    scan continues.  The result does not depend on ``workers``.
    """
    if workers is None:
        workers = default_workers()
    t0 = time.perf_counter()
    index: dict[tuple, Bucket] = {}
    seen: set[str] = set()
    errors: list[tuple[int, str]] = []
    scanned = duplicates = 0

    def consume(batch):
        nonlocal scanned, duplicates
        for lineno, canon, fp, err in _fingerprints(batch, workers):
            scanned += 1
            if err is not None:
                errors.append((lineno, err))
                continue
            if canon in seen:
                duplicates += 1
                continue
            seen.add(canon)
            b = index.get(fp.bucket)
            if b is None:
                b = index[fp.bucket] = Bucket(fp.sc_key)
            b.members.append(canon)
            b.fingerprints.append(fp)

    batch: list[tuple[int, str]] = []
    for item in read_graph6_lines(lines):
        batch.append(item)
        if len(batch) >= chunk_lines:
            consume(batch)
            batch = []
    if batch:
        consume(batch)

    buckets = []
    n_pairs = {"ncsc": 0, "cospectral": 0, "ac_only": 0}
    for b in index.values():
        fps = b.fingerprints
        for i in range(len(fps)):
            for j in range(i + 1, len(fps)):
                if fps[i].cp_key == fps[j].cp_key:
                    b.cospectral_pairs.append((i, j))
                else:
                    b.ncsc_pairs.append((i, j))
                    if fps[i].ac_key == fps[j].ac_key:
                        b.ac_only_pairs.append((i, j))
        n_pairs["ncsc"] += len(b.ncsc_pairs)
        n_pairs["cospectral"] += len(b.cospectral_pairs)
        n_pairs["ac_only"] += len(b.ac_only_pairs)
        if keep_singletons or len(b.members) > 1:
            buckets.append(b)

    stats = {
        "graphs_scanned": scanned,
        "unique_graphs": len(seen),
        "duplicates": duplicates,
        "parse_errors": len(errors),
        "buckets": len(index),
        "multi_buckets": sum(1 for b in index.values() if len(b.members) > 1),
        "ncsc_pairs": n_pairs["ncsc"],
        "cospectral_pairs": n_pairs["cospectral"],
        "ac_only_pairs": n_pairs["ac_only"],
        "wall_time": time.perf_counter() - t0,
    }
    return SearchResult(buckets, stats, errors)

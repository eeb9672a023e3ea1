"""Named verification sweeps, one per proven statement.

Each suite returns a :class:`SuiteReport`.  A failed check means an exact
identity or implication did not hold, which can only be an implementation
bug; the CLI maps that to exit status 2.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .classify import (
    TheoremViolation,
    check_regular_pair,
    check_sc_implies_ac,
    classify_pair,
    is_almost_cospectral,
    is_cospectral,
    is_singularly_cospectral,
    sc_signature,
)
from .constructions import (
    add_vertex,
    coalesce,
    coalesce_chain,
    delete_vertex,
    double,
    family_gknj,
    family_hknj,
    gknj_charpoly_formula,
    hknj_charpoly_formula,
    q_nj,
    rowlinson_charpoly,
    tensor_k2,
)
from .enumerate import corpus, random_graph
from .graph import Graph, is_bipartite
from .poly import IntPolynomial, char_poly, inertia, polynomial_inertia
from .walks import cycle_pair, walk_equivalent, walk_profile


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    worst_residual: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.checked

    def record(self, ok: bool, message: str = ""):
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(message)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
            "worst_residual": self.worst_residual,
            "details": dict(self.details),
        }

    def summary(self) -> str:
        line = f"{self.name}: {self.passed}/{self.checked} passed"
        if self.worst_residual is not None:
            line += f", worst residual {self.worst_residual:.3e}"
        return line + ("" if self.ok else " FAILED")


def parallel_map(func: Callable, items: list, workers: int = 1) -> list:
    """Order-preserving map; ``workers > 1`` uses a process pool."""
    if workers <= 1 or len(items) < 2:
        return [func(x) for x in items]
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    with ctx.Pool(workers) as pool:
        return pool.map(func, items, chunksize=max(1, len(items) // (4 * workers)))


# -- individual suites ------------------------------------------------------


def suite_gfhf(n_max: int = 7) -> SuiteReport:
    """F x K2 versus 2F over every connected graph on at most ``n_max`` vertices.

    Nonbipartite F must give an NCSC pair; bipartite F a cospectral pair.  The
    spectral identities P_{FxK2}(x) = (-1)^n P_F(x) P_F(-x) and
    P_{2F} = P_F**2 are checked exactly for every F.
    """
    rep = SuiteReport("gfhf")
    nonbip = bip = 0
    for f in corpus(n_max, connected=True, n_min=2):
        g, h = tensor_k2(f), double(f)
        p = char_poly(f)
        sign = -1 if f.n % 2 else 1
        rep.record(char_poly(g) == sign * (p * p.reflect()), f"double-cover identity fails for {f!r}")
        rep.record(char_poly(h) == p * p, f"2F identity fails for {f!r}")
        if is_bipartite(f) is None:
            nonbip += 1
            rep.record(
                is_singularly_cospectral(g, h) and not is_cospectral(g, h),
                f"(FxK2, 2F) not NCSC for nonbipartite {f!r}",
            )
        else:
            bip += 1
            rep.record(is_cospectral(g, h), f"(FxK2, 2F) not cospectral for bipartite {f!r}")
    rep.details = {"nonbipartite": nonbip, "bipartite": bip}
    return rep


def lambda2_sign(n: int, j: int) -> int:
    """Sign of the middle root of Q_{n,j}, exactly (Descartes on a real-rooted cubic)."""
    pos, zero, _ = polynomial_inertia(q_nj(n, j))
    if zero:
        return 0
    return 1 if pos == 2 else -1


def expected_lambda2_sign(n: int, j: int) -> int:
    if j <= n - 2:
        return 1
    return 0 if j == n - 1 else -1


def suite_gknj(n_min: int = 3, n_max: int = 8) -> SuiteReport:
    rep = SuiteReport("gknj")
    for n in range(n_min, n_max + 1):
        for j in range(1, n + 1):
            g, h = family_gknj(n, j), family_hknj(n, j)
            tag = f"(n={n}, j={j})"
            rep.record(char_poly(g) == gknj_charpoly_formula(n, j), f"G identity fails {tag}")
            rep.record(char_poly(h) == hknj_charpoly_formula(n, j), f"H identity fails {tag}")
            rep.record(lambda2_sign(n, j) == expected_lambda2_sign(n, j), f"lambda2 sign wrong {tag}")
            if j == n - 1:
                q = q_nj(n, j)
                rep.record(q.coeffs[0] == 0, f"x does not divide Q {tag}")
            rep.record(
                is_singularly_cospectral(g, h) and not is_cospectral(g, h), f"not NCSC {tag}"
            )
            # the variant with (x-1)^{2n-3} is never the characteristic polynomial
            if char_poly(h) == hknj_charpoly_formula(n, j, literal=True):
                rep.details.setdefault("literal_h_form_matches", []).append([n, j])
    return rep


def suite_rowlinson(trials: int = 100, seed: int = 0, n_max: int = 10) -> SuiteReport:
    rep = SuiteReport("rowlinson")
    rng = random.Random(seed)
    worst = 0.0
    for t in range(trials):
        n = rng.randint(1, n_max)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        size = rng.randint(1, n)
        s = sorted(rng.sample(range(n), size))
        approx = rowlinson_charpoly(g, s).coeffs
        exact = np.array(char_poly(add_vertex(g, s)).coeffs, dtype=float)
        dev = float(np.max(np.abs(approx - exact)))
        worst = max(worst, dev)
        rep.record(dev < 1e-5, f"trial {t}: deviation {dev:.3e} for n={n}, S={s}")
    rep.worst_residual = worst
    return rep


def schwenk_rhs(g: Graph, gv: int, h: Graph, hv: int) -> IntPolynomial:
    pg, ph = char_poly(g), char_poly(h)
    pg_, ph_ = char_poly(delete_vertex(g, gv)), char_poly(delete_vertex(h, hv))
    return pg * ph_ + pg_ * ph - IntPolynomial.x() * pg_ * ph_


def suite_schwenk(trials: int = 200, seed: int = 0, n_max: int = 8) -> SuiteReport:
    rep = SuiteReport("schwenk")
    rng = random.Random(seed)
    for t in range(trials):
        n1, n2 = rng.randint(1, n_max), rng.randint(1, n_max)
        g = random_graph(n1, rng.uniform(0.2, 0.8), rng)
        h = random_graph(n2, rng.uniform(0.2, 0.8), rng)
        gv, hv = rng.randrange(n1), rng.randrange(n2)
        lhs = char_poly(coalesce(g, gv, h, hv))
        rep.record(lhs == schwenk_rhs(g, gv, h, hv), f"trial {t}: identity fails")
    rep.worst_residual = 0.0 if rep.ok else None
    return rep


def _walk_data(g: Graph):
    return sc_signature(g), walk_profile(g, g.n)


def suite_walks(n_max: int = 6, n_min: int = 1, workers: int = 1) -> SuiteReport:
    """Walk-count equivalence versus the exact SC test over all pairs of the corpus."""
    rep = SuiteReport("walks")
    graphs = corpus(n_max, n_min=n_min)
    data = parallel_map(_walk_data, graphs, workers)
    for (a, (sa, wa)), (b, (sb, wb)) in itertools.combinations(zip(graphs, data), 2):
        k = max(a.n, b.n)
        # profiles were computed to horizon n; compare the common prefix up to k
        walk_eq = _profile_prefix(a, wa, k) == _profile_prefix(b, wb, k)
        rep.record(walk_eq == (sa == sb), f"walks disagree with SC test for {a!r}, {b!r}")
    rep.details = {"graphs": len(graphs)}
    return rep


def _profile_prefix(g: Graph, profile, k: int) -> tuple[int, ...]:
    if profile.horizon >= k:
        return profile.counts[:k]
    return walk_profile(g, k).counts


def sc_pairs(graphs: list[Graph]) -> list[tuple[Graph, Graph]]:
    """All singularly cospectral pairs, found by exact signature bucketing."""
    buckets: dict[bytes, list[Graph]] = defaultdict(list)
    for g in graphs:
        buckets[sc_signature(g).key()].append(g)
    return [p for members in buckets.values() for p in itertools.combinations(members, 2)]


def suite_sc_implies_ac(n_max: int = 6) -> SuiteReport:
    rep = SuiteReport("sc-implies-ac")
    counts: dict[str, int] = defaultdict(int)
    pairs = sc_pairs(corpus(n_max))
    for g, h in pairs:
        try:
            verdict = check_sc_implies_ac(g, h)
        except TheoremViolation as exc:
            rep.record(False, str(exc))
            continue
        for name in verdict.applicable:
            counts[name] += 1
        rep.record(True)
    rep.details = {"sc_pairs": len(pairs), "applicable": dict(counts)}
    return rep


def suite_prop_nec(n_max: int = 6) -> SuiteReport:
    rep = SuiteReport("prop-nec")
    pairs = sc_pairs(corpus(n_max))
    for g, h in pairs:
        r = classify_pair(g, h)
        ig, ih = inertia(g), inertia(h)
        ok = (
            r.singularly_cospectral
            and g.m == h.m
            and ig.positive + ig.negative == ih.positive + ih.negative
            and abs(ig.zero - ih.zero) == abs(g.n - h.n)
            and ig.positive - ih.positive == ih.negative - ig.negative
            and r.equienergetic
            and r.equienergetic_exact
        )
        rep.record(ok, f"necessary conditions fail for {g!r}, {h!r}")
    rep.details = {"sc_pairs": len(pairs)}
    return rep


def suite_regularity(n_max: int = 7) -> SuiteReport:
    """No regular graph is SC with a non-regular graph on the same vertex count."""
    rep = SuiteReport("regularity")
    applicable = 0
    for g, h in sc_pairs(corpus(n_max)):
        if g.n != h.n:
            continue
        try:
            v = check_regular_pair(g, h)
        except TheoremViolation as exc:
            rep.record(False, str(exc))
            continue
        applicable += v.applicable
        rep.record(True)
    rep.details = {"applicable_sc_pairs": applicable}
    return rep


def suite_cycles(j_max: int = 10) -> SuiteReport:
    """(C_2j, 2C_j): NCSC for odd j; for even j, C_j is bipartite and the pair is not SC.

    The walk-count test must agree with the exact verdict for every j.
    """
    rep = SuiteReport("cycles")
    verdicts = {}
    for j in range(3, j_max + 1):
        g, h = cycle_pair(j)
        sc = is_singularly_cospectral(g, h)
        cosp = is_cospectral(g, h)
        verdicts[j] = "ncsc" if sc and not cosp else ("cospectral" if cosp else "not_sc")
        expected = "ncsc" if j % 2 else "not_sc"
        rep.record(verdicts[j] == expected, f"(C{2 * j}, 2C{j}) is {verdicts[j]}, expected {expected}")
        rep.record(walk_equivalent(g, h) == sc, f"walk test disagrees for j={j}")
    rep.details = {"verdicts": verdicts}
    return rep


def suite_chain(n_max: int = 5, k_max: int = 3) -> SuiteReport:
    rep = SuiteReport("chain")
    for n in range(3, n_max + 1):
        for j in range(1, n + 1):
            for k in range(1, k_max + 1):
                g, h = coalesce_chain(n, j, k)
                rep.record(
                    is_singularly_cospectral(g, h) and not is_almost_cospectral(g, h),
                    f"chain (n={n}, j={j}, k={k}) not SC-and-not-AC",
                )
    return rep


SUITES = {
    "gfhf": suite_gfhf,
    "gknj": suite_gknj,
    "rowlinson": suite_rowlinson,
    "schwenk": suite_schwenk,
    "walks": suite_walks,
    "sc-implies-ac": suite_sc_implies_ac,
    "prop-nec": suite_prop_nec,
    "regularity": suite_regularity,
    "cycles": suite_cycles,
    "chain": suite_chain,
}

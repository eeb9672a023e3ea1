"""Exact decision procedures for spectral pair relations.

Every verdict except generic equienergeticity is an integer polynomial
identity.  Floating-point results only appear where the exact question is
out of reach (energy of a non-singularly-cospectral pair) and are flagged so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .graph import Graph, is_bipartite, is_connected, is_regular
from .poly import (
    IntPolynomial,
    Inertia,
    char_poly,
    distinct_root_count,
    inertia,
    squared_char_poly,
    squarefree_decomposition,
    strip_zero_roots,
)
from .spectrum import energy


class TheoremViolation(AssertionError):
    """An exact check contradicted a proven implication; signals a bug."""


@lru_cache(maxsize=65536)
def sc_signature(g: Graph) -> IntPolynomial:
    """Zero-stripped characteristic polynomial of A**2; its roots are the squared nonzero singular values."""
    return strip_zero_roots(squared_char_poly(g))[0]


@lru_cache(maxsize=65536)
def ac_signature(g: Graph) -> IntPolynomial:
    """Zero-stripped characteristic polynomial; its roots are the nonzero eigenvalues."""
    return strip_zero_roots(char_poly(g))[0]


def is_cospectral(g: Graph, h: Graph) -> bool:
    return char_poly(g) == char_poly(h)


def is_singularly_cospectral(g: Graph, h: Graph) -> bool:
    return sc_signature(g) == sc_signature(h)


def is_almost_cospectral(g: Graph, h: Graph) -> bool:
    return ac_signature(g) == ac_signature(h)


def is_equienergetic(g: Graph, h: Graph, tol: float = 1e-9) -> tuple[bool, bool]:
    """``(verdict, exact)``; exact whenever the pair is singularly cospectral."""
    if is_singularly_cospectral(g, h):
        return True, True
    eg, eh = energy(g), energy(h)
    return abs(eg - eh) < tol * max(1.0, eg), False


def necessary_filters(g: Graph, h: Graph) -> dict[str, bool]:
    """Cheap exact consequences of singular cospectrality."""
    ig, ih = inertia(g), inertia(h)
    rank_g = ig.positive + ig.negative
    rank_h = ih.positive + ih.negative
    return {
        "edges": g.m == h.m,
        "rank": rank_g == rank_h,
        "nullity_gap": abs(ig.zero - ih.zero) == abs(g.n - h.n),
        "inertia": ig.positive - ih.positive == ih.negative - ig.negative,
    }


@dataclass(frozen=True)
class PairReport:
    cospectral: bool
    singularly_cospectral: bool
    almost_cospectral: bool
    equienergetic: bool
    equienergetic_exact: bool
    ncsc: bool
    filters: dict[str, bool]
    inertia_left: Inertia
    inertia_right: Inertia
    certificates: dict[str, IntPolynomial] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "cospectral": self.cospectral,
            "singularly_cospectral": self.singularly_cospectral,
            "almost_cospectral": self.almost_cospectral,
            "equienergetic": self.equienergetic,
            "equienergetic_exact": self.equienergetic_exact,
            "ncsc": self.ncsc,
            "filters": dict(self.filters),
            "inertia": {
                "left": list(self.inertia_left),
                "right": list(self.inertia_right),
            },
            "certificates": {k: v.to_json() for k, v in self.certificates.items()},
        }


def classify_pair(g: Graph, h: Graph, tol: float = 1e-9) -> PairReport:
    """Full relation report.  Cheap filters run first; polynomials are compared only when they pass."""
    filters = necessary_filters(g, h)
    certs = {
        "char_poly_left": char_poly(g),
        "char_poly_right": char_poly(h),
    }
    if all(filters.values()):
        certs["sc_signature_left"] = sc_signature(g)
        certs["sc_signature_right"] = sc_signature(h)
        sc = certs["sc_signature_left"] == certs["sc_signature_right"]
    else:
        sc = False
    cosp = sc and certs["char_poly_left"] == certs["char_poly_right"]
    ac = sc and is_almost_cospectral(g, h)
    if sc:
        ee, exact = True, True
    else:
        ee, exact = is_equienergetic(g, h, tol)
    return PairReport(
        cospectral=cosp,
        singularly_cospectral=sc,
        almost_cospectral=ac,
        equienergetic=ee,
        equienergetic_exact=exact,
        ncsc=sc and not cosp,
        filters=filters,
        inertia_left=inertia(g),
        inertia_right=inertia(h),
        certificates=certs,
    )


# -- theorem checks ---------------------------------------------------------


@dataclass(frozen=True)
class RegularityVerdict:
    applicable: bool
    singularly_cospectral: bool
    consistent: bool


def check_regular_pair(g: Graph, h: Graph) -> RegularityVerdict:
    """A regular graph and a non-regular graph on the same vertex count are never SC."""
    if g.n != h.n:
        raise ValueError("regularity check needs equal vertex counts")
    rg, rh = is_regular(g), is_regular(h)
    applicable = (rg is None) != (rh is None)
    sc = is_singularly_cospectral(g, h)
    if applicable and sc:
        raise TheoremViolation(
            f"regular/non-regular pair is singularly cospectral: {g!r} vs {h!r}"
        )
    return RegularityVerdict(applicable, sc, True)


def largest_singular_multiplicity(g: Graph) -> int:
    """Multiplicity of the largest singular value (0 for edgeless graphs).

    Exact up to locating which squarefree factor owns the largest root; the
    factors are pairwise coprime so their largest roots are distinct.
    """
    sig = sc_signature(g)
    if sig.degree < 1:
        return 0
    best, best_mult = -np.inf, 0
    for mult, f in enumerate(squarefree_decomposition(sig), start=1):
        if f.degree < 1:
            continue
        top = float(np.max(np.roots(f.coeffs[::-1]).real))
        if top > best:
            best, best_mult = top, mult
    return best_mult


def distinct_singular_values(g: Graph) -> int:
    """Number of distinct nonzero singular values, exactly."""
    return distinct_root_count(sc_signature(g))


@dataclass(frozen=True)
class ImplicationVerdict:
    singularly_cospectral: bool
    almost_cospectral: bool
    applicable: tuple[str, ...]


def check_sc_implies_ac(g: Graph, h: Graph) -> ImplicationVerdict:
    """Check the hypothesis sets under which singular cospectrality forces almost cospectrality.

    * ``bipartite``: both graphs bipartite;
    * ``top_multiplicity``: both connected, largest singular value of multiplicity >= 2;
    * ``three_values_signed``: both connected, exactly three distinct nonzero
      singular values, equal positive or equal negative inertia;
    * ``three_values_inertia``: as above with equal full inertia.

    Applicable hypotheses are returned; if one applies and the pair is SC but
    not almost cospectral, :class:`TheoremViolation` is raised.
    """
    sc = is_singularly_cospectral(g, h)
    ac = is_almost_cospectral(g, h)
    if not sc:
        return ImplicationVerdict(False, ac, ())
    applicable = []
    if is_bipartite(g) is not None and is_bipartite(h) is not None:
        applicable.append("bipartite")
    if is_connected(g) and is_connected(h):
        if largest_singular_multiplicity(g) >= 2:
            applicable.append("top_multiplicity")
        if distinct_singular_values(g) == 3:
            ig, ih = inertia(g), inertia(h)
            if ig.positive == ih.positive or ig.negative == ih.negative:
                applicable.append("three_values_signed")
            if ig == ih:
                applicable.append("three_values_inertia")
    if applicable and not ac:
        raise TheoremViolation(
            f"SC pair satisfying {applicable} is not almost cospectral: {g!r} vs {h!r}"
        )
    return ImplicationVerdict(sc, ac, tuple(applicable))

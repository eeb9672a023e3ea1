import numpy as np
import pytest
from hypothesis import given

from scgraphs.classify import (
    TheoremViolation,
    check_regular_pair,
    check_sc_implies_ac,
    classify_pair,
    distinct_singular_values,
    is_almost_cospectral,
    is_cospectral,
    is_equienergetic,
    is_singularly_cospectral,
    largest_singular_multiplicity,
    necessary_filters,
)
from scgraphs.constructions import disjoint_union, double, tensor_k2
from scgraphs.figures import fig3_pair, fig4_pair
from scgraphs.graph import complete, complete_bipartite, cycle, empty, path, relabel
from scgraphs.poly import inertia
from scgraphs.spectrum import energy, nonzero_singular_values

from conftest import graphs


def test_fig3_pair():
    h1, h2 = fig3_pair()
    r = classify_pair(h1, h2)
    assert r.singularly_cospectral and not r.almost_cospectral and r.ncsc
    assert r.equienergetic and r.equienergetic_exact


def test_fig4_pair():
    h1, h2 = fig4_pair()
    r = classify_pair(h1, h2)
    assert r.singularly_cospectral and not r.cospectral
    assert tuple(r.inertia_left) == (2, 0, 6)
    assert tuple(r.inertia_right) == (3, 0, 5)
    assert all(r.filters.values())


@given(graphs(min_n=1, max_n=7))
def test_isolated_vertex_keeps_sc(g):
    h = disjoint_union(g, empty(1))
    assert is_singularly_cospectral(g, h)
    assert is_almost_cospectral(g, h)
    assert not is_cospectral(g, h)


@given(graphs(min_n=1, max_n=7))
def test_relabel_is_cospectral(g):
    h = relabel(g, list(reversed(range(g.n))))
    r = classify_pair(g, h)
    assert r.cospectral and r.singularly_cospectral and r.almost_cospectral and not r.ncsc


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_sc_matches_numeric_singular_values(g, h):
    sg, sh = nonzero_singular_values(g), nonzero_singular_values(h)
    numeric = len(sg) == len(sh) and np.allclose(sg, sh, atol=1e-8)
    assert is_singularly_cospectral(g, h) == numeric


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_necessary_conditions(g, h):
    if not is_singularly_cospectral(g, h):
        return
    ig, ih = inertia(g), inertia(h)
    assert g.m == h.m
    assert ig.positive + ig.negative == ih.positive + ih.negative
    assert abs(ig.zero - ih.zero) == abs(g.n - h.n)
    assert ig.positive - ih.positive == ih.negative - ig.negative
    assert abs(energy(g) - energy(h)) < 1e-9
    assert all(necessary_filters(g, h).values())


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_relation_hierarchy(g, h):
    r = classify_pair(g, h)
    if r.cospectral:
        assert r.almost_cospectral
    if r.almost_cospectral:
        assert r.singularly_cospectral
    if r.singularly_cospectral:
        assert r.equienergetic
    assert r.ncsc == (r.singularly_cospectral and not r.cospectral)


def test_equienergetic_numeric_path():
    # K4 box K4 versus K4 x K4: equal energy, not SC
    from scgraphs.constructions import cartesian_product, tensor_product

    k4 = complete(4)
    ok, exact = is_equienergetic(cartesian_product(k4, k4), tensor_product(k4, k4))
    assert ok and not exact
    assert is_equienergetic(cycle(5), path(5)) == (False, False)


def test_bipartite_sc_pairs_are_ac():
    # bipartite graphs have symmetric spectra, so SC forces AC
    g = complete_bipartite(2, 2)
    h = disjoint_union(g, empty(2))
    v = check_sc_implies_ac(g, h)
    assert "bipartite" in v.applicable and v.almost_cospectral


def test_top_multiplicity():
    assert largest_singular_multiplicity(complete_bipartite(3, 3)) == 2
    assert largest_singular_multiplicity(complete(4)) == 1
    assert largest_singular_multiplicity(empty(3)) == 0
    assert distinct_singular_values(cycle(6)) == 2


def test_regular_pair():
    v = check_regular_pair(cycle(6), path(6))
    assert v.applicable and not v.singularly_cospectral
    with pytest.raises(ValueError):
        check_regular_pair(cycle(5), cycle(6))


def test_theorem_violation_is_assertion():
    assert issubclass(TheoremViolation, AssertionError)


def test_double_cover_of_triangle():
    g, h = tensor_k2(complete(3)), double(complete(3))
    r = classify_pair(g, h)
    assert r.ncsc
    d = r.as_dict()
    assert set(d["certificates"]) >= {"char_poly_left", "char_poly_right"}

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scgraphs.classify import is_cospectral, is_singularly_cospectral
from scgraphs.enumerate import corpus
from scgraphs.graph import complete, cycle
from scgraphs.walks import WalkProfile, cycle_pair, walk_equivalent, walk_profile

from conftest import graphs


def brute_closed_walks(g, length):
    a = g.adjacency().astype(object)
    return int(np.trace(np.linalg.matrix_power(a, length)))


@given(graphs(min_n=1, max_n=7), st.integers(1, 6))
def test_profile_matches_matrix_power(g, k):
    prof = walk_profile(g, k)
    assert prof.horizon == k
    for i in range(1, k + 1):
        assert prof.closed_walks(i) == brute_closed_walks(g, 2 * i)


def test_profile_index_errors():
    p = walk_profile(cycle(4), 2)
    with pytest.raises(IndexError):
        p.closed_walks(3)
    with pytest.raises(ValueError):
        walk_profile(cycle(4), 0)


def test_complete_graph_walks():
    # closed walks of length L in K_n: (n-1)^L + (n-1)(-1)^L
    p = walk_profile(complete(5), 4)
    assert p.counts == tuple(4 ** (2 * k) + 4 for k in range(1, 5))


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_walks_agree_with_exact_sc(g, h):
    assert walk_equivalent(g, h) == is_singularly_cospectral(g, h)


def test_small_corpus_all_pairs():
    gs = corpus(5)
    for a, b in itertools.combinations(gs, 2):
        assert walk_equivalent(a, b) == is_singularly_cospectral(a, b)


@pytest.mark.parametrize("j", [3, 5, 7, 9])
def test_odd_cycle_pairs_ncsc(j):
    g, h = cycle_pair(j)
    assert is_singularly_cospectral(g, h) and not is_cospectral(g, h)
    assert walk_equivalent(g, h)


@pytest.mark.parametrize("j", [4, 6, 8, 10])
def test_even_cycle_pairs_not_sc(j):
    g, h = cycle_pair(j)
    assert not is_singularly_cospectral(g, h)
    assert not walk_equivalent(g, h)


def test_c8_vs_two_c4_four_walks():
    g, h = cycle_pair(4)
    assert walk_profile(g, 2).closed_walks(2) == 48
    assert walk_profile(h, 2).closed_walks(2) == 64


def test_cycle_pair_domain():
    with pytest.raises(ValueError):
        cycle_pair(2)


def test_profile_dataclass():
    assert WalkProfile((2, 4)).horizon == 2

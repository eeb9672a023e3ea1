import math

import numpy as np
import pytest
from hypothesis import given

from scgraphs.graph import complete, complete_bipartite, cycle, empty
from scgraphs.poly import char_poly, inertia
from scgraphs.spectrum import (
    cluster,
    eigenvalues,
    energy,
    nonzero_singular_values,
    schatten,
    singular_values,
    spectral_radius,
)

from conftest import graphs


def test_cycle_matches_circulant_formula():
    n = 6
    expected = sorted((2 * math.cos(2 * math.pi * k / n) for k in range(n)), reverse=True)
    spec = eigenvalues(cycle(n))
    np.testing.assert_allclose(spec.eigenvalues, expected, atol=1e-12)
    assert [m for _, m in spec.groups] == [1, 2, 2, 1]


def test_complete_groups():
    spec = eigenvalues(complete(7))
    assert len(spec.groups) == 2
    (top, m1), (low, m2) = spec.groups
    assert abs(top - 6) < 1e-12 and m1 == 1
    assert abs(low + 1) < 1e-12 and m2 == 6


def test_energy_known():
    assert abs(energy(complete(5)) - 8) < 1e-12
    assert abs(energy(complete_bipartite(2, 8)) - 8) < 1e-12
    assert energy(empty(4)) == 0.0
    assert nonzero_singular_values(empty(4)) == []


@given(graphs(min_n=1, max_n=9))
def test_eigenvalues_are_roots(g):
    spec = eigenvalues(g)
    p = char_poly(g)
    scale = max(1.0, spec.radius) ** g.n
    for lam in spec.eigenvalues:
        assert abs(float(p(lam))) <= 1e-6 * scale
    assert abs(sum(spec.eigenvalues)) < 1e-9
    assert abs(sum(v * v for v in spec.eigenvalues) - 2 * g.m) < 1e-8


@given(graphs(min_n=1, max_n=9))
def test_groups_consistent_with_inertia(g):
    spec = eigenvalues(g)
    assert sum(m for _, m in spec.groups) == g.n
    i = inertia(g)
    zero_cut = 1e-7 * max(1.0, spec.radius)
    assert sum(1 for v in spec.eigenvalues if v > zero_cut) == i.positive
    assert sum(1 for v in spec.eigenvalues if v < -zero_cut) == i.negative


@given(graphs(min_n=1, max_n=8))
def test_schatten_properties(g):
    s = singular_values(g)
    assert abs(schatten(g, 1) - energy(g)) < 1e-9
    assert abs(schatten(g, 2) ** 2 - 2 * g.m) < 1e-8
    # non-increasing in p, tends to s_1
    assert schatten(g, 3) <= schatten(g, 2) + 1e-12
    assert abs(schatten(g, 400) - s[0]) <= s[0] * 0.02 + 1e-12


def test_schatten_domain():
    with pytest.raises(ValueError):
        schatten(complete(3), 0.5)
    assert math.isfinite(schatten(complete(10), 10_000))


def test_spectral_radius():
    assert abs(spectral_radius(complete(4)) - 3) < 1e-12


def test_cluster():
    groups = cluster([1.0, 1.0, 1.0 - 1e-12, 0.0], 1e-9)
    assert [m for _, m in groups] == [3, 1]
    assert abs(groups[0][0] - 1.0) < 1e-12
    # a gap just over 10*tol separates
    assert len(cluster([1.0, 1.0 - 1.1e-8], 1e-9)) == 2


def test_tol_validation():
    with pytest.raises(ValueError):
        eigenvalues(complete(3), tol=0)


def test_json_format():
    text = eigenvalues(complete(2)).to_json()
    assert text.startswith('{"groups": [[')
    import json

    d = json.loads(text)
    assert d["groups"][0][1] == 1

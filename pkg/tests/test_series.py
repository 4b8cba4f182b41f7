import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from maghom.graph import build_graph, cartesian_product, complete, cycle, glue_with_maps, GlueSpec, Attachment, SubgraphRef
from maghom.series import TruncatedSeries, magnitude_alternating, magnitude_series


def test_k2_series():
    assert magnitude_series(complete(2), 4).coeffs == (2, -2, 2, -2, 2)


def test_constant_term_is_vertex_count():
    for g in (cycle(3), cycle(8), build_graph(1, [])):
        assert magnitude_series(g, 0).coeffs == (g.n,)


def test_single_vertex_series():
    assert magnitude_series(build_graph(1, []), 5).coeffs == (1, 0, 0, 0, 0, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.floats(0.2, 1.0), st.integers(0, 10 ** 6))
def test_inverse_matches_alternating(n, p, seed):
    g = random_graph(n, p, seed)
    assert magnitude_series(g, 5) == magnitude_alternating(g, 5)


def test_product_multiplicative():
    g1, g2 = cycle(4), complete(3)
    L = 6
    assert magnitude_series(cartesian_product(g1, g2), L) == magnitude_series(g1, L) * magnitude_series(g2, L)


def test_disjoint_union_additive():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    a, b = build_graph(2, [(0, 1)]), build_graph(3, [(0, 1), (1, 2)])
    assert magnitude_series(g, 5) == magnitude_series(a, 5) + magnitude_series(b, 5)


def test_inclusion_exclusion():
    # two C6 on an edge: #G + #(H1 n H2) = #H1 + #H2
    g, maps = glue_with_maps(GlueSpec((cycle(6), cycle(6)), (Attachment((0, 1), (2, 3)),)))
    h1, h2 = SubgraphRef(g, maps[0]), SubgraphRef(g, maps[1])
    L = 7
    lhs = magnitude_series(g, L) + magnitude_series((h1 & h2).graph(), L)
    rhs = magnitude_series(h1.graph(), L) + magnitude_series(h2.graph(), L)
    assert lhs == rhs


def test_series_arithmetic():
    a = TruncatedSeries((1, 2, 3))
    b = TruncatedSeries((0, 1, 0))
    assert (a * b).coeffs == (0, 1, 2)
    assert (a - a).coeffs == (0, 0, 0)
    assert TruncatedSeries.monomial(1, 3).coeffs == (0, 1, 0, 0)
    assert a.truncate(1).coeffs == (1, 2)

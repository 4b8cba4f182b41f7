import pickle

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, to_nx
from maghom.graph import (
    INF,
    Attachment,
    GlueSpec,
    Graph,
    GraphError,
    NotConvexError,
    SubgraphRef,
    build_graph,
    cartesian_product,
    complete,
    cycle,
    family,
    geodesic_counts,
    geodesic_stats,
    girth,
    glue,
    glue_with_maps,
    is_convex,
    is_tree,
    path,
    petersen,
    projection,
    square_polyomino,
    wheel,
)
from maghom.reference_tables import P_PENTOMINO_CELLS


def test_cycle6_distances():
    g = cycle(6)
    assert g.d(1, 5) == 2
    assert g.d(0, 3) == 3


def test_single_vertex():
    assert build_graph(1, []).dist == ((0,),)


def test_k4_distances():
    g = complete(4)
    assert all(g.d(u, v) == 1 for u in range(4) for v in range(4) if u != v)


def test_duplicates_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.num_edges == 2


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_disconnected_is_infinite():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert g.d(0, 2) == INF
    assert not g.is_connected()
    assert g.components() == [[0, 1], [2, 3]]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.floats(0.1, 0.9), st.integers(0, 10 ** 6))
def test_distances_match_networkx(n, p, seed):
    g = random_graph(n, p, seed)
    fw = dict(nx.floyd_warshall(to_nx(g)))
    for u in range(n):
        for v in range(n):
            assert g.d(u, v) == fw[u][v]
            assert g.d(u, v) == g.d(v, u)
            assert (g.d(u, v) == 1) == g.has_edge(u, v)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 8), st.floats(0.2, 0.9), st.integers(0, 10 ** 6))
def test_geodesic_counts_match_networkx(n, p, seed):
    g = random_graph(n, p, seed)
    h = to_nx(g)
    counts = geodesic_counts(g)
    for u in range(n):
        for v in range(n):
            if u != v and g.d(u, v) != INF:
                assert counts[u][v] == len(list(nx.all_shortest_paths(h, u, v)))


def test_families():
    assert (cycle(3).n, cycle(3).num_edges) == (3, 3)
    assert (path(4).n, path(4).num_edges) == (4, 3)
    assert (wheel(5).n, wheel(5).num_edges) == (6, 10)
    p = square_polyomino(P_PENTOMINO_CELLS)
    assert (p.n, p.num_edges) == (11, 15)
    pg = petersen()
    assert (pg.n, pg.num_edges, girth(pg)) == (10, 15, 5)
    assert family("cycle", 8) == cycle(8)
    assert family("wheel", 5) == wheel(5)


def test_family_errors():
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        square_polyomino([(0, 0), (2, 0)])
    with pytest.raises(GraphError):
        square_polyomino([(0, 0), (1, 1)])  # corner contact only
    with pytest.raises(GraphError):
        family("hypercube", 3)


def test_glue_counts():
    spec = GlueSpec((cycle(6), cycle(6)), (Attachment((0, 1), (2, 3)),))
    g = glue(spec)
    assert (g.n, g.num_edges) == (10, 11)
    g2 = glue(GlueSpec((cycle(4), complete(2)), (Attachment(0, 0),)))
    assert (g2.n, g2.num_edges) == (5, 5)


def test_glue_maps_cover_vertices():
    spec = GlueSpec((cycle(5), cycle(3), cycle(4)), (Attachment((0, 1), (1, 2)), Attachment(0, 0)))
    g, maps = glue_with_maps(spec)
    assert sorted({v for m in maps for v in m}) == list(range(g.n))
    assert g.n == 5 + 1 + 3


def test_glue_missing_edge_rejected():
    with pytest.raises(GraphError):
        glue(GlueSpec((cycle(6), cycle(3)), (Attachment((0, 1), (0, 3)),)))


def test_product_distance_additive():
    g1, g2 = cycle(5), path(3)
    g = cartesian_product(g1, g2)
    assert g.n == 15
    for a in range(5):
        for b in range(3):
            for c in range(5):
                for d in range(3):
                    assert g.d(a * 3 + b, c * 3 + d) == g1.d(a, c) + g2.d(b, d)


def test_convexity_and_projection():
    g = cycle(6)
    edge = SubgraphRef(g, [0, 1])
    assert is_convex(g, edge)
    assert projection(g, edge) is not None
    # in an odd cycle the far vertex has two nearest points on an edge
    c5 = cycle(5)
    assert is_convex(c5, SubgraphRef(c5, [0, 1]))
    assert projection(c5, SubgraphRef(c5, [0, 1])) is None
    with pytest.raises(NotConvexError):
        projection(g, SubgraphRef(g, [0, 2]))


def test_subgraph_ref():
    g = cycle(6)
    h = SubgraphRef(g, [4, 5, 0])
    assert h.graph().edges == frozenset({(0, 2), (1, 2)})  # sorted order 0, 4, 5
    assert (h & SubgraphRef(g, [0, 1])).vertices == frozenset({0})


def test_geodesic_stat_examples():
    _, mx = geodesic_stats(cycle(6))
    assert mx == 2
    _, mx = geodesic_stats(complete(4))
    assert mx == 1
    assert is_tree(path(5)) and not is_tree(cycle(5))
    assert girth(path(4)) == INF


def test_json_and_pickle_roundtrip():
    g = wheel(6)
    assert Graph.from_json(g.to_json()) == g
    assert pickle.loads(pickle.dumps(g)) == g

import random
import sys

import networkx as nx
import pytest

from maghom.graph import build_graph


def atlas_graphs(max_n=5):
    """Every graph on 1..max_n vertices up to isomorphism (disconnected included)."""
    return [build_graph(h.number_of_nodes(), h.edges()) for h in nx.graph_atlas_g()
            if 1 <= h.number_of_nodes() <= max_n]


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return h


@pytest.fixture(scope="session")
def tiny_graphs():
    return atlas_graphs(5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])

"""Magnitude power series and integral magnitude homology of finite graphs."""
from .graph import Graph, build_graph, cartesian_product, family, glue
from .homology import BigradedTable, HomologyGroup, homology_at, homology_table
from .series import magnitude_alternating, magnitude_series

__all__ = [
    "BigradedTable",
    "Graph",
    "HomologyGroup",
    "build_graph",
    "cartesian_product",
    "family",
    "glue",
    "homology_at",
    "homology_table",
    "magnitude_alternating",
    "magnitude_series",
]

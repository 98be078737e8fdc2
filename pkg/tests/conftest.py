"""Shared corpora and helpers for the test suite.

The small-graph corpora come from the networkx graph atlas (all graphs on at
most seven vertices); they are converted once per session and cached.
"""

from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import pytest

from intrep import (
    Graph,
    NotProperIntervalError,
    compute_proper_ordering,
    connected_components,
)


def to_graph(g: "nx.Graph") -> Graph:
    """Convert a networkx graph (arbitrary hashable nodes) to a Graph."""
    nodes = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), [(idx[u], idx[v]) for u, v in g.edges()]
    )


def is_proper_connected(g: Graph) -> bool:
    if len(connected_components(g)) != 1:
        return False
    try:
        compute_proper_ordering(g)
        return True
    except NotProperIntervalError:
        return False


def _atlas():
    return [to_graph(g) for g in nx.graph_atlas_g()[1:]]  # skip the null graph


@pytest.fixture(scope="session")
def atlas_graphs() -> list[Graph]:
    """Every graph on 1..7 vertices (1252 graphs)."""
    return _atlas()


@pytest.fixture(scope="session")
def graphs_up_to_6(atlas_graphs) -> list[Graph]:
    return [g for g in atlas_graphs if g.n <= 6]


@pytest.fixture(scope="session")
def proper_connected_up_to_5(atlas_graphs) -> list[Graph]:
    return [g for g in atlas_graphs if g.n <= 5 and is_proper_connected(g)]


@pytest.fixture(scope="session")
def proper_connected_6_7(atlas_graphs) -> list[Graph]:
    return [g for g in atlas_graphs if g.n >= 6 and is_proper_connected(g)]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def random_rationals(
    rng: random.Random, n: int, denoms=(1, 2, 3, 4, 6), spread: int = 8
) -> list[Fraction]:
    return [
        Fraction(rng.randint(-spread, spread), rng.choice(denoms))
        for _ in range(n)
    ]

"""Shared fixtures: reference hypergraphs and random structure generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from hypersimp.graphs import WeightedGraph
from hypersimp.hypergraph import Hypergraph, hypergraph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def fig4() -> Hypergraph:
    """Five vertices, three hyperedges: e1={v1,v2,v3}, e2={v2,v3}, e3={v3,v4,v5}."""
    return hypergraph(
        ["v1", "v2", "v3", "v4", "v5"],
        [("e1", {0, 1, 2}), ("e2", {1, 2}), ("e3", {2, 3, 4})],
    )


@pytest.fixture
def fig7_graph() -> WeightedGraph:
    """Five-node similarity graph whose MST is the path of its four heaviest edges.

    The 2/3-weight edge is the most similar pair, so the shortest bar has
    length exactly 3/2; the extra light edges never enter the MST.
    """
    edges = (
        (0, 1, Fraction(2, 3)),
        (1, 2, Fraction(1, 2)),
        (2, 3, Fraction(1, 3)),
        (3, 4, Fraction(1, 4)),
        (0, 2, Fraction(1, 5)),
        (0, 4, Fraction(1, 6)),
    )
    return WeightedGraph(
        nodes=(0, 1, 2, 3, 4),
        labels=("a", "b", "c", "d", "e"),
        edges=edges,
        singleton=(False,) * 5,
    )


@pytest.fixture(scope="session")
def southern_women_csv() -> bytes:
    return (DATA_DIR / "southern_women.csv").read_bytes()


@pytest.fixture(scope="session")
def southern_women(southern_women_csv) -> Hypergraph:
    from hypersimp.formats import parse_hypergraph

    return parse_hypergraph(southern_women_csv, "csv")


def random_hypergraph(rng: random.Random, max_vertices: int = 12, max_edges: int = 8) -> Hypergraph:
    n = rng.randint(0, max_vertices)
    m = rng.randint(0, max_edges)
    members = []
    for _ in range(m):
        size = rng.randint(0, n)
        members.append(frozenset(rng.sample(range(n), size)) if n else frozenset())
    return Hypergraph(
        tuple(f"v{i}" for i in range(n)),
        tuple(f"e{j}" for j in range(m)),
        tuple(members),
    )


def random_weighted_graph(
    rng: random.Random,
    max_nodes: int = 30,
    edge_probability: float = 0.35,
    connected: bool = False,
) -> WeightedGraph:
    n = rng.randint(2, max_nodes)
    pairs: set[tuple[int, int]] = set()
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        pairs.update(
            (min(a, b), max(a, b)) for a, b in zip(order, order[1:])
        )
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                pairs.add((i, j))
    edges = tuple(
        (u, v, Fraction(rng.randint(1, 12), rng.randint(1, 12)))
        for u, v in sorted(pairs)
    )
    degree = [0] * n
    for u, v, _ in edges:
        degree[u] += 1
        degree[v] += 1
    return WeightedGraph(
        nodes=tuple(range(n)),
        labels=tuple(f"n{i}" for i in range(n)),
        edges=edges,
        singleton=tuple(d == 0 for d in degree),
    )

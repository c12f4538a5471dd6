"""Line graphs, clique expansions, s-components, singleton handling."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hypersimp.errors import ParameterError
from hypersimp.graphs import (
    SingletonMode,
    WeightScheme,
    apply_singleton_mode,
    clique_expansion,
    line_graph,
    s_connected_components,
)
from hypersimp.hypergraph import dual, hypergraph

from conftest import random_hypergraph
from test_hypergraph import hypergraphs


def brute_force_weights(sets, s, scheme):
    """Exhaustive pair enumeration over the raw member sets."""
    out = {}
    for i, j in combinations(range(len(sets)), 2):
        inter = len(sets[i] & sets[j])
        if inter < s:
            continue
        if scheme is WeightScheme.OVERLAP:
            out[(i, j)] = Fraction(inter)
        else:
            out[(i, j)] = Fraction(inter, len(sets[i] | sets[j]))
    return out


class TestLineGraph:
    def test_fig4_jaccard_weights(self, fig4):
        g = line_graph(fig4, 1, WeightScheme.JACCARD)
        assert g.weight(0, 1) == Fraction(2, 3)
        assert g.weight(0, 2) == Fraction(1, 5)
        assert g.weight(1, 2) == Fraction(1, 4)

    def test_fig4_matches_brute_force(self, fig4):
        g = line_graph(fig4, 1, WeightScheme.JACCARD)
        expected = brute_force_weights(list(fig4.edge_members), 1, WeightScheme.JACCARD)
        assert {(u, v): w for u, v, w in g.edges} == expected

    def test_disjoint_hyperedges_all_singletons(self):
        h = hypergraph(["a", "b", "c"], [("e1", {0}), ("e2", {1}), ("e3", {2})])
        for s in (1, 2, 5):
            g = line_graph(h, s)
            assert g.edges == ()
            assert all(g.singleton)

    def test_s_below_one_rejected(self, fig4):
        with pytest.raises(ParameterError):
            line_graph(fig4, 0)

    def test_empty_hyperedges_never_adjacent(self):
        h = hypergraph(["a"], [("e1", set()), ("e2", set()), ("e3", {0})])
        g = line_graph(h, 1)
        assert g.edges == ()


class TestCliqueExpansion:
    def test_fig4_vertex_pair_weight(self, fig4):
        q = clique_expansion(fig4, 1, WeightScheme.JACCARD)
        assert q.weight(0, 1) == Fraction(1, 2)

    def test_single_edge_pair_weight_one(self):
        h = hypergraph(["a", "b"], [("e", {0, 1})])
        q = clique_expansion(h, 1, WeightScheme.JACCARD)
        assert q.weight(0, 1) == Fraction(1)

    def test_fig4_all_pairs_match_brute_force(self, fig4):
        q = clique_expansion(fig4, 1, WeightScheme.JACCARD)
        expected = brute_force_weights(
            list(fig4.vertex_memberships), 1, WeightScheme.JACCARD
        )
        assert {(u, v): w for u, v, w in q.edges} == expected

    @given(hypergraphs(), st.integers(1, 3), st.sampled_from(list(WeightScheme)))
    def test_duality(self, h, s, scheme):
        assert clique_expansion(h, s, scheme) == line_graph(dual(h), s, scheme)

    @given(hypergraphs(), st.integers(1, 3), st.sampled_from(list(WeightScheme)))
    def test_monotonicity_in_s(self, h, s, scheme):
        low = {(u, v): w for u, v, w in line_graph(h, s, scheme).edges}
        high = {(u, v): w for u, v, w in line_graph(h, s + 1, scheme).edges}
        assert set(high) <= set(low)
        for pair, w in high.items():
            assert low[pair] == w

    @given(hypergraphs(), st.sampled_from(list(WeightScheme)))
    def test_weight_ranges(self, h, scheme):
        s = 1
        g = line_graph(h, s, scheme)
        for _, _, w in g.edges:
            if scheme is WeightScheme.JACCARD:
                assert 0 < w <= 1
            else:
                assert w >= s and w.denominator == 1

    def test_weight_symmetry(self, fig4):
        g = line_graph(fig4)
        for u, v, _ in g.edges:
            assert g.weight(u, v) == g.weight(v, u)


def test_collapse_changes_overlap_weight_from_k_to_l():
    # e1 and e2 share three vertices; two of those have identical memberships
    # and collapse to one super-vertex, so the collapsed overlap weight is 2.
    from hypersimp.hypergraph import collapse_vertices

    h = hypergraph(
        ["a", "b", "c", "d", "e"],
        [("e1", {0, 1, 2, 3}), ("e2", {0, 1, 2, 4}), ("e3", {2})],
    )
    before = line_graph(h, 1, WeightScheme.OVERLAP)
    assert before.weight(0, 1) == Fraction(3)
    collapsed, records = collapse_vertices(h)
    assert len(records) == 1 and len(records[0].constituents) == 2
    after = line_graph(collapsed, 1, WeightScheme.OVERLAP)
    assert after.weight(0, 1) == Fraction(2)


def brute_force_s_components(h, s):
    """Transitive closure of the pairwise |intersection| >= s relation."""
    edges = list(range(h.edge_count))
    linked = {
        (i, j)
        for i, j in combinations(edges, 2)
        if len(h.edge_members[i] & h.edge_members[j]) >= s
    }
    classes = [{e} for e in edges]
    changed = True
    while changed:
        changed = False
        for i, j in linked:
            ci = next(c for c in classes if i in c)
            cj = next(c for c in classes if j in c)
            if ci is not cj:
                classes.remove(cj)
                ci |= cj
                changed = True
    return sorted(sorted(c) for c in classes)


class TestSConnectedComponents:
    def test_fig4_s1_single_component(self, fig4):
        assert s_connected_components(fig4, 1) == brute_force_s_components(fig4, 1)
        assert s_connected_components(fig4, 1) == [[0, 1, 2]]

    def test_fig4_s2_splits_e3(self, fig4):
        assert s_connected_components(fig4, 2) == [[0, 1], [2]]
        assert s_connected_components(fig4, 2) == brute_force_s_components(fig4, 2)

    def test_s_larger_than_every_edge(self, fig4):
        assert s_connected_components(fig4, 10) == [[0], [1], [2]]

    def test_random_hypergraphs_match_oracle(self):
        rng = random.Random(7)
        for _ in range(40):
            h = random_hypergraph(rng, max_vertices=8, max_edges=6)
            for s in (1, 2, 3):
                assert s_connected_components(h, s) == brute_force_s_components(h, s)


class TestSingletonMode:
    def test_greyout_preserves_graph(self, fig4):
        g = line_graph(fig4, 2)
        assert apply_singleton_mode(g, SingletonMode.GREY_OUT) == g

    def test_no_singletons_filter_is_identity(self, fig4):
        g = line_graph(fig4, 1)
        assert apply_singleton_mode(g, SingletonMode.FILTER) == g

    def test_filter_removes_isolated_node(self):
        h = hypergraph(["a", "b", "c"], [("e1", {0, 1}), ("e2", {0, 1}), ("e3", {2})])
        g = line_graph(h, 1)
        filtered = apply_singleton_mode(g, SingletonMode.FILTER)
        assert filtered.nodes == (0, 1)
        assert filtered.edges == g.edges

    def test_southern_women_s4_filter(self, southern_women):
        g = clique_expansion(southern_women, 4, WeightScheme.JACCARD)
        filtered = apply_singleton_mode(g, SingletonMode.FILTER)
        removed = set(g.nodes) - set(filtered.nodes)
        names = {southern_women.vertex_labels[v] for v in removed}
        assert names == {"Dorothy", "Olivia", "Flora", "Pearl"}

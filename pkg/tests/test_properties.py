"""Property-based invariants linking fast paths to brute-force oracles."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from pentagon.census import (
    count_walks,
    five_path_census,
    five_path_census_dfs,
    forbidden_subgraphs,
    triangle_census,
)
from pentagon.constructions import random_c5_free
from pentagon.graph import Graph, graph_from_edge_list
from pentagon.hypergraph import Hypergraph, berge_girth, hypergraph_from_text, shadow
from pentagon.search import canonical_form

from . import oracles


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    slots = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << slots) - 1))
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(
        n, [pairs[i] for i in range(slots) if mask >> i & 1]
    )


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=3, max_value=7))
    pool = list(itertools.combinations(range(n), 3))
    idx = draw(
        st.sets(
            st.integers(min_value=0, max_value=len(pool) - 1),
            min_size=1,
            max_size=6,
        )
    )
    return Hypergraph(n, 3, [pool[i] for i in sorted(idx)])


@given(graphs())
def test_graph_text_roundtrip(g):
    assert graph_from_edge_list(g.to_edge_list_text()) == g


@given(graphs())
def test_triangle_census_agrees_with_brute(g):
    assert triangle_census(g).total == oracles.count_triangles_brute(g)


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_forbidden_subgraphs_agree_with_brute(g):
    rep = forbidden_subgraphs(g)
    assert rep.contains_c4 == oracles.has_cycle_brute(g, 4)
    assert rep.contains_c5 == oracles.has_cycle_brute(g, 5)
    assert rep.contains_induced_c4 == oracles.has_cycle_brute(g, 4, induced=True)


@given(graphs(max_n=7), st.integers(min_value=0, max_value=5))
@settings(max_examples=60)
def test_walk_counts_match_matrix_power(g, k):
    assert count_walks(g, k) == oracles.count_walks_brute(g, k)


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_five_path_pivot_equals_dfs(g):
    a = five_path_census(g)
    b = five_path_census_dfs(g)
    assert (a.good, a.bad, a.total) == (b.good, b.bad, b.total)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_canonical_form_invariant_under_relabelling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    relab = Graph.from_edges(
        g.n, [(perm[u], perm[v]) for u, v in g.edges()]
    )
    rows_a = [g.neighbors_mask(v) for v in range(g.n)]
    rows_b = [relab.neighbors_mask(v) for v in range(g.n)]
    assert canonical_form(g.n, rows_a) == canonical_form(g.n, rows_b)


@given(hypergraphs())
@settings(max_examples=40, deadline=None)
def test_berge_girth_agrees_with_brute(h):
    assert berge_girth(h).girth == oracles.berge_girth_brute(h)


@given(hypergraphs())
def test_hypergraph_text_roundtrip(h):
    back = hypergraph_from_text(h.to_text())
    assert back.n == h.n and back.r == h.r
    assert sorted(back.edges) == sorted(h.edges)


@given(hypergraphs())
def test_shadow_edges_all_covered(h):
    g = shadow(h)
    for u, v in g.edges():
        assert any(u in e and v in e for e in h.edges)


@given(
    st.integers(min_value=4, max_value=12),
    st.integers(min_value=0, max_value=50),
)
@settings(max_examples=30, deadline=None)
def test_random_generator_always_pentagon_free(n, seed):
    g = random_c5_free(n, seed=seed, budget=120)
    assert not oracles.has_cycle_brute(g, 5)

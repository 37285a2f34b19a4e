"""Triangle, cycle, walk and 5-path censuses against brute-force oracles."""

import random

import pytest

import pentagon as P
from pentagon.census import (
    count_walks,
    five_path_census,
    five_path_census_dfs,
    forbidden_subgraphs,
    middle_edge_census,
    middle_edge_good5_dfs,
    require_c5_free,
    triangle_census,
    two_path_report,
)
from pentagon.errors import StructureError
from pentagon.graph import Graph

from . import oracles


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        n,
        [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ],
    )


def test_triangle_census_fixtures():
    assert triangle_census(complete(4)).total == 4
    assert triangle_census(petersen()).total == 0
    crown = P.gadget("crown", k=3)
    tc = triangle_census(crown)
    assert tc.total == 3
    assert tc.per_vertex[0] == 3 and tc.per_vertex[1] == 3
    assert tc.average == pytest.approx(sum(tc.per_vertex) / crown.n)
    assert all(t == tuple(sorted(t)) for t in tc.triangles)


@pytest.mark.parametrize("seed", range(6))
def test_triangle_census_matches_brute(seed):
    g = random_graph(9, 0.4, seed)
    assert triangle_census(g).total == oracles.count_triangles_brute(g)


def test_forbidden_subgraph_flags():
    rep4 = forbidden_subgraphs(cycle(4))
    assert rep4.contains_c4 and rep4.contains_induced_c4
    assert not rep4.contains_c5
    rep5 = forbidden_subgraphs(cycle(5))
    assert rep5.contains_c5 and not rep5.contains_c4
    repk4 = forbidden_subgraphs(complete(4))
    # K4 has chorded 4-cycles but no induced one
    assert repk4.contains_c4 and not repk4.contains_induced_c4
    reppet = forbidden_subgraphs(petersen())
    assert reppet.contains_c5 and not reppet.contains_c4


@pytest.mark.parametrize("seed", range(8))
def test_forbidden_flags_match_brute(seed):
    g = random_graph(8, 0.3, seed)
    rep = forbidden_subgraphs(g)
    assert rep.contains_c4 == oracles.has_cycle_brute(g, 4)
    assert rep.contains_c5 == oracles.has_cycle_brute(g, 5)
    assert rep.contains_induced_c4 == oracles.has_cycle_brute(
        g, 4, induced=True
    )


def test_witnesses_are_real_cycles():
    g = random_graph(9, 0.35, 3)
    rep = forbidden_subgraphs(g)
    if rep.c5_witness:
        w = rep.c5_witness
        assert len(w) == 5
        assert all(g.has_edge(w[i], w[(i + 1) % 5]) for i in range(5))
    if rep.induced_c4_witness:
        w = rep.induced_c4_witness
        assert all(g.has_edge(w[i], w[(i + 1) % 4]) for i in range(4))
        assert not g.has_edge(w[0], w[2]) and not g.has_edge(w[1], w[3])


def test_c5_witness_lex_minimal():
    # two disjoint pentagons; the witness must use the lower one
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    rep = forbidden_subgraphs(Graph.from_edges(10, edges))
    assert rep.c5_witness == (0, 1, 2, 3, 4)


def test_require_c5_free():
    require_c5_free(cycle(4), "test")  # no raise
    with pytest.raises(StructureError, match="5-cycle"):
        require_c5_free(cycle(5), "test")


def test_count_walks_fixtures():
    # walks of length k from each vertex of C_n: always 2^k choices
    assert count_walks(cycle(6), 3) == 6 * 8
    assert count_walks(path(2), 1) == 2
    assert count_walks(complete(3), 2) == 3 * 2 * 2
    assert count_walks(cycle(4), 0) == 4
    with pytest.raises(ValueError):
        count_walks(cycle(4), -1)


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("k", [1, 2, 5])
def test_count_walks_matches_matrix_power(seed, k):
    g = random_graph(8, 0.4, seed)
    assert count_walks(g, k) == oracles.count_walks_brute(g, k)


def test_five_path_fixtures():
    assert five_path_census(path(6)).total == 1
    assert five_path_census(path(6)).good == 1
    assert five_path_census(cycle(6)).total == 6
    assert five_path_census(cycle(5)).total == 0
    k4 = complete(4)
    assert five_path_census(k4).total == 0


@pytest.mark.parametrize("seed", range(8))
def test_five_path_pivot_matches_dfs_and_brute(seed):
    g = random_graph(8, 0.4, seed)
    piv = five_path_census(g)
    dfs = five_path_census_dfs(g)
    assert (piv.good, piv.bad, piv.total) == (dfs.good, dfs.bad, dfs.total)
    brute = oracles.five_paths_brute(g)
    assert piv.total == len(brute)
    assert piv.good == oracles.good_five_paths_brute(g)
    assert piv.good + piv.bad == piv.total


@pytest.mark.parametrize("seed", range(4))
def test_middle_edge_dfs_totals(seed):
    g = random_graph(8, 0.4, seed)
    mid = middle_edge_good5_dfs(g)
    assert sum(mid.values()) == five_path_census(g).good
    assert all(g.has_edge(u, v) for u, v in mid)


def test_two_path_report_fixtures():
    # K_{2,3}: the two degree-3 vertices share three common neighbours
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    rep = two_path_report(k23)
    assert any(u == 0 and v == 1 for u, v, _ in rep.violations_count)
    # C4: opposite vertices share exactly two non-adjacent common neighbours
    rep4 = two_path_report(cycle(4))
    assert rep4.violations_count == ()
    assert len(rep4.violations_adjacency) == 2
    # a clean triangle book has neither kind
    repb = two_path_report(P.gadget("crown", k=4))
    assert repb.violations_count == () and repb.violations_adjacency == ()


def test_middle_edge_census_on_crown():
    g = P.gadget("crown", k=2)
    dec = P.edge_decomposition(g)
    mec = middle_edge_census(g, dec)
    assert mec.all_within_caps
    assert {c.kind for c in mec.components} <= {"two_path", "triangle", "k4"}
    covered = [e for c in mec.components for e in c.edges]
    assert sorted(covered) == g.edges()
    for c in mec.components:
        assert c.max_per_target <= 2
        assert c.anchor_total <= 2 * mec.n


def test_middle_edge_census_rejects_bad_partition():
    g = P.gadget("crown", k=2)
    dec = P.edge_decomposition(g)
    with pytest.raises(StructureError, match="more than once|partition"):
        middle_edge_census(g, dec, gs_edges=[g.edges()[0]])
    other = P.gadget("crown", k=3)
    with pytest.raises(StructureError, match="partition"):
        middle_edge_census(other, dec)


def test_middle_edge_census_counts_match_dfs():
    g = P.gadget("book_plus_pendants", k=2, pendants=1)
    split = P.split_triangle_edges(g)
    dec = P.edge_decomposition(split.g_delta)
    mec = middle_edge_census(g, dec, gs_edges=split.g_s.edges())
    mid = middle_edge_good5_dfs(g)
    for c in mec.components:
        assert c.good5 == sum(mid.get(e, 0) for e in c.edges)

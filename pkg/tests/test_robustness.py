import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krobust import constructions
from krobust.enumeration import enumerate_solutions
from krobust.graph import Graph, GraphError, bridges, is_connected, is_t_edge_connected, remove_edges
from krobust.robustness import (
    INF,
    RobustnessVerdict,
    check_k_robust,
    clamp_budget,
    min_break_budget,
    parse_budget,
    recording,
)
from krobust.solutions import Problem, Solution, SolutionError, check_solution, is_perfect_matching
from oracles import connected_graphs, nx_connected, reduce_solution, robust_by_definition
from strategies import connected_graphs as connected_graph_st

MIS, MDS, MM = Problem.MIS, Problem.MDS, Problem.MM


def test_c6_perfect_matching_is_1_robust(c6):
    s = Solution.of(MM, [(0, 1), (2, 3), (4, 5)])
    assert check_k_robust(MM, c6, s, 1).robust


def test_c6_two_edge_matching_breaks(c6):
    s = Solution.of(MM, [(0, 1), (3, 4)])
    v = check_k_robust(MM, c6, s, 1)
    assert not v.robust
    assert v.removal == ((0, 1),)
    # Both edges next to the removed one become addable; (0,5) is the lower index.
    assert v.witness == (0, 5)
    h = remove_edges(c6, v.removal)
    left = Solution.of(MM, [(3, 4)])
    assert not check_solution(MM, h, left)
    for e in [(0, 5), (1, 2)]:
        assert h.has_edge(*e) and not set(e) & {3, 4}


def test_k33_perfect_matchings_are_1_robust():
    k33 = constructions.complete_bipartite(3, 3)
    for s in enumerate_solutions(MM, k33):
        assert check_k_robust(MM, k33, s, 1).robust
        assert min_break_budget(MM, k33, s) == 2


def test_mds_c4_counterexample(c4):
    v = check_k_robust(MDS, c4, Solution.of(MDS, [0, 1]), 1)
    assert not v.robust
    # Single-edge removals in lexicographic order: (0,1) keeps {0,1} dominating,
    # (0,3) leaves 3 with no selected neighbor.
    assert v.removal == ((0, 3),)
    assert v.witness == 3
    assert v.removal == robust_by_definition(MDS, c4, Solution.of(MDS, [0, 1]), 1)
    alt = remove_edges(c4, [(1, 2)])
    assert is_connected(alt) and not (alt.adj[2] & {0, 1})


@pytest.mark.parametrize("k", [0, 1, 2, 5, INF])
def test_trees_are_vacuously_robust(k):
    tree = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)])
    for p in Problem:
        for s in enumerate_solutions(p, tree):
            assert check_k_robust(p, tree, s, k).robust


def test_min_break_budget_examples(c6, p3):
    k33 = constructions.complete_bipartite(3, 3)
    assert min_break_budget(MM, k33, Solution.of(MM, [(0, 3), (1, 4), (2, 5)])) == 2
    assert min_break_budget(MM, c6, Solution.of(MM, [(0, 1), (3, 4)])) == 1
    assert min_break_budget(MIS, p3, Solution.of(MIS, [0, 2])) == math.inf


def test_preconditions(c4):
    with pytest.raises(GraphError):
        check_k_robust(MIS, Graph(4, [(0, 1), (2, 3)]), Solution.of(MIS, [0, 2]), 1)
    with pytest.raises(SolutionError):
        check_k_robust(MIS, c4, Solution.of(MIS, [0]), 1)


def test_budget_parsing():
    assert parse_budget("inf") == INF
    assert parse_budget("3") == 3
    with pytest.raises(ValueError):
        parse_budget("-1")
    with pytest.raises(ValueError):
        parse_budget("many")
    assert clamp_budget(INF, 7) == 7
    assert clamp_budget(2, 7) == 2


def test_render():
    assert RobustnessVerdict(True, 1).render() == "ROBUST\n"
    v = RobustnessVerdict(False, 1, ((0, 1), (2, 3)), (1, 2))
    assert v.render() == "NOT-ROBUST\nREMOVE: (0,1) (2,3)\nWITNESS: (1,2)\n"
    assert RobustnessVerdict(False, 1, ((0, 3),), 3).render().endswith("WITNESS: 3\n")


def test_agrees_with_definition_exhaustively():
    """Kernel verdicts equal the full-predicate definition on every connected
    graph up to five vertices, every solution and k in {0,1,2,inf}."""
    for g in connected_graphs(5):
        for p in Problem:
            for s in enumerate_solutions(p, g):
                for k in (0, 1, 2, INF):
                    v = check_k_robust(p, g, s, k)
                    want = robust_by_definition(p, g, s, clamp_budget(k, g.m))
                    assert v.robust == (want is None)
                    if want is not None:
                        assert v.removal == want


@settings(max_examples=60, deadline=None)
@given(connected_graph_st(min_n=5, max_n=7), st.sampled_from(list(Problem)), st.integers(1, 3))
def test_agrees_with_definition_on_random_graphs(g, p, k):
    for s in list(enumerate_solutions(p, g))[:4]:
        want = robust_by_definition(p, g, s, k)
        v = check_k_robust(p, g, s, k)
        assert v.robust == (want is None)
        assert v.removal == want


@settings(max_examples=80, deadline=None)
@given(connected_graph_st(max_n=7), st.sampled_from(list(Problem)))
def test_counterexample_certifies_failure(g, p):
    for s in enumerate_solutions(p, g):
        v = check_k_robust(p, g, s, INF)
        if v.robust:
            continue
        h = remove_edges(g, v.removal)
        assert is_connected(h)
        reduced = reduce_solution(p, s, set(v.removal))
        assert not check_solution(p, h, reduced)
        if p is MM:
            u, w = v.witness
            matched = {x for e in reduced.members for x in e}
            assert h.has_edge(u, w) and u not in matched and w not in matched
        else:
            assert v.witness not in s.members and not h.adj[v.witness] & set(s.members)


@settings(max_examples=80, deadline=None)
@given(connected_graph_st(max_n=7), st.sampled_from(list(Problem)))
def test_monotone_in_k(g, p):
    for s in enumerate_solutions(p, g):
        flags = [check_k_robust(p, g, s, k).robust for k in range(g.m + 1)]
        assert flags == sorted(flags, reverse=True)
        assert flags[0]
        brk = min_break_budget(p, g, s)
        assert flags == [k < brk for k in range(g.m + 1)]


@settings(max_examples=80, deadline=None)
@given(connected_graph_st(min_n=2, max_n=7), st.sampled_from(list(Problem)), st.integers(1, 3))
def test_connectivity_shortcut(g, p, k):
    if not is_t_edge_connected(g, k + 1):
        return
    for s in enumerate_solutions(p, g):
        assert check_k_robust(p, g, s, k) == check_k_robust(p, g, s, k, filtered=False)


def test_perfect_matchings_are_1_robust_on_small_graphs():
    for g in connected_graphs(6):
        if g.n % 2:
            continue
        for s in enumerate_solutions(MM, g):
            if is_perfect_matching(g, s.members):
                assert check_k_robust(MM, g, s, 1, validate=False).robust


def test_unmatched_neighbors_ride_on_bridges():
    """In a 1-robust maximal matching, the matched edges covering the
    neighbors of an unmatched vertex are bridges."""
    checked = 0
    for g in connected_graphs(6):
        cut = None
        for s in enumerate_solutions(MM, g):
            matched = {x: e for e in s.members for x in e}
            free = [u for u in range(g.n) if u not in matched]
            if not free or not check_k_robust(MM, g, s, 1, validate=False).robust:
                continue
            cut = set(bridges(g)) if cut is None else cut
            for u in free:
                for w in g.adj[u]:
                    assert matched[w] in cut
                    checked += 1
    assert checked > 0


def test_triangle_with_free_vertex_never_matched_inside():
    for g in connected_graphs(6):
        for s in enumerate_solutions(MM, g):
            if not check_k_robust(MM, g, s, 1, validate=False).robust:
                continue
            matched = {x for e in s.members for x in e}
            for u in range(g.n):
                if u in matched:
                    continue
                for a in g.adj[u]:
                    for b in g.adj[u]:
                        if a < b and g.has_edge(a, b):
                            assert (a, b) not in s.members


def test_deterministic(c4):
    s = Solution.of(MDS, [0, 1])
    assert check_k_robust(MDS, c4, s, 2) == check_k_robust(MDS, c4, s, 2)


def test_recording(c4):
    with recording() as log:
        check_k_robust(MIS, c4, Solution.of(MIS, [0, 2]), 1)
    assert len(log) == 1 and log[0][0] is MIS
    check_k_robust(MIS, c4, Solution.of(MIS, [0, 2]), 1)
    assert len(log) == 1


def test_unfiltered_counts_disconnecting_removals(p3):
    s = Solution.of(MIS, [0, 2])
    assert check_k_robust(MIS, p3, s, 2).robust
    v = check_k_robust(MIS, p3, s, 2, filtered=False)
    assert not v.robust and v.removal == ((0, 1), (1, 2)) and v.witness == 1
    assert not nx_connected(remove_edges(p3, v.removal))

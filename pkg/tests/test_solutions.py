from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krobust import constructions
from krobust.enumeration import enumerate_solutions
from krobust.graph import Graph, GraphFormatError, remove_edges
from krobust.solutions import (
    Problem,
    Solution,
    SolutionError,
    check_solution,
    format_solution,
    greedy_complete,
    is_dominating,
    is_independent,
    is_independent_2_dominating,
    is_perfect_matching,
    parse_solution,
)
from oracles import connected_graphs
from strategies import connected_graphs as connected_graph_st

MIS, MDS, MM = Problem.MIS, Problem.MDS, Problem.MM


def test_check_solution_examples(c4, p3):
    assert check_solution(MIS, c4, Solution.of(MIS, [0, 2]))
    assert not check_solution(MIS, c4, Solution.of(MIS, [0]))
    assert not check_solution(MIS, c4, Solution.of(MIS, [0, 1]))
    assert check_solution(MDS, p3, Solution.of(MDS, [1]))
    assert not check_solution(MDS, p3, Solution.of(MDS, [0, 1]))
    triangle = constructions.clique(3)
    assert check_solution(MM, triangle, Solution.of(MM, [(0, 1)]))
    assert not check_solution(MM, c4, Solution.of(MM, [(0, 1)]))


def test_check_solution_rejects_mismatch(c4):
    with pytest.raises(SolutionError):
        check_solution(MIS, c4, Solution.of(MDS, [0, 2]))
    with pytest.raises(SolutionError):
        check_solution(MM, c4, Solution.of(MM, [(0, 2)]))
    with pytest.raises(SolutionError):
        check_solution(MIS, c4, Solution.of(MIS, [7]))


def test_perfect_matching_examples(c6, k4):
    assert is_perfect_matching(c6, [(0, 1), (2, 3), (4, 5)])
    assert not is_perfect_matching(c6, [(0, 1), (3, 4)])
    assert is_perfect_matching(k4, [(0, 1), (2, 3)])


def test_independent_2_dominating_examples(c4, c5):
    assert is_independent_2_dominating(c4, {0, 2})
    assert not is_independent_2_dominating(c5, {0, 2})
    k23 = constructions.complete_bipartite(2, 3)
    assert is_independent_2_dominating(k23, {0, 1})
    assert is_independent_2_dominating(k23, {2, 3, 4})
    assert not is_independent_2_dominating(k23, {0, 2})
    assert not is_independent_2_dominating(k23, {0})


def test_greedy_complete_examples(c6, c4, p3):
    assert greedy_complete(MM, c6, Solution.of(MM, [(0, 1)])).members == ((0, 1), (2, 3), (4, 5))
    assert greedy_complete(MIS, c4, Solution.of(MIS, [0])).members == (0, 2)
    # Lowest index first: 0 is redundant in {0,1,2}, then 2 is redundant in {1,2}.
    assert greedy_complete(MDS, p3, Solution.of(MDS, [0, 1, 2])).members == (1,)


def test_greedy_complete_rejects_infeasible(c4):
    with pytest.raises(SolutionError):
        greedy_complete(MIS, c4, Solution.of(MIS, [0, 1]))
    with pytest.raises(SolutionError):
        greedy_complete(MDS, c4, Solution.of(MDS, [0]))
    with pytest.raises(SolutionError):
        greedy_complete(MM, c4, Solution.of(MM, [(0, 1), (1, 2)]))


@given(connected_graph_st(), st.data())
def test_greedy_output_is_valid(g, data):
    seed = data.draw(st.sets(st.integers(0, g.n - 1)))
    independent = set()
    for v in sorted(seed):
        if not g.adj[v] & independent:
            independent.add(v)
    assert check_solution(MIS, g, greedy_complete(MIS, g, Solution.of(MIS, independent)))
    dominating = seed | {v for v in range(g.n) if not (g.adj[v] | {v}) & seed}
    assert check_solution(MDS, g, greedy_complete(MDS, g, Solution.of(MDS, dominating)))
    matching, used = [], set()
    for e in data.draw(st.lists(st.sampled_from(g.edges), unique=True)) if g.edges else []:
        if not set(e) & used:
            matching.append(e)
            used.update(e)
    assert check_solution(MM, g, greedy_complete(MM, g, Solution.of(MM, matching)))


def test_mis_is_independent_dominating_on_all_small_graphs():
    for g in connected_graphs(5):
        for r in range(g.n + 1):
            for s in combinations(range(g.n), r):
                expected = is_independent(g, s) and is_dominating(g, s)
                assert check_solution(MIS, g, Solution.of(MIS, s)) == expected


@given(connected_graph_st())
def test_independent_2_dominating_implies_mis(g):
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if is_independent_2_dominating(g, s):
                assert check_solution(MIS, g, Solution.of(MIS, s))


@settings(max_examples=60)
@given(connected_graph_st(max_n=6), st.data())
def test_mds_minimality_survives_when_domination_does(g, data):
    removed = data.draw(st.sets(st.sampled_from(g.edges))) if g.edges else set()
    h = remove_edges(g, removed)
    for s in enumerate_solutions(MDS, g):
        if is_dominating(h, s.members):
            assert check_solution(MDS, h, s)


def test_solution_file_roundtrip():
    s = Solution.of(MIS, [3, 0, 2])
    assert format_solution(s) == "0 2 3\n"
    assert parse_solution(MIS, "0 2 3\n") == s
    m = Solution.of(MM, [(3, 2), (0, 1)])
    assert format_solution(m) == "0 1\n2 3\n"
    assert parse_solution(MM, format_solution(m)) == m


def test_solution_file_rejects_garbage():
    with pytest.raises(GraphFormatError):
        parse_solution(MIS, "0 x")
    with pytest.raises(GraphFormatError):
        parse_solution(MM, "0 1 2")
    with pytest.raises(GraphFormatError):
        parse_solution(MIS, "0 0")


def test_problem_parse():
    assert Problem.parse("MDS") is MDS
    with pytest.raises(ValueError):
        Problem.parse("vc")


def test_empty_graph_solutions():
    g = Graph(1)
    assert check_solution(MIS, g, Solution.of(MIS, [0]))
    assert check_solution(MM, g, Solution.of(MM, []))

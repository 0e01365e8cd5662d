import pytest
from hypothesis import given, settings

from krobust import constructions
from krobust.enumeration import enumerate_by_subsets, enumerate_solutions
from krobust.graph import Graph, GraphError, SizeGuardError
from krobust.solutions import Problem, Solution, check_solution, is_dominating
from oracles import all_solutions_by_subsets, connected_graphs
from strategies import connected_graphs as connected_graph_st

MIS, MDS, MM = Problem.MIS, Problem.MDS, Problem.MM


def members(p, g):
    return [s.members for s in enumerate_solutions(p, g)]


def test_examples(c4, p3):
    assert members(MIS, c4) == [(0, 2), (1, 3)]
    assert members(MM, constructions.clique(3)) == [((0, 1),), ((0, 2),), ((1, 2),)]
    assert members(MDS, p3) == [(0, 2), (1,)]


def test_gk_witness_has_three_mis():
    w = constructions.gk_witness(1)
    assert members(MIS, w.graph) == [(0, 1, 2), (1, 2, 6), (3, 4, 5, 6)]


def test_backtracking_matches_subset_oracle_n_le_5():
    for g in connected_graphs(5):
        for p in Problem:
            assert list(enumerate_solutions(p, g)) == all_solutions_by_subsets(p, g)


def test_backtracking_matches_builtin_oracle_n_6():
    for g in connected_graphs(6):
        if g.n < 6:
            continue
        for p in (MIS, MDS):
            assert list(enumerate_solutions(p, g)) == enumerate_by_subsets(p, g)


@settings(max_examples=40, deadline=None)
@given(connected_graph_st(min_n=5, max_n=7))
def test_backtracking_matches_builtin_oracle(g):
    for p in Problem:
        if p is MM and g.m > 14:
            continue
        assert list(enumerate_solutions(p, g)) == enumerate_by_subsets(p, g)


@given(connected_graph_st())
def test_output_invariants(g):
    for p in Problem:
        sols = list(enumerate_solutions(p, g))
        assert sols == sorted(sols)
        assert len(set(sols)) == len(sols)
        assert all(check_solution(p, g, s) for s in sols)
    for s in enumerate_solutions(MIS, g):
        assert is_dominating(g, s.members)


def test_guards():
    big = constructions.clique(21)
    with pytest.raises(SizeGuardError):
        enumerate_solutions(MIS, big)
    assert len(enumerate_solutions(MIS, big, override_guards=True)) == 21
    with pytest.raises(SizeGuardError):
        enumerate_solutions(MM, constructions.clique(8))
    with pytest.raises(GraphError):
        enumerate_solutions(MIS, Graph(2))


def test_solution_list_shape(c4):
    sl = enumerate_solutions(MIS, c4)
    assert sl.complete and sl.problem is MIS and len(sl) == 2
    assert list(sl)[0] == Solution.of(MIS, [0, 2])

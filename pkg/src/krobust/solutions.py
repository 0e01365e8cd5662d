"""Solution predicates for MIS, MDS and maximal matching, plus greedy completion."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from krobust.graph import Edge, Graph, GraphError, GraphFormatError, canonical_edge


class Problem(enum.Enum):
    MIS = "mis"
    MDS = "mds"
    MM = "mm"

    @classmethod
    def parse(cls, text: str) -> "Problem":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown problem {text!r} (expected mis, mds or mm)") from None

    @property
    def on_edges(self) -> bool:
        return self is Problem.MM


class SolutionError(GraphError):
    """Raised for malformed solutions or infeasible partial solutions."""


@dataclass(frozen=True)
class Solution:
    """A vertex set (MIS/MDS) or an edge set (MM), stored sorted."""

    problem: Problem
    members: tuple

    @classmethod
    def of(cls, problem: Problem, items: Iterable) -> "Solution":
        if problem.on_edges:
            members = tuple(sorted({canonical_edge(int(e[0]), int(e[1])) for e in items}))
        else:
            members = tuple(sorted({int(v) for v in items}))
        return cls(problem, members)

    def __lt__(self, other: "Solution") -> bool:
        return self.members < other.members

    def validate_for(self, g: Graph) -> None:
        if self.problem.on_edges:
            for e in self.members:
                if not (isinstance(e, tuple) and len(e) == 2):
                    raise SolutionError(f"matching payload must be edges, got {e!r}")
                if not g.has_edge(*e):
                    raise SolutionError(f"{e} is not an edge of the graph")
        else:
            for v in self.members:
                if not isinstance(v, int):
                    raise SolutionError(f"{self.problem.name} payload must be vertices, got {v!r}")
                if not 0 <= v < g.n:
                    raise SolutionError(f"vertex {v} not in 0..{g.n - 1}")

    def vertex_mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not (g.adj[v] & s) for v in s)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(v in s or g.adj[v] & s for v in range(g.n))


def is_matching(edges: Iterable[Edge]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def _matched_vertices(edges: Iterable[Edge]) -> set[int]:
    return {x for e in edges for x in e}


def check_solution(p: Problem, g: Graph, s: Solution) -> bool:
    if s.problem is not p:
        raise SolutionError(f"solution is tagged {s.problem.name}, expected {p.name}")
    s.validate_for(g)
    if p is Problem.MIS:
        chosen = set(s.members)
        if not is_independent(g, chosen):
            return False
        return all(v in chosen or g.adj[v] & chosen for v in range(g.n))
    if p is Problem.MDS:
        chosen = set(s.members)
        if not is_dominating(g, chosen):
            return False
        # Minimal iff every member has a private neighbor in its closed neighborhood.
        return all(not is_dominating(g, chosen - {v}) for v in chosen)
    edges = s.members
    if not is_matching(edges):
        return False
    matched = _matched_vertices(edges)
    return all(u in matched or v in matched for u, v in g.edges)


def is_perfect_matching(g: Graph, m: Iterable[Sequence[int]]) -> bool:
    edges = [canonical_edge(e[0], e[1]) for e in m]
    if not all(g.has_edge(*e) for e in edges):
        raise SolutionError("matching contains a non-edge")
    return is_matching(edges) and len(_matched_vertices(edges)) == g.n


def is_independent_2_dominating(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if not is_independent(g, s):
        return False
    return all(v in s or len(g.adj[v] & s) >= 2 for v in range(g.n))


def greedy_complete(p: Problem, g: Graph, partial: Solution) -> Solution:
    """Complete ``partial`` into a full solution, lowest index first.

    MIS and MM grow the partial set; MDS shrinks a dominating superset.
    """
    if partial.problem is not p:
        raise SolutionError(f"partial solution is tagged {partial.problem.name}, expected {p.name}")
    partial.validate_for(g)
    if p is Problem.MIS:
        chosen = set(partial.members)
        if not is_independent(g, chosen):
            raise SolutionError("partial MIS is not independent")
        for v in range(g.n):
            if v not in chosen and not g.adj[v] & chosen:
                chosen.add(v)
        return Solution.of(p, chosen)
    if p is Problem.MDS:
        chosen = set(partial.members)
        if not is_dominating(g, chosen):
            raise SolutionError("partial MDS is not dominating")
        for v in sorted(chosen):
            if is_dominating(g, chosen - {v}):
                chosen.discard(v)
        return Solution.of(p, chosen)
    edges = list(partial.members)
    if not is_matching(edges):
        raise SolutionError("partial MM is not a matching")
    matched = _matched_vertices(edges)
    for u, v in g.edges:
        if u not in matched and v not in matched:
            edges.append((u, v))
            matched.update((u, v))
    return Solution.of(p, edges)


def parse_solution(p: Problem, text: str) -> Solution:
    """Parse the solution file format.

    MIS/MDS: one line of space-separated vertex ids. MM: one ``u v`` line per edge.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not p.on_edges:
        if len(lines) > 1:
            raise GraphFormatError("vertex solution must be a single line")
        toks = lines[0].split() if lines else []
        if not all(t.isdigit() for t in toks):
            raise GraphFormatError(f"malformed vertex list: {lines[0]!r}")
        if len(set(toks)) != len(toks):
            raise GraphFormatError("duplicate vertex in solution")
        return Solution.of(p, (int(t) for t in toks))
    edges = []
    for ln in lines:
        toks = ln.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise GraphFormatError(f"malformed matching edge: {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return Solution.of(p, edges)


def format_solution(s: Solution) -> str:
    if s.problem.on_edges:
        return "".join(f"{u} {v}\n" for u, v in s.members)
    return " ".join(str(v) for v in s.members) + "\n"

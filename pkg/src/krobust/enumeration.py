"""Exhaustive listing of every MIS, MDS or maximal matching of a small graph."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from krobust.graph import Graph, GraphError, SizeGuardError, is_connected
from krobust.solutions import Problem, Solution, check_solution

MAX_VERTICES = 20
MAX_MATCHING_EDGES = 24


@dataclass(frozen=True)
class SolutionList:
    problem: Problem
    items: tuple[Solution, ...]
    complete: bool = True

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)


def _guard(p: Problem, g: Graph, override_guards: bool) -> None:
    if override_guards:
        return
    if p is Problem.MM and g.m > MAX_MATCHING_EDGES:
        raise SizeGuardError(f"{g.m} edges exceeds the matching enumeration guard of {MAX_MATCHING_EDGES}")
    if p is not Problem.MM and g.n > MAX_VERTICES:
        raise SizeGuardError(f"{g.n} vertices exceeds the enumeration guard of {MAX_VERTICES}")


def enumerate_by_subsets(p: Problem, g: Graph) -> list[Solution]:
    """Reference oracle: filter every vertex or edge subset through ``check_solution``."""
    universe = list(g.edges) if p is Problem.MM else list(range(g.n))
    found = []
    for mask in range(1 << len(universe)):
        s = Solution.of(p, (x for i, x in enumerate(universe) if mask >> i & 1))
        if check_solution(p, g, s):
            found.append(s)
    return sorted(found)


def _mis_backtrack(g: Graph) -> list[tuple[int, ...]]:
    n = g.n
    nb = g.masks
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []

    def doomed(v: int, covered: int) -> bool:
        # Some decided vertex is neither chosen nor blocked, and no later neighbor can block it.
        for u in range(v + 1):
            if not (covered >> u) & 1 and not nb[u] >> (v + 1):
                return True
        return False

    def rec(v: int, chosen: int, blocked: int) -> None:
        if v == n:
            if (chosen | blocked) == full:
                out.append(tuple(i for i in range(n) if chosen >> i & 1))
            return
        if not (blocked >> v) & 1:
            rec(v + 1, chosen | (1 << v), blocked | nb[v])
        if not doomed(v, chosen | blocked):
            rec(v + 1, chosen, blocked)

    rec(0, 0, 0)
    return out


def _mds_backtrack(g: Graph) -> list[tuple[int, ...]]:
    n = g.n
    closed = [g.masks[v] | (1 << v) for v in range(n)]
    # Last vertex index able to dominate v.
    last_dom = [closed[v].bit_length() - 1 for v in range(n)]
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []

    def rec(v: int, chosen: int, dominated: int) -> None:
        if v == n:
            if dominated != full:
                return
            for u in range(n):
                if chosen >> u & 1:
                    rest = 0
                    c = chosen & ~(1 << u)
                    w = c
                    while w:
                        low = w & -w
                        rest |= closed[low.bit_length() - 1]
                        w ^= low
                    if rest == full:
                        return
            out.append(tuple(i for i in range(n) if chosen >> i & 1))
            return
        rec(v + 1, chosen | (1 << v), dominated | closed[v])
        ok = True
        for u in range(n):
            if last_dom[u] == v and not (dominated >> u) & 1:
                ok = False
                break
        if ok:
            rec(v + 1, chosen, dominated)

    rec(0, 0, 0)
    return out


def _mm_backtrack(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    edges = g.edges
    m = len(edges)
    n = g.n
    # Last edge index incident to each vertex.
    last_inc = [-1] * n
    for i, (u, v) in enumerate(edges):
        last_inc[u] = i
        last_inc[v] = i
    out = []

    def rec(i: int, chosen: list, matched: int, pending: list) -> None:
        if i == m:
            for u, v in pending:
                if not (matched >> u) & 1 and not (matched >> v) & 1:
                    return
            out.append(tuple(chosen))
            return
        u, v = edges[i]
        free = not (matched >> u) & 1 and not (matched >> v) & 1
        if free:
            chosen.append((u, v))
            rec(i + 1, chosen, matched | (1 << u) | (1 << v), pending)
            chosen.pop()
            # Excluded free edge must later be blocked at an endpoint.
            if last_inc[u] == i and last_inc[v] == i:
                return
            pending.append((u, v))
            if _pending_ok(i, matched, pending):
                rec(i + 1, chosen, matched, pending)
            pending.pop()
        else:
            rec(i + 1, chosen, matched, pending)

    def _pending_ok(i: int, matched: int, pending: list) -> bool:
        for a, b in pending:
            if (matched >> a) & 1 or (matched >> b) & 1:
                continue
            if last_inc[a] <= i and last_inc[b] <= i:
                return False
        return True

    rec(0, [], 0, [])
    return out


@lru_cache(maxsize=8192)
def _cached(p: Problem, g: Graph) -> tuple[Solution, ...]:
    if p is Problem.MIS:
        raw = _mis_backtrack(g)
    elif p is Problem.MDS:
        raw = _mds_backtrack(g)
    else:
        raw = _mm_backtrack(g)
    return tuple(sorted(Solution(p, members) for members in raw))


def enumerate_solutions(p: Problem, g: Graph, *, override_guards: bool = False) -> SolutionList:
    if not is_connected(g):
        raise GraphError("enumeration is defined on connected graphs")
    _guard(p, g, override_guards)
    return SolutionList(p, _cached(p, g))

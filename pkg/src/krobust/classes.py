"""Membership in the universal and existential robustness classes.

Universal: every solution of the problem is k-robust. Existential: some
solution is. MDS and MM have structural characterizations; MIS does not and
is decided by exhaustive search only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from krobust.enumeration import enumerate_solutions
from krobust.graph import Graph, GraphError, SizeGuardError, bridges, is_connected, vertex_on_cycle
from krobust.robustness import INF, Budget, RobustnessVerdict, check_k_robust
from krobust.solutions import Problem, Solution, greedy_complete

MAX_I2D_VERTICES = 24


class NotCharacterizedError(GraphError):
    """Raised when a structural decision is requested for MIS."""


@dataclass(frozen=True)
class ClassVerdict:
    problem: Problem
    k: Budget
    mode: str
    member: bool
    method: str
    witness: Optional[Solution] = None
    verdict: Optional[RobustnessVerdict] = None


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("class membership is defined on connected graphs")


def is_sputnik(g: Graph) -> bool:
    _require_connected(g)
    degree_one = {v for v in range(g.n) if g.degree(v) == 1}
    return all(
        g.adj[v] & degree_one for v in range(g.n) if vertex_on_cycle(g, v)
    )


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_even_clique(g: Graph) -> bool:
    return g.n >= 2 and g.n % 2 == 0 and g.m == g.n * (g.n - 1) // 2


def is_balanced_complete_bipartite(g: Graph) -> bool:
    """``K_{t,t}`` for some ``t >= 1``, recognized by a 2-coloring and edge count."""
    if g.n < 2 or g.n % 2 or not is_connected(g):
        return False
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                stack.append(w)
            elif color[w] == color[v]:
                return False
    t = g.n // 2
    return color.count(0) == t and g.m == t * t


def is_c4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and all(g.degree(v) == 2 for v in range(4)) and is_connected(g)


def every_maximal_matching_perfect(g: Graph) -> bool:
    """Exhaustive form of the maximal-equals-perfect property."""
    return all(2 * len(s.members) == g.n for s in enumerate_solutions(Problem.MM, g))


def _theorem_member(p: Problem, g: Graph, k: Budget) -> bool:
    if k == 0:
        return True
    if p is Problem.MDS:
        return is_sputnik(g)
    if k == 1:
        return is_tree(g) or is_balanced_complete_bipartite(g) or is_even_clique(g)
    return is_tree(g) or is_c4(g)


def universal_class_check(
    p: Problem, g: Graph, k: Budget, method: str = "bruteforce", *, override_guards: bool = False
) -> ClassVerdict:
    _require_connected(g)
    if method == "theorem":
        if p is Problem.MIS:
            raise NotCharacterizedError("universal MIS robustness is not characterized; use method bruteforce")
        return ClassVerdict(p, k, "universal", _theorem_member(p, g, k), "theorem")
    if method != "bruteforce":
        raise ValueError(f"unknown method {method!r}")
    for s in enumerate_solutions(p, g, override_guards=override_guards):
        verdict = check_k_robust(p, g, s, k, validate=False)
        if not verdict.robust:
            return ClassVerdict(p, k, "universal", False, "bruteforce", s, verdict)
    return ClassVerdict(p, k, "universal", True, "bruteforce")


def existential_search(
    p: Problem, g: Graph, k: Budget, *, override_guards: bool = False
) -> ClassVerdict:
    _require_connected(g)
    for s in enumerate_solutions(p, g, override_guards=override_guards):
        verdict = check_k_robust(p, g, s, k, validate=False)
        if verdict.robust:
            return ClassVerdict(p, k, "existential", True, "bruteforce", s, verdict)
    return ClassVerdict(p, k, "existential", False, "bruteforce")


def all_independent_2_dominating(g: Graph, *, override_guards: bool = False) -> list[tuple[int, ...]]:
    """Every independent set in which each unselected vertex has two selected neighbors."""
    if g.n > MAX_I2D_VERTICES and not override_guards:
        raise SizeGuardError(f"{g.n} vertices exceeds the guard of {MAX_I2D_VERTICES}")
    n = g.n
    nb = g.masks
    out: list[tuple[int, ...]] = []

    def feasible(v: int, chosen: int) -> bool:
        later = ((1 << n) - 1) >> (v + 1) << (v + 1)
        for u in range(v + 1):
            if chosen >> u & 1:
                continue
            have = bin(nb[u] & chosen).count("1")
            if have >= 2:
                continue
            # Later vertices adjacent to something chosen can never be added.
            open_later = 0
            w = nb[u] & later
            while w:
                low = w & -w
                if not nb[low.bit_length() - 1] & chosen:
                    open_later += 1
                w ^= low
            if have + open_later < 2:
                return False
        return True

    def rec(v: int, chosen: int) -> None:
        if v == n:
            out.append(tuple(i for i in range(n) if chosen >> i & 1))
            return
        if not nb[v] & chosen and feasible(v, chosen | (1 << v)):
            rec(v + 1, chosen | (1 << v))
        if feasible(v, chosen):
            rec(v + 1, chosen)

    rec(0, 0)
    return sorted(out)


def find_independent_2_dominating(g: Graph, *, override_guards: bool = False) -> Optional[tuple[int, ...]]:
    found = all_independent_2_dominating(g, override_guards=override_guards)
    return found[0] if found else None


def exists_1_robust_mis_via_equivalence(g: Graph) -> Optional[tuple[int, ...]]:
    """On 2-edge-connected graphs, 1-robust MIS are the independent 2-dominating sets."""
    if not is_connected(g) or bridges(g):
        raise GraphError("the 2-domination equivalence needs a 2-edge-connected graph")
    return find_independent_2_dominating(g)


def min_mis_size(g: Graph, *, override_guards: bool = False) -> int:
    return min(len(s.members) for s in enumerate_solutions(Problem.MIS, g, override_guards=override_guards))


@dataclass(frozen=True)
class MdsBreakWitness:
    """A minimal dominating set that one non-bridge removal leaves incomplete."""

    solution: Solution
    removed: tuple[int, int]
    uncovered: int
    inside_node: bool


def mds_break_witness(g: Graph, u: int) -> MdsBreakWitness:
    """Build a non-1-robust MDS around a cycle vertex ``u`` without antenna.

    With an inside neighbor ``v`` (all of whose neighbors lie in ``N[u]``),
    start from ``V \\ (N[v] - u)`` and break edge ``(u, v)``. Otherwise start
    from ``V \\ (N[u] - a)`` for a cycle neighbor ``a`` and break ``(u, a)``.
    The dominating start set is then shrunk greedily.
    """
    _require_connected(g)
    if not vertex_on_cycle(g, u):
        raise GraphError(f"vertex {u} is not on a cycle")
    if any(g.degree(w) == 1 for w in g.adj[u]):
        raise GraphError(f"vertex {u} has an antenna")
    closed_u = g.closed_neighborhood(u)
    everything = set(range(g.n))
    inside = [w for w in sorted(g.adj[u]) if g.closed_neighborhood(w) <= closed_u]
    if inside:
        v = inside[0]
        start = everything - (g.closed_neighborhood(v) - {u})
        edge, uncovered = (u, v), v
    else:
        cut = set(bridges(g))
        a = min(w for w in g.adj[u] if (min(u, w), max(u, w)) not in cut)
        start = everything - (closed_u - {a})
        edge, uncovered = (u, a), u
    s = greedy_complete(Problem.MDS, g, Solution.of(Problem.MDS, start))
    return MdsBreakWitness(s, (min(edge), max(edge)), uncovered, bool(inside))


def classify(
    p: Problem,
    g: Graph,
    k: Budget,
    mode: str,
    method: str = "bruteforce",
    *,
    override_guards: bool = False,
) -> ClassVerdict:
    if mode == "universal":
        return universal_class_check(p, g, k, method, override_guards=override_guards)
    if mode == "existential":
        if method != "bruteforce":
            raise NotCharacterizedError("existential classes are decided by exhaustive search only")
        return existential_search(p, g, k, override_guards=override_guards)
    raise ValueError(f"unknown mode {mode!r}")


__all__ = [
    "ClassVerdict",
    "INF",
    "MdsBreakWitness",
    "NotCharacterizedError",
    "all_independent_2_dominating",
    "classify",
    "every_maximal_matching_perfect",
    "exists_1_robust_mis_via_equivalence",
    "existential_search",
    "find_independent_2_dominating",
    "is_balanced_complete_bipartite",
    "is_c4",
    "is_even_clique",
    "is_sputnik",
    "is_tree",
    "mds_break_witness",
    "min_mis_size",
    "universal_class_check",
]

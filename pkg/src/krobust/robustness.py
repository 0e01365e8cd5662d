"""Decide whether a solution survives every connectivity-preserving removal of
at most ``k`` edges."""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from typing import Iterator, Union

from krobust import _kernels
from krobust.graph import Edge, Graph, GraphError, is_connected
from krobust.solutions import Problem, Solution, SolutionError, check_solution

Budget = Union[int, float]
INF: float = math.inf


def parse_budget(text: str) -> Budget:
    if text.lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        k = int(text)
    except ValueError:
        raise ValueError(f"budget must be a nonnegative integer or 'inf', got {text!r}") from None
    if k < 0:
        raise ValueError(f"budget must be nonnegative, got {k}")
    return k


def format_budget(k: Budget) -> str:
    return "inf" if k == INF else str(int(k))


def clamp_budget(k: Budget, m: int) -> int:
    """Infinite (or oversized) budgets are identical to removing up to ``m`` edges."""
    if k < 0:
        raise ValueError(f"budget must be nonnegative, got {k}")
    return m if k >= m else int(k)


@dataclass(frozen=True)
class RobustnessVerdict:
    robust: bool
    k: Budget
    removal: tuple[Edge, ...] | None = None
    witness: int | Edge | None = None

    def render(self) -> str:
        if self.robust:
            return "ROBUST\n"
        removed = " ".join(f"({u},{v})" for u, v in self.removal)
        if isinstance(self.witness, tuple):
            w = f"({self.witness[0]},{self.witness[1]})"
        else:
            w = str(self.witness)
        return f"NOT-ROBUST\nREMOVE: {removed}\nWITNESS: {w}\n"


# Evaluations are appended here while a ``recording()`` block is active.
_recorders: list[list] = []


@contextlib.contextmanager
def recording() -> Iterator[list]:
    """Collect ``(problem, graph, solution, k, filtered, verdict)`` for every
    robustness check run inside the block."""
    log: list = []
    _recorders.append(log)
    try:
        yield log
    finally:
        _recorders.remove(log)


def _sweep_args(p: Problem, g: Graph, s: Solution) -> tuple[int, int]:
    if p is Problem.MM:
        payload = 0
        for e in s.members:
            payload |= 1 << g.edge_index(e)
        return _kernels.MATCHING, payload
    # Independence survives edge removal, and a minimal dominating set that
    # still dominates stays minimal, so both reduce to a domination test.
    return _kernels.DOMINATION, s.vertex_mask()


def check_k_robust(
    p: Problem,
    g: Graph,
    s: Solution,
    k: Budget,
    *,
    filtered: bool = True,
    validate: bool = True,
    backend: str | None = None,
) -> RobustnessVerdict:
    """Check ``s`` against every removal of at most ``k`` edges.

    Removal sets are tried by increasing size and lexicographically within a
    size, so a reported counterexample is the least minimum-size one. With
    ``filtered=False`` disconnecting removals are not skipped, which is only
    meaningful for comparing against the unfiltered definition.
    """
    if validate:
        if not is_connected(g):
            raise GraphError("robustness is defined on connected graphs")
        if not check_solution(p, g, s):
            raise SolutionError(f"not a valid {p.name} of the graph: {list(s.members)}")
    kind, payload = _sweep_args(p, g, s)
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    found = _kernels.removal_sweep(
        g.n, list(g.masks), eu, ev, kind, payload, clamp_budget(k, g.m), filtered, backend=backend
    )
    if found is None:
        verdict = RobustnessVerdict(True, k)
    else:
        mask, w = found
        removal = tuple(g.edges[i] for i in range(g.m) if mask >> i & 1)
        witness = g.edges[w] if p is Problem.MM else w
        verdict = RobustnessVerdict(False, k, removal, witness)
    for log in _recorders:
        log.append((p, g, s, k, filtered, verdict))
    return verdict


def min_break_budget(p: Problem, g: Graph, s: Solution) -> Budget:
    """Smallest ``k`` at which ``s`` stops being ``k``-robust, or ``INF``."""
    verdict = check_k_robust(p, g, s, INF)
    if verdict.robust:
        return INF
    return len(verdict.removal)

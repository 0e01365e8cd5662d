"""Exhaustive cross-validation sweeps, one per acceptance criterion.

Each ``check_*`` function returns a :class:`CriterionResult`. ``run_all``
executes criteria 1-9 while recording every robustness evaluation, then
audits that log for monotonicity in ``k`` and for the connectivity shortcut
(criterion 10).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

from krobust import classes, constructions
from krobust.classes import (
    all_independent_2_dominating,
    existential_search,
    is_sputnik,
    min_mis_size,
    universal_class_check,
)
from krobust.enumeration import enumerate_solutions
from krobust.graph import Graph, bridges, is_connected, is_t_edge_connected
from krobust.robustness import INF, check_k_robust, clamp_budget, recording
from krobust.solutions import Problem, Solution

MIS, MDS, MM = Problem.MIS, Problem.MDS, Problem.MM


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Every connected labeled graph on ``min_n..max_n`` vertices, by adjacency mask."""
    for n in range(min_n, max_n + 1):
        npairs = n * (n - 1) // 2
        for mask in range(1 << npairs):
            g = Graph.from_mask(n, mask)
            if is_connected(g):
                yield g


@lru_cache(maxsize=8)
def _universe(max_n: int) -> tuple[Graph, ...]:
    return tuple(connected_graphs(max_n))


def _timed(number: int, name: str, body: Callable[[], tuple[bool, str, list]]) -> CriterionResult:
    start = time.perf_counter()
    passed, detail, failures = body()
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start, failures)


def check_matching_regression() -> CriterionResult:
    def body():
        bad = []
        c6 = constructions.cycle(6)
        perfect = Solution.of(MM, [(0, 1), (2, 3), (4, 5)])
        if not check_k_robust(MM, c6, perfect, 1).robust:
            bad.append("C6 perfect matching not 1-robust")
        partial = Solution.of(MM, [(0, 1), (3, 4)])
        v = check_k_robust(MM, c6, partial, 1)
        if v.robust or v.removal != ((0, 1),):
            bad.append(f"C6 {{(0,1),(3,4)}} verdict {v}")
        k33 = constructions.complete_bipartite(3, 3)
        for s in enumerate_solutions(MM, k33):
            if not check_k_robust(MM, k33, s, 1).robust:
                bad.append(f"K33 {s.members} not 1-robust")
            if check_k_robust(MM, k33, s, 2).robust:
                bad.append(f"K33 {s.members} is 2-robust")
        k3 = constructions.clique(3)
        for s in enumerate_solutions(MM, k3):
            if check_k_robust(MM, k3, s, 1).robust:
                bad.append(f"K3 {s.members} is 1-robust")
        return not bad, "C6, K33, K3 matching verdicts" if not bad else "; ".join(bad), bad

    result = _timed(1, "matching regression on C6, K33, K3", body)
    if result.seconds >= 1.0:
        result.passed = False
        result.detail += " (runtime limit 1s exceeded)"
    return result


def _class_sweep(number, name, problem, budgets, predicate, max_n) -> CriterionResult:
    def body():
        bad = []
        count = 0
        for g in _universe(max_n):
            expected = predicate(g)
            for k in budgets:
                count += 1
                got = universal_class_check(problem, g, k).member
                if got != expected:
                    bad.append((g, k, got))
        detail = f"{count} (graph, k) pairs over {len(_universe(max_n))} graphs, {len(bad)} disagreements"
        return not bad, detail, bad

    return _timed(number, name, body)


def check_mds_class_sweep(max_n: int = 6) -> CriterionResult:
    return _class_sweep(2, "MDS universal class = sputnik graphs", MDS, (1, 2, INF), is_sputnik, max_n)


def _mm_single_removal_predicate(g: Graph) -> bool:
    return classes.is_tree(g) or classes.is_balanced_complete_bipartite(g) or classes.is_even_clique(g)


def check_mm_single_removal_sweep(max_n: int = 6) -> CriterionResult:
    return _class_sweep(3, "MM universal class, k=1", MM, (1,), _mm_single_removal_predicate, max_n)


def check_mm_multi_removal_sweep(max_n: int = 6) -> CriterionResult:
    return _class_sweep(
        4, "MM universal class, k>=2", MM, (2, 3, INF),
        lambda g: classes.is_tree(g) or classes.is_c4(g), max_n,
    )


def check_hierarchy_witnesses(ks=(1, 2, 3)) -> CriterionResult:
    def body():
        bad = []
        for k in ks:
            w = constructions.gk_witness(k)
            g = w.graph
            expected = sorted([
                Solution.of(MIS, w.A),
                Solution.of(MIS, (w.v, *w.B)),
                Solution.of(MIS, (w.v, *w.A[1:])),
            ])
            got = list(enumerate_solutions(MIS, g))
            if got != expected:
                bad.append(f"k={k}: MIS list {[s.members for s in got]}")
                continue
            if not all(check_k_robust(MIS, g, s, k).robust for s in got):
                bad.append(f"k={k}: some MIS not {k}-robust")
            if not universal_class_check(MIS, g, k).member:
                bad.append(f"k={k}: not in U^{k}")
            upper = universal_class_check(MIS, g, k + 1)
            if upper.member:
                bad.append(f"k={k}: in U^{k + 1}")
                continue
            removal, b = upper.verdict.removal, upper.verdict.witness
            shape_ok = (
                upper.witness == Solution.of(MIS, (w.v, *w.A[1:]))
                and len(removal) == k + 1
                and b in w.B
                and sorted(removal) == sorted((a, b) for a in w.A[1:])
            )
            if not shape_ok:
                bad.append(f"k={k}: counterexample {upper.witness.members} {removal} -> {b}")
        return not bad, f"G_k for k in {list(ks)}" if not bad else "; ".join(bad), bad

    result = _timed(5, "MIS hierarchy witness G_k", body)
    if result.seconds >= 60.0:
        result.passed = False
        result.detail += " (runtime limit 60s exceeded)"
    return result


def check_two_domination_equivalence(max_n: int = 6) -> CriterionResult:
    def body():
        bad = []
        count = 0
        for g in _universe(max_n):
            if g.n < 2 or bridges(g):
                continue
            count += 1
            robust = [
                s.members for s in enumerate_solutions(MIS, g)
                if check_k_robust(MIS, g, s, 1, validate=False).robust
            ]
            if robust != all_independent_2_dominating(g):
                bad.append(g)
        return not bad, f"{count} 2-edge-connected graphs, {len(bad)} disagreements", bad

    return _timed(6, "1-robust MIS = independent 2-dominating sets", body)


def _replicate(members, n: int, copies: int) -> tuple[int, ...]:
    return tuple(sorted(v + x * n for x in range(copies) for v in members))


def check_blowup(copies: int = 2) -> CriterionResult:
    def body():
        bad = []
        fixtures = {
            "C4": constructions.cycle(4),
            "C5": constructions.cycle(5),
            "K4": constructions.clique(4),
            "C6": constructions.cycle(6),
            "P4": constructions.path(4),
        }
        budget = 2 * copies - 1
        rows = []
        for name, g in fixtures.items():
            big = constructions.k_copies_blowup(g, copies)
            base = existential_search(MIS, g, 1).member
            blown = existential_search(MIS, big, budget).member
            rows.append(f"{name}:{int(base)}{int(blown)}")
            if base != blown:
                bad.append(f"{name}: E^1={base} but blowup E^{budget}={blown}")
            replicated = sorted(_replicate(s.members, g.n, copies) for s in enumerate_solutions(MIS, g))
            got = [s.members for s in enumerate_solutions(MIS, big)]
            if got != replicated:
                bad.append(f"{name}: blowup MIS are not the replicated MIS")
        return not bad, " ".join(rows) if not bad else "; ".join(bad), bad

    result = _timed(7, "k-copy blowup transports robust MIS existence", body)
    if result.seconds >= 300.0:
        result.passed = False
        result.detail += " (runtime limit 300s exceeded)"
    return result


def check_universal_vertex(max_n: int = 6) -> CriterionResult:
    def body():
        bad = []
        count = 0
        for g in _universe(max_n):
            if g.m < 1:
                continue
            count += 1
            h = constructions.add_universal_vertex(g)
            base = classes.find_independent_2_dominating(g) is not None
            lifted = classes.find_independent_2_dominating(h) is not None
            if base != lifted or not is_t_edge_connected(h, 2):
                bad.append(g)
        return not bad, f"{count} graphs, {len(bad)} disagreements", bad

    return _timed(8, "universal vertex preserves independent 2-domination", body)


def _join_pool() -> dict[str, Graph]:
    return {
        "C4": constructions.cycle(4),
        "C5": constructions.cycle(5),
        "K4": constructions.clique(4),
        "P4": constructions.path(4),
        "P5": constructions.path(5),
        "P7": constructions.path(7),
        "K23": constructions.complete_bipartite(2, 3),
        "K33": constructions.complete_bipartite(3, 3),
        "K34": constructions.complete_bipartite(3, 4),
        "K35": constructions.complete_bipartite(3, 5),
        "K44": constructions.complete_bipartite(4, 4),
        "G1": constructions.gk_witness(1).graph,
        "G2": constructions.gk_witness(2).graph,
    }


def _join_structure_ok(g: Graph, h: Graph, j: Graph) -> bool:
    expected = sorted(
        [s.members for s in enumerate_solutions(MIS, g)]
        + [tuple(v + g.n for v in s.members) for s in enumerate_solutions(MIS, h)]
    )
    return [s.members for s in enumerate_solutions(MIS, j)] == expected


def _sample_pairs(names: list[str], count: int, seed: int) -> list[tuple[str, str]]:
    pairs = list(product(names, repeat=2))
    return sorted(random.Random(seed).sample(pairs, min(count, len(pairs))))


def _connectivity_free(g: Graph, k: int) -> bool:
    """Every MIS survives any ``k`` removals, disconnecting ones included."""
    return all(
        check_k_robust(MIS, g, s, k, filtered=False, validate=False).robust
        for s in enumerate_solutions(MIS, g)
    )


def check_join_stability(ks=(1, 2), min_stable: int = 10, min_breaking: int = 5, seed: int = 0) -> CriterionResult:
    """Join checks on pairs sampled from a fixed pool of small graphs.

    The stability half is sampled from every pool graph meeting the
    hypotheses, including trees and the G_k witnesses.
    """

    def body():
        bad = []
        notes = []
        pool = _join_pool()
        for k in ks:
            stable = [
                name for name, g in pool.items()
                if min_mis_size(g) >= k + 1 and universal_class_check(MIS, g, k).member
            ]
            pairs = _sample_pairs(stable, max(min_stable, 12), seed + k)
            broken = []
            for a, b in pairs:
                g, h = pool[a], pool[b]
                j = constructions.join(g, h)
                if not _join_structure_ok(g, h, j):
                    bad.append(f"k={k}: MIS of join({a},{b}) is not the union")
                if min_mis_size(j) < k + 1:
                    broken.append(f"join({a},{b}) min MIS < {k + 1}")
                    continue
                verdict = universal_class_check(MIS, j, k)
                if not verdict.member:
                    broken.append(
                        f"join({a},{b}) MIS {list(verdict.witness.members)} breaks at "
                        f"{list(verdict.verdict.removal)}"
                    )
            breaking = [name for name, g in pool.items() if not universal_class_check(MIS, g, k + 1).member]
            bpairs = [(a, b) for a, b in _sample_pairs(list(pool), 4 * max(min_breaking, 6), seed + 10 + k)
                      if a in breaking][: max(min_breaking, 6)]
            for a, b in bpairs:
                g, h = pool[a], pool[b]
                j = constructions.join(g, h)
                if not _join_structure_ok(g, h, j):
                    bad.append(f"k={k}: MIS of join({a},{b}) is not the union")
                if universal_class_check(MIS, j, k + 1).member:
                    bad.append(f"k={k}: join({a},{b}) entered U^{k + 1}")
            if len(pairs) < min_stable or len(bpairs) < min_breaking:
                bad.append(f"k={k}: only {len(pairs)} stable and {len(bpairs)} breaking pairs")
            if broken:
                bad.append(f"k={k}: e.g. {broken[0]}")
            notes.append(
                f"k={k}: {len(pairs) - len(broken)}/{len(pairs)} joins of members stayed in U^{k}, "
                f"{len(bpairs)} joins of non-members stayed out of U^{k + 1}"
            )
        return not bad, "; ".join(notes + bad), bad

    return _timed(9, "join stability of U^k_MIS with min MIS size k+1", body)


def check_join_stability_connectivity_free(ks=(1, 2), seed: int = 0) -> CriterionResult:
    """Join stability restricted to graphs whose MIS never rely on disconnection."""

    def body():
        bad = []
        notes = []
        pool = _join_pool()
        for k in ks:
            names = [n for n, g in pool.items() if min_mis_size(g) >= k + 1 and _connectivity_free(g, k)]
            pairs = _sample_pairs(names, 12, seed + k)
            for a, b in pairs:
                j = constructions.join(pool[a], pool[b])
                if min_mis_size(j) < k + 1 or not universal_class_check(MIS, j, k).member:
                    bad.append(f"k={k}: join({a},{b})")
            notes.append(f"k={k}: {len(pairs)} pairs from {names}")
        return not bad, "; ".join(notes + bad), bad

    return _timed(9, "join stability, connectivity-free members", body)


def check_properties(log: list) -> CriterionResult:
    """Audit recorded evaluations: monotone in ``k`` and connectivity shortcut."""

    def body():
        bad = []
        seen = set()
        audited = shortcut = 0
        tconn_cache: dict = {}
        for p, g, s, k, filtered, verdict in list(log):
            if not filtered:
                continue
            kk = clamp_budget(k, g.m)
            key = (p, g, s, kk)
            if key in seen:
                continue
            seen.add(key)
            audited += 1
            if verdict.robust:
                if kk >= 1 and not check_k_robust(p, g, s, kk - 1, validate=False).robust:
                    bad.append(("monotone", p, g, s, k))
            elif kk < g.m and check_k_robust(p, g, s, kk + 1, validate=False).robust:
                bad.append(("monotone", p, g, s, k))
            if kk >= 1 and g.n >= 2:
                tkey = (g, kk + 1)
                if tkey not in tconn_cache:
                    tconn_cache[tkey] = is_t_edge_connected(g, kk + 1, override_guards=True)
                if tconn_cache[tkey]:
                    shortcut += 1
                    raw = check_k_robust(p, g, s, kk, filtered=False, validate=False)
                    if (raw.robust, raw.removal, raw.witness) != (verdict.robust, verdict.removal, verdict.witness):
                        bad.append(("shortcut", p, g, s, k))
        detail = f"{audited} distinct evaluations audited, {shortcut} on (k+1)-edge-connected graphs, {len(bad)} violations"
        return not bad, detail, bad

    return _timed(10, "monotonicity in k and connectivity shortcut", body)


def run_all(max_n: int = 6, progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    checks = [
        check_matching_regression,
        lambda: check_mds_class_sweep(max_n),
        lambda: check_mm_single_removal_sweep(max_n),
        lambda: check_mm_multi_removal_sweep(max_n),
        check_hierarchy_witnesses,
        lambda: check_two_domination_equivalence(max_n),
        check_blowup,
        lambda: check_universal_vertex(max_n),
        check_join_stability,
    ]
    results = []
    with recording() as log:
        for check in checks:
            r = check()
            results.append(r)
            if progress:
                progress(r)
    r = check_properties(log)
    results.append(r)
    if progress:
        progress(r)
    return results


__all__ = [
    "CriterionResult",
    "check_matching_regression",
    "check_mm_single_removal_sweep",
    "check_mm_multi_removal_sweep",
    "check_universal_vertex",
    "check_two_domination_equivalence",
    "check_blowup",
    "check_properties",
    "check_mds_class_sweep",
    "check_hierarchy_witnesses",
    "check_join_stability_connectivity_free",
    "check_join_stability",
    "connected_graphs",
    "run_all",
]

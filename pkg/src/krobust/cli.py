"""Command-line interface.

Exit status: 0 for a positive decision or a successful emission, 1 for a
negative decision, 2 for usage, I/O or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from krobust import classes, constructions, sweeps
from krobust.enumeration import enumerate_solutions
from krobust.graph import Graph, GraphError, format_graph, parse_graph
from krobust.robustness import check_k_robust, format_budget, parse_budget
from krobust.solutions import Problem, check_solution, format_solution, parse_solution

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise CliError(f"{path} is not ASCII text") from exc


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CliError(f"expected an integer, got {text!r}") from None


def _members(s) -> str:
    return format_solution(s).strip().replace("\n", ", ")


def cmd_generate(args, out) -> int:
    params = tuple(_int(p) for p in args.params)
    g = constructions.gen_family(constructions.FamilySpec(args.family, params))
    out.write(format_graph(g))
    return EXIT_YES


def cmd_construct(args, out) -> int:
    name, rest = args.name, args.args
    want = {"gk": 1, "universal": 1, "sputnik": 1, "blowup": 2, "join": 2}
    if name not in want:
        raise CliError(f"unknown construction {name!r}; expected one of {', '.join(want)}")
    if len(rest) != want[name]:
        raise CliError(f"construct {name} takes {want[name]} argument(s)")
    comments: list[str] = []
    if name == "gk":
        w = constructions.gk_witness(_int(rest[0]))
        g, comments = w.graph, [w.comment()]
    elif name == "universal":
        g = constructions.add_universal_vertex(_graph(rest[0]))
    elif name == "sputnik":
        g = constructions.sputnikify(_graph(rest[0]))
    elif name == "blowup":
        g = constructions.k_copies_blowup(_graph(rest[0]), _int(rest[1]))
    else:
        g = constructions.join(_graph(rest[0]), _graph(rest[1]))
    out.write(format_graph(g, comments))
    return EXIT_YES


def cmd_verify(args, out) -> int:
    g = _graph(args.graph)
    s = parse_solution(args.problem, _read(args.solution))
    ok = check_solution(args.problem, g, s)
    out.write("VALID\n" if ok else "INVALID\n")
    return EXIT_YES if ok else EXIT_NO


def cmd_robust(args, out) -> int:
    g = _graph(args.graph)
    s = parse_solution(args.problem, _read(args.solution))
    verdict = check_k_robust(args.problem, g, s, args.k)
    out.write(verdict.render())
    return EXIT_YES if verdict.robust else EXIT_NO


def cmd_classify(args, out) -> int:
    g = _graph(args.graph)
    verdict = classes.classify(
        args.problem, g, args.k, args.mode, args.method, override_guards=args.override_guards
    )
    out.write("MEMBER\n" if verdict.member else "NON-MEMBER\n")
    method = verdict.method
    if args.problem is Problem.MIS and args.mode == "universal":
        method = "oracle (no known characterization)"
    out.write(f"METHOD: {method}\n")
    if verdict.witness is not None:
        out.write(f"SOLUTION: {_members(verdict.witness)}\n")
        if not verdict.verdict.robust:
            out.write(verdict.verdict.render())
    return EXIT_YES if verdict.member else EXIT_NO


def cmd_find(args, out) -> int:
    g = _graph(args.graph)
    if args.independent_2_dominating:
        found = classes.find_independent_2_dominating(g, override_guards=args.override_guards)
        if found is None:
            out.write("NONE\n")
            return EXIT_NO
        out.write(" ".join(map(str, found)) + "\n")
        return EXIT_YES
    if args.problem is None:
        raise CliError("find needs --problem or --independent-2-dominating")
    verdict = classes.existential_search(args.problem, g, args.k, override_guards=args.override_guards)
    if not verdict.member:
        out.write("NONE\n")
        return EXIT_NO
    out.write(format_solution(verdict.witness))
    return EXIT_YES


def cmd_enumerate(args, out) -> int:
    g = _graph(args.graph)
    for s in enumerate_solutions(args.problem, g, override_guards=args.override_guards):
        out.write(_members(s) + "\n")
    return EXIT_YES


def cmd_sweep(args, out) -> int:
    def report(r):
        out.write(r.line() + "\n")
        out.flush()

    results = sweeps.run_all(args.max_n, progress=report)
    extra = sweeps.check_join_stability_connectivity_free()
    out.write(f"[{'PASS' if extra.passed else 'FAIL'}] supplementary {extra.name}: {extra.detail}\n")
    passed = sum(r.passed for r in results)
    out.write(f"{passed}/{len(results)} criteria passed\n")
    return EXIT_YES if passed == len(results) else EXIT_NO


def _problem(text: str) -> Problem:
    try:
        return Problem.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _budget(text: str):
    try:
        return parse_budget(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krobust",
        description="k-robust maximal independent sets, minimal dominating sets and maximal matchings.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="emit a standard graph family as an edge list")
    p.add_argument("family", choices=constructions.FAMILIES)
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("construct", help="emit a witness or reduction construction")
    p.add_argument("name", help="gk K | universal FILE | sputnik FILE | blowup FILE K | join FILE FILE")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_construct)

    def graph_args(p, solution=False, k=False, problem_required=True):
        p.add_argument("--problem", type=_problem, required=problem_required, metavar="{mis,mds,mm}")
        p.add_argument("--graph", required=True, metavar="FILE")
        if solution:
            p.add_argument("--solution", required=True, metavar="FILE")
        if k:
            p.add_argument("--k", type=_budget, required=True, metavar="{N,inf}")

    p = sub.add_parser("verify", help="check that a solution is valid")
    graph_args(p, solution=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("robust", help="check that a solution is k-robust")
    graph_args(p, solution=True, k=True)
    p.set_defaults(func=cmd_robust)

    p = sub.add_parser("classify", help="decide universal or existential class membership")
    graph_args(p, k=True)
    p.add_argument("--mode", choices=("universal", "existential"), default="universal")
    p.add_argument("--method", choices=("theorem", "bruteforce"), default="bruteforce")
    p.add_argument("--override-guards", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("find", help="output a k-robust solution if one exists")
    p.add_argument("--problem", type=_problem, metavar="{mis,mds,mm}")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--k", type=_budget, default=1, metavar="{N,inf}")
    p.add_argument("--independent-2-dominating", action="store_true",
                   help="search for an independent 2-dominating set instead")
    p.add_argument("--override-guards", action="store_true")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("enumerate", help="list every solution, one per line")
    graph_args(p)
    p.add_argument("--override-guards", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="run the theorem cross-validation sweeps")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except (CliError, GraphError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

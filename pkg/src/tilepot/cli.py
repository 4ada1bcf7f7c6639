"""Command-line entry point.

Exit codes: 0 success/PASS, 1 FAIL or value mismatch, 2 usage or input
error, 3 indeterminate (work budget exhausted before a verdict).
"""

from __future__ import annotations

import argparse
import sys

from .assembly import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RealizationWitness,
    enumerate_at_order,
    verify_scenario,
)
from .matrix import build_matrix, min_order
from .multigraph import (
    GraphFormatError,
    Multigraph,
    cycle,
    parse_graph,
    render_graph,
    wheel,
    wheel_structure,
)
from .search import MinimaResult, PruneFlags, SearchSpec, search_minima
from .tiles import (
    Pot,
    PotFormatError,
    cycle_pot_s3,
    parse_pot,
    render_pot,
    wheel_pot_s12,
    wheel_pot_s3,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3

_GENERATORS = {
    "wheel-s12": (wheel_pot_s12, "two tiles, one bond type; smallest complex W_n"),
    "wheel-s3": (wheel_pot_s3, "only complex at its order is W_n"),
    "cycle-s3": (cycle_pot_s3, "only complex at its order is C_n"),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_pot(path: str) -> Pot:
    return parse_pot(_read_text(path))


def _load_target(spec: str) -> Multigraph:
    if spec.startswith("wheel:"):
        return wheel(int(spec[6:]))
    if spec.startswith("cycle:"):
        return cycle(int(spec[6:]))
    return parse_graph(_read_text(spec))


def _print_witness(w: RealizationWitness, graph: Multigraph) -> None:
    for v, t in enumerate(w.tile_of):
        print(f"tile {v}: t{t + 1}")
    for (u, v), (bond, tail, head) in zip(graph.edges, w.edges):
        print(f"edge {u} {v}: a{bond} {tail}>{head}")


def _cmd_gen_pot(args) -> int:
    name, _, num = args.family.partition(":")
    if name not in _GENERATORS or not num.isdigit():
        print(
            f"unknown family {args.family!r}; expected "
            + "|".join(f"{k}:N" for k in _GENERATORS),
            file=sys.stderr,
        )
        return EXIT_USAGE
    sys.stdout.write(render_pot(_GENERATORS[name][0](int(num))))
    return EXIT_OK


def _cmd_matrix(args) -> int:
    m = build_matrix(_load_pot(args.pot))
    for row in m.z:
        print(" ".join(str(x) for x in row) + " | 0")
    print(" ".join("1" for _ in range(m.tile_count)) + " | 1")
    return EXIT_OK


def _cmd_min_order(args) -> int:
    res = min_order(_load_pot(args.pot), cap=args.cap)
    if res.status == "realizable":
        print(f"m_P={res.order}")
        print("witness: " + " ".join(str(c) for c in res.witness))
        return EXIT_OK
    if res.status == "unrealizable":
        print("unrealizable")
        return EXIT_OK
    print(f"unknown>{res.cap}")
    return EXIT_INDETERMINATE


def _cmd_enumerate(args) -> int:
    pot = _load_pot(args.pot)
    try:
        rs = enumerate_at_order(pot, args.order, args.budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    print(f"classes={rs.class_count}")
    for i, g in enumerate(rs.graphs, 1):
        print(f"# class {i}")
        sys.stdout.write(render_graph(g))
    return EXIT_OK


def _cmd_verify(args) -> int:
    pot = _load_pot(args.pot)
    target = _load_target(args.target)
    report = verify_scenario(pot, target, args.scenario, args.budget)
    if report.verdict == "pass":
        print("PASS")
        print(f"detail: {report.detail}")
        if report.witness is not None:
            _print_witness(report.witness, target)
        return EXIT_OK
    if report.verdict == "fail":
        print("FAIL")
        print(f"detail: {report.detail}")
        if report.counterexample is not None:
            print("counterexample:")
            sys.stdout.write(render_graph(report.counterexample))
        return EXIT_FAIL
    print("INDETERMINATE")
    print(f"detail: {report.detail}")
    return EXIT_INDETERMINATE


def _fmt_minima(label: str, r: MinimaResult) -> str:
    return (
        f"{label} B={r.bonds} T={r.tiles} "
        f"exhaustive={'yes' if r.exhaustive else 'no'}"
    )


def _cmd_search_min(args) -> int:
    target = _load_target(args.target)
    prune = PruneFlags.none()
    if not args.no_prune and args.scenario == 3 and wheel_structure(target) is not None:
        prune = PruneFlags.wheel_lemmas()
    spec = SearchSpec(
        target,
        args.scenario,
        max_bonds=args.max_bonds,
        max_tiles=args.max_tiles,
        prune=prune,
    )
    try:
        pair = search_minima(spec, enum_budget=args.budget)
    except ValueError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(_fmt_minima("bond-first", pair.bond_first))
    sys.stdout.write(render_pot(pair.bond_first.witness))
    print(_fmt_minima("tile-first", pair.tile_first))
    sys.stdout.write(render_pot(pair.tile_first.witness))
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    worst = EXIT_OK

    def cell(value: int, annotation: str) -> str:
        return f"{value}:{annotation}"

    print("n\tB1\tT1\tB2\tT2\tB3\tT3")
    for n in range(args.min, args.max + 1):
        g = wheel(n)
        p12 = wheel_pot_s12(n)
        p3 = wheel_pot_s3(n)
        row: list[str] = [str(n)]
        rep12 = verify_scenario(p12, g, 2, args.budget)
        rep3 = verify_scenario(p3, g, 3, args.budget)

        searched: dict[int, object] = {}
        for s in (1, 2):
            searched[s] = search_minima(SearchSpec(g, s), enum_budget=args.budget)
        if n <= 6:
            searched[3] = search_minima(SearchSpec(g, 3), enum_budget=args.budget)
            lemma3 = False
        elif n <= 8:
            searched[3] = search_minima(
                SearchSpec(g, 3, prune=PruneFlags.wheel_lemmas()),
                enum_budget=args.budget,
            )
            lemma3 = True
        else:
            searched[3] = None
            lemma3 = False

        for s, rep, pot in ((1, rep12, p12), (2, rep12, p12), (3, rep3, p3)):
            formula_b, formula_t = pot.bond_count, pot.tile_count
            pair = searched[s]
            for formula, picked in (
                (formula_b, None if pair is None else pair.bond_first.bonds),
                (formula_t, None if pair is None else pair.tile_first.tiles),
            ):
                if rep.verdict == "fail":
                    row.append(cell(formula, "fail"))
                    worst = EXIT_FAIL
                elif rep.verdict == "indeterminate":
                    row.append(cell(formula, "indeterminate"))
                    worst = max(worst, EXIT_INDETERMINATE)
                elif picked is None:
                    row.append(cell(formula, "formula"))
                elif picked != formula:
                    row.append(f"{formula}!={picked}:mismatch")
                    worst = EXIT_FAIL
                else:
                    row.append(
                        cell(formula, "formula+search-lemma" if s == 3 and lemma3 else "formula+search")
                    )
        print("\t".join(row))
    return worst


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="tilepot",
        description=(
            "Flexible-tile self-assembly toolkit: pots of tiles, construction "
            "matrices, complete-complex enumeration, scenario verification, "
            "and minimality search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-pot", help="print a generated pot")
    p.add_argument(
        "family",
        help="one of " + "|".join(f"{k}:N" for k in _GENERATORS),
    )
    p.set_defaults(fn=_cmd_gen_pot)

    p = sub.add_parser("matrix", help="print the augmented construction matrix")
    p.add_argument("pot", help="pot file, or - for stdin")
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("min-order", help="smallest realizable order of a pot")
    p.add_argument("pot", help="pot file, or - for stdin")
    p.add_argument("--cap", type=int, default=64, help="search ceiling (default 64)")
    p.set_defaults(fn=_cmd_min_order)

    p = sub.add_parser(
        "enumerate", help="isomorphism classes of complete complexes at an order"
    )
    p.add_argument("pot", help="pot file, or - for stdin")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a pot against a target graph")
    p.add_argument("pot", help="pot file, or - for stdin")
    p.add_argument("--target", required=True, help="wheel:N, cycle:N, or graph file")
    p.add_argument("--scenario", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser(
        "search-min", help="minimal bond/tile counts by exhaustive labeling search"
    )
    p.add_argument("--target", required=True, help="wheel:N, cycle:N, or graph file")
    p.add_argument("--scenario", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--max-bonds", type=int, default=None)
    p.add_argument("--max-tiles", type=int, default=None)
    p.add_argument(
        "--no-prune",
        action="store_true",
        help="disable lemma-based cuts (they are on by default for scenario-3 wheels)",
    )
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_search_min)

    p = sub.add_parser(
        "reproduce", help="regenerate the wheel minima table and cross-check it"
    )
    p.add_argument("--min", type=int, default=4)
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for compatibility; execution is sequential either way",
    )
    p.set_defaults(fn=_cmd_reproduce)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PotFormatError, GraphFormatError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE


if __name__ == "__main__":
    sys.exit(main())

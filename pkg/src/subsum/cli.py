"""Command-line interface: ``subsum {count,build,stats,predict,witness,verify,export}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import export, formulas
from .errors import SubsumError
from .gf import FieldSpec, factor_prime_power
from .graph import MAX_ORDER, SubspaceGraph, build_graph
from .invariants import compute_invariants
from .solvers import Budget
from .subspaces import galois_number, gaussian_binomial
from .verify import parse_grid, verify_grid
from . import witness as W

EX_USAGE = 64
EX_DATAERR = 65
JSON_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _field(q: int) -> FieldSpec:
    factor_prime_power(q)
    return FieldSpec.from_order(q)


def _graph(args) -> SubspaceGraph:
    return build_graph(_field(args.q), args.n, max_order=args.max_order)


def _budget(args) -> Budget:
    ms = args.budget_ms
    if ms is None and os.environ.get("SUBSUM_BUDGET_MS"):
        ms = int(os.environ["SUBSUM_BUDGET_MS"])
    return Budget(nodes=args.budget_nodes, ms=ms)


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "unknown"
    if v == float("inf"):
        return "inf"
    return str(v)


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps({"version": JSON_VERSION, **payload}, indent=1) + "\n")


# -- subcommands -------------------------------------------------------------

def cmd_count(args) -> int:
    _field(args.q)
    if args.k is not None:
        print(gaussian_binomial(args.n, args.k, args.q))
        return 0
    rows = [(f"k={k}", gaussian_binomial(args.n, k, args.q)) for k in range(args.n + 1)]
    rows.append(("total", galois_number(args.n, args.q)))
    if args.n >= 2:
        rows.append(("vertices", galois_number(args.n, args.q) - 2))
    sys.stdout.write(_table(rows))
    return 0


def cmd_build(args) -> int:
    g = _graph(args)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(export.to_json(g))
    rows = [("field", g.field), ("n", g.n), ("order", g.order), ("size", g.size)]
    rows += [(f"dim {k}", len(g.by_dimension(k))) for k in range(1, g.n)]
    sys.stdout.write(_table(rows))
    return 0


STAT_ROWS = [
    ("order", "order"),
    ("size", "size"),
    ("min_degree", "δ"),
    ("max_degree", "Δ"),
    ("is_connected", "connected"),
    ("diameter", "diameter"),
    ("girth", "girth"),
    ("is_eulerian", "Eulerian"),
    ("edge_connectivity", "λ"),
    ("clique_number", "ω"),
    ("chromatic_number", "χ"),
    ("independence_number", "α"),
    ("gamma", "γ"),
    ("gamma_t", "γ_t"),
    ("gamma_c", "γ_c"),
    ("gamma_cl", "γ_cl"),
    ("is_perfect", "perfect"),
    ("is_hamiltonian", "Hamiltonian"),
]


def cmd_stats(args) -> int:
    g = _graph(args)
    report = compute_invariants(g, _budget(args), hamiltonian=not args.no_hamiltonian)
    if args.json:
        _emit_json({"field": g.field.to_json(), "n": g.n, "invariants": report.to_json()})
        return 0
    sys.stdout.write(_table([(label, _fmt(getattr(report, key))) for key, label in STAT_ROWS]))
    return 0


def cmd_predict(args) -> int:
    preds = formulas.all_predictions(args.n, args.q)
    if args.json:
        _emit_json({"n": args.n, "q": args.q, "predictions": [p.to_json() for p in preds]})
        return 0
    sys.stdout.write(_table([(p.name, _fmt(p.value)) for p in preds]))
    return 0


def _pick_vertices(args, g: SubspaceGraph, count: int) -> list[int]:
    if args.vertices:
        vs = [int(x) for x in args.vertices.split(",")]
        if len(vs) != count or any(not 0 <= v < g.order for v in vs):
            raise UsageError(f"--vertices needs {count} indices in [0, {g.order})")
        return vs
    if count == 1:
        return [0]
    pair = W.first_nonadjacent_pair(g)
    if pair is None:
        raise UsageError("the graph is complete; there is no non-adjacent pair")
    return list(pair)


def cmd_witness(args) -> int:
    g = _graph(args)
    t = args.theorem
    if t == "clique":
        w = W.hyperplane_clique(g, strict=False)
    elif t == "coloring":
        w = W.hyperplane_coloring(g, strict=False)
    elif t == "domination":
        w = W.standard_dominating_set(g, strict=False)
    elif t == "indep-odd":
        w = W.independent_set_odd(g, strict=False)
    elif t == "indep-even":
        w = W.independent_set_even(g, anchor=args.anchor, strict=False)
    elif t == "triangle":
        w = W.triangle_through(g, *_pick_vertices(args, g, 1), strict=False)
    elif t == "common-neighbor":
        w = W.common_neighbor(g, *_pick_vertices(args, g, 2), strict=False)
    else:
        w = W.paper_c5(g, strict=False)
    if args.json:
        _emit_json({"theorem": t, "n": g.n, "q": g.field.q, "verdict": "VERIFIED" if w.ok else "REFUTED", "witness": w.to_json(g)})
        return 0
    rows: list[tuple[str, object]] = [("theorem", t), ("size", len(w.vertices))]
    shown = w.vertices if len(w.vertices) <= 40 else w.vertices[:40] + ["..."]
    rows.append(("vertices", " ".join(g.label(v) if isinstance(v, int) else v for v in shown)))
    for key, ok in w.checks.items():
        rows.append((f"check {key}", _fmt(ok)))
    for key, value in w.detail.items():
        if key != "coloring":
            rows.append((key, value))
    rows.append(("verdict", "VERIFIED" if w.ok else "REFUTED"))
    sys.stdout.write(_table(rows))
    return 0


def cmd_verify(args) -> int:
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_grid(grid, _budget(args), threads=args.threads, timings=args.timings, max_order=args.max_order)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.dumps())
    lines = []
    for case in report.cases:
        for c in case.claims:
            lines.append(f"GF({case.q})^{case.n}  {c.name:<36} {c.status:<12} predicted={_fmt(c.predicted)} computed={_fmt(c.computed)}")
    for c in report.cross_checks:
        lines.append(f"grid      {c.name:<36} {c.status:<12} computed={_fmt(c.computed)}")
    if lines:
        sys.stdout.write("\n".join(lines) + "\n")
    return report.exit_code(strict=args.strict)


def cmd_export(args) -> int:
    g = _graph(args)
    text = export.RENDERERS[args.format](g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subsum", description="Subspace sum graphs of GF(q)^n: build, measure and audit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--max-order", type=int, default=MAX_ORDER, help="largest graph order to build")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker process cap")

    def space(p):
        common(p)
        p.add_argument("--n", type=int, required=True, help="ambient dimension")
        p.add_argument("--q", type=int, required=True, help="field order (a prime power)")

    def budget(p):
        p.add_argument("--budget-nodes", type=int, default=5_000_000, help="search-node cap per solver call")
        p.add_argument("--budget-ms", type=int, default=None, help="wall-clock cap per solver call (default: $SUBSUM_BUDGET_MS)")

    p = sub.add_parser("count", help="q-binomial and Galois-number counts")
    space(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("build", help="build the graph and summarise it")
    space(p)
    p.add_argument("--out", help="write the JSON adjacency dump here")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="exact invariants")
    space(p)
    budget(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-hamiltonian", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("predict", help="closed-form predictions")
    space(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("witness", help="build and check a constructive witness")
    space(p)
    p.add_argument(
        "--theorem",
        required=True,
        choices=["clique", "coloring", "domination", "indep-odd", "indep-even", "triangle", "common-neighbor", "c5"],
    )
    p.add_argument("--anchor", help="nonzero vector for indep-even, e.g. 1000")
    p.add_argument("--vertices", help="vertex indices for triangle (one) or common-neighbor (two)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="audit every claim over a grid")
    common(p)
    p.add_argument("--grid", default="default", help='"default" or n:q pairs, e.g. 3:2,3:3')
    budget(p)
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--strict", action="store_true", help="exit 2 on unexpected discrepancies")
    p.add_argument("--timings", action="store_true", help="record per-claim runtimes (breaks byte-identical output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write the graph as DOT, JSON or CSV")
    space(p)
    p.add_argument("--format", choices=sorted(export.RENDERERS), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EX_USAGE
    except SubsumError as exc:
        sys.stderr.write(f"error: {exc.name}: {exc}\n")
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())

"""``madcolor`` command line.

Exit codes: 0 success (including a decided UNSAT), 1 usage or I/O error,
2 timeout, 3 a verification failed (invalid coloring, failed audit check,
Lemma 2 counterexample, hunt failure).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any

from . import flow
from .bounds import bounds_table, reference_bounds
from .coloring import Coloring, ColorSpec, SolveStatus, solve_exact, verify
from .experiments import cmd_hunt
from .graph import GraphFormatError, gen, gen_below_bound, read_graph, to_edge_list, to_graph6
from .mad import densest_subgraph, mad
from .proof import audit, check_lemma2, solve_proof_guided

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def rat_json(x: Fraction) -> dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, data: Any) -> None:
    _emit(args, json.dumps(data, indent=2) + "\n")


def _load(args):
    if not args.graph:
        raise UsageError("--graph is required")
    return read_graph(args.graph, args.format)


def _spec(args) -> ColorSpec:
    if args.a is None or args.b is None:
        raise UsageError("--a and --b are required")
    return ColorSpec(args.a, args.b)


def _solve(g, spec, args):
    """(status, coloring, fell_back) under --method."""
    method = args.method
    if method == "exact" or spec.a < 1:
        r = solve_exact(g, spec, args.budget)
        return r.status, r.coloring, False
    res = solve_proof_guided(g, spec, seed=args.seed, budget=args.budget)
    if method == "proof" and res.fell_back:
        return SolveStatus.TIMEOUT, None, True
    return res.status, res.coloring, res.fell_back


# -- commands ---------------------------------------------------------------


def do_gen(args) -> int:
    if args.below_bound:
        if args.n is None:
            raise UsageError("--n is required")
        g = gen_below_bound(_spec(args).a, args.b, args.n, seed=args.seed)
    else:
        params = {k: v for k, v in (("n", args.n), ("m", args.m)) if v is not None}
        g = gen(args.kind, params, seed=args.seed)
    fmt = args.format or ("graph6" if (args.out or "").endswith(".g6") else "edges")
    _emit(args, to_graph6(g) + "\n" if fmt == "graph6" else to_edge_list(g))
    return EXIT_OK


def do_mad(args) -> int:
    g = _load(args)
    value = mad(g)
    if args.json:
        subset = sorted(densest_subgraph(g).subset) if g.m else []
        _emit_json(args, {"n": g.n, "m": g.m, "mad": rat_json(value), "densest": subset})
    else:
        _emit(args, rat(value) + "\n")
    return EXIT_OK


def do_color(args) -> int:
    g = _load(args)
    spec = _spec(args)
    status, coloring, fell_back = _solve(g, spec, args)
    if status is SolveStatus.COLORED and verify(g, spec, coloring):
        raise AssertionError("solver returned an invalid coloring")
    label = {"COLORED": "SAT", "UNSAT": "UNSAT", "TIMEOUT": "TIMEOUT"}[status.value]
    if args.json:
        _emit_json(args, {
            "status": label,
            "method": args.method,
            "fell_back": fell_back,
            "coloring": coloring.to_json(spec) if coloring else None,
        })
    else:
        lines = [label]
        if coloring:
            lines += [f"{k}: {' '.join(map(str, v))}" for k, v in coloring.classes().items()]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_UNKNOWN if status is SolveStatus.TIMEOUT else EXIT_OK


def _read_coloring(path: str, n: int) -> tuple[Coloring, ColorSpec]:
    with open(path) as fh:
        data = json.load(fh)
    # accept the envelope written by `color --json` as well as a bare coloring
    if isinstance(data.get("coloring"), dict):
        data = data["coloring"]
    return Coloring.from_json(data, n)


def do_verify(args) -> int:
    g = _load(args)
    if not args.coloring:
        raise UsageError("--coloring is required")
    coloring, spec = _read_coloring(args.coloring, g.n)
    bad = verify(g, spec, coloring, defect=args.defect)
    if args.json:
        _emit_json(args, {
            "ok": not bad,
            "violations": [
                {"vertex": x.vertex, "class": None if x.color is None else str(x.color),
                 "reason": x.reason, "neighbors": list(x.neighbors)}
                for x in bad
            ],
        })
    else:
        lines = ["OK"] if not bad else ["INVALID"] + [
            f"vertex {x.vertex} ({x.color}): {x.reason} {list(x.neighbors)}" for x in bad
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if not bad else EXIT_FAILED


def do_audit(args) -> int:
    g = _load(args)
    result = audit(g, _spec(args))
    if args.json:
        _emit_json(args, result.to_json())
    else:
        ch = result.charges
        lines = [
            f"covered: {str(result.covered).lower()} (depth {result.layers.depth})",
            f"average degree: {rat(g.average_degree())}  bound: {rat(result.spec.bound)}",
            f"sum_mu: {rat(ch.sum_mu)}  sum_mu_star: {rat(ch.sum_mu_star)}",
        ]
        lines += [f"{'PASS' if c.passed else 'FAIL'} {c.name}" for c in result.checks]
        _emit(args, "\n".join(lines) + "\n")
    if not result.passed:
        print(f"AUDIT FAILURE: {[c.name for c in result.failed()]}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def do_lemma2(args) -> int:
    g = _load(args)
    spec = _spec(args)
    v = args.vertex
    if v is None or not 0 <= v < g.n:
        raise UsageError("--vertex must name a vertex of the graph")
    if args.coloring:
        coloring, _ = _read_coloring(args.coloring, g.n)
    else:
        status, coloring, _ = _solve(g.isolate(v), spec, args)
        if status is not SolveStatus.COLORED:
            _emit(args, f"G - {v}: {status.value}\n")
            return EXIT_UNKNOWN if status is SolveStatus.TIMEOUT else EXIT_OK
        coloring[v] = None
    rep = check_lemma2(g, spec, v, coloring)
    if args.json:
        _emit_json(args, rep.to_json())
    else:
        _emit(args, "\n".join([
            f"v={rep.v} h={rep.h} extendable={str(rep.extendable).lower()}",
            f"saturated unique neighbors: {rep.unique_saturated_count} (need {rep.required_saturated})",
            f"1-saturated unique neighbors: {rep.unique_one_saturated_count} (need {rep.required_one_saturated})",
            "VIOLATION" if rep.violation else "ok",
        ]) + "\n")
    return EXIT_FAILED if rep.violation else EXIT_OK


def do_hunt(args) -> int:
    spec = _spec(args)
    rep = cmd_hunt(spec.a, spec.b, args.n_max, args.trials, args.seed, jobs=args.jobs)
    if args.json:
        _emit_json(args, rep.to_json())
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "seed", "n", "m", "status", "fell_back", "swaps", "failure"])
        for o in rep.outcomes:
            w.writerow([o.trial, o.seed, o.n, o.m, o.status, int(o.fell_back), o.swaps,
                        "" if o.failure is None else o.failure["reason"]])
        _emit(args, buf.getvalue())
    else:
        _emit(args, "\n".join([
            f"trials: {rep.trials}  generated: {rep.generated}",
            f"failures: {len(rep.failures)}",
            f"fallback rate: {rep.fallback_rate:.3f}",
        ] + [json.dumps(f) for f in rep.failures]) + "\n")
    return EXIT_FAILED if rep.failures else EXIT_OK


def do_bounds(args) -> int:
    rows = bounds_table(args.a_max, args.b_max)
    refs = reference_bounds()
    if args.json:
        _emit_json(args, {
            "rows": [
                {"a": r.a, "b": r.b, "ours": rat_json(r.ours), "dkmr_d1": rat_json(r.dkmr_d1),
                 "havet_sereni_d1": None if r.havet_sereni_d1 is None else rat_json(r.havet_sereni_d1),
                 "improved": r.improved}
                for r in rows
            ],
            "reference": [
                {"name": x.name, "a": x.a, "b": x.b, "defect": x.defect, "value": rat_json(x.value)}
                for x in refs
            ],
        })
        return EXIT_OK
    buf = io.StringIO()
    if args.csv:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "ours", "dkmr_d1", "havet_sereni_d1", "improved"])
        for r in rows:
            w.writerow([r.a, r.b, rat(r.ours), rat(r.dkmr_d1),
                        "" if r.havet_sereni_d1 is None else rat(r.havet_sereni_d1), int(r.improved)])
    else:
        buf.write(f"{'a':>3} {'b':>3} {'ours':>8} {'dkmr':>8} {'hs':>8} improved\n")
        for r in rows:
            hs = "-" if r.havet_sereni_d1 is None else rat(r.havet_sereni_d1)
            buf.write(f"{r.a:>3} {r.b:>3} {rat(r.ours):>8} {rat(r.dkmr_d1):>8} {hs:>8} {r.improved}\n")
        buf.write("reference (sharp):\n")
        for x in refs:
            buf.write(f"  {x.name}: a={x.a} b={x.b} defect={x.defect} mad <= {rat(x.value)}\n")
    _emit(args, buf.getvalue())
    return EXIT_OK


COMMANDS = {
    "gen": do_gen, "mad": do_mad, "color": do_color, "verify": do_verify,
    "audit": do_audit, "lemma2": do_lemma2, "hunt": do_hunt, "bounds": do_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph", help="edge-list (.edges) or graph6 (.g6) file")
    common.add_argument("--format", choices=["edges", "graph6"], help="override extension-based detection")
    common.add_argument("--a", type=int)
    common.add_argument("--b", type=int)
    common.add_argument("--method", choices=["exact", "proof", "auto"], default="auto")
    common.add_argument("--budget", type=int, default=10**7, help="search-node budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")
    common.add_argument("--out", help="write output here instead of stdout")

    p = _Parser(prog="madcolor", description=__doc__.splitlines()[0])
    p.add_argument("--backend-info", action="store_true", help="print the active flow kernel and exit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate a graph")
    g.add_argument("--kind", choices=["complete", "cycle", "path", "star", "gnm"], default="gnm")
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--below-bound", action="store_true", help="sample with mad < 4a/3 + b")

    sub.add_parser("mad", parents=[common], help="exact maximum average degree")
    sub.add_parser("color", parents=[common], help="decide colorability")
    v = sub.add_parser("verify", parents=[common], help="check a coloring JSON")
    v.add_argument("--coloring")
    v.add_argument("--defect", type=int, default=1)
    sub.add_parser("audit", parents=[common], help="layer closure and discharging audit")
    l2 = sub.add_parser("lemma2", parents=[common], help="saturated-neighbor counts at a vertex")
    l2.add_argument("--vertex", type=int)
    l2.add_argument("--coloring", help="coloring of G - v (vertex left out)")
    h = sub.add_parser("hunt", parents=[common], help="random search below the bound")
    h.add_argument("--n-max", type=int, default=20)
    h.add_argument("--trials", type=int, default=100)
    h.add_argument("--jobs", type=int, default=1)
    h.add_argument("--csv", action="store_true")
    bd = sub.add_parser("bounds", parents=[common], help="threshold comparison table")
    bd.add_argument("--a-max", type=int, default=5)
    bd.add_argument("--b-max", type=int, default=5)
    bd.add_argument("--csv", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        print(flow.BACKEND)
        return EXIT_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphFormatError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"madcolor {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: hlag {lambda, colex, construct, enumerate, verify}.

Exit codes: 0 on success with all verifications passing, 1 on a failed
verification (the report is still emitted), 2 on usage or input errors.
All diagnostics go to stderr; reports and edge lists go to stdout or the
--out path.  No environment variables are consulted: every knob is a flag.
"""

from __future__ import annotations

import argparse
import json
import sys

from .edgelist import EdgeListError, parse_edge_list, serialize_edge_list
from .families import addresultplus_case, addresult_graph, lemmaaddplus_graph
from .hypergraph import colex_segment, with_universe
from .lagrangian import OptimizerConfig, optimize
from .search import (
    EnumerationBudgetError,
    enumerate_left_compressed,
    verify_conjecture,
    verify_theorem,
)


def _add_optimizer_flags(p: argparse.ArgumentParser):
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--value-tol", type=float, default=None)
    p.add_argument("--kkt-tol", type=float, default=None)
    p.add_argument("--prune-eps", type=float, default=None)
    p.add_argument("--support-threshold", type=int, default=None)


def _config_from(args) -> OptimizerConfig:
    overrides = {}
    for flag, field in (
        ("restarts", "restarts"),
        ("seed", "seed"),
        ("max_iter", "max_iterations"),
        ("value_tol", "value_tolerance"),
        ("kkt_tol", "kkt_tolerance"),
        ("prune_eps", "support_prune_epsilon"),
        ("support_threshold", "exhaustive_support_threshold"),
    ):
        val = getattr(args, flag, None)
        if val is not None:
            overrides[field] = val
    return OptimizerConfig(**overrides)


def _emit(text: str, out_path: str | None):
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hlag", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("lambda", help="maximize the edge-monomial polynomial of an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    _add_optimizer_flags(p)

    p = sub.add_parser("colex", help="write the m-edge initial colex segment as an edge list")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="re-embed on the universe [t]")
    p.add_argument("--out", default=None)

    p = sub.add_parser("construct", help="build a named near-extremal family as an edge list")
    p.add_argument("--family", required=True, choices=("addresult", "lemmaadd-plus", "addresult-plus"))
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--case", type=int, default=None)
    p.add_argument("--printed-variant", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("enumerate", help="stream the left-compressed r-graphs with m edges in [nmax]")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--limit", type=int, default=1_000_000)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run a verification and emit its margin report")
    vsub = p.add_subparsers(dest="what", required=True)

    v = vsub.add_parser("theorem")
    v.add_argument("--name", required=True)
    v.add_argument("--t", type=int, default=None)
    v.add_argument("--r", type=int, default=None)
    v.add_argument("--a", type=int, default=None)
    v.add_argument("--i", type=int, default=None)
    v.add_argument("--case", type=int, default=None)
    v.add_argument("--m-min", type=int, default=None)
    v.add_argument("--m-max", type=int, default=None)
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--tolerance", type=float, default=None)
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--out", default=None)
    _add_optimizer_flags(v)

    v = vsub.add_parser("conjecture")
    v.add_argument("--r", type=int, required=True)
    group = v.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--m-max", type=int)
    v.add_argument("--nmax", type=int, default=None)
    v.add_argument("--budget", type=int, default=200_000)
    v.add_argument("--tolerance", type=float, default=None)
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--out", default=None)
    _add_optimizer_flags(v)

    return parser


def _render_report(report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.checks_to_csv()
    return report.to_text()


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    return "".join(_render_report(r, fmt) for r in reports)


def _run_lambda(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        G = parse_edge_list(fh)
    res = optimize(G, _config_from(args))
    if args.format == "json":
        payload = {
            "lambda": res.value,
            "weights": list(res.weighting.weights),
            "support": sorted(res.support),
            "kkt_residual": res.kkt_residual,
            "iterations": res.iterations,
            "converged": res.converged,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"lambda = {res.value!r}",
            f"weights = {[w for w in res.weighting.weights]!r}",
            f"support = {sorted(res.support)!r}",
            f"kkt_residual = {res.kkt_residual!r}",
            f"iterations = {res.iterations}",
            f"converged = {res.converged}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _run_colex(args) -> int:
    G = colex_segment(args.r, args.m)
    if args.t is not None:
        G = with_universe(G, args.t)
    _emit(serialize_edge_list(G, comments=[f"colex segment r={args.r} m={args.m}"]), args.out)
    return 0


def _run_construct(args) -> int:
    if args.family == "addresult":
        if args.i is None:
            raise ValueError("--family addresult requires --i")
        G = addresult_graph(args.t, args.r, args.a, args.i)
        header = f"family=addresult t={args.t} r={args.r} a={args.a} i={args.i}"
    elif args.family == "lemmaadd-plus":
        G = lemmaaddplus_graph(args.t, args.r, args.a)
        header = f"family=lemmaadd-plus t={args.t} r={args.r} a={args.a}"
    else:
        if args.case is None:
            raise ValueError("--family addresult-plus requires --case")
        G = addresultplus_case(args.t, args.r, args.a, args.case, printed_variant=args.printed_variant)
        header = (
            f"family=addresult-plus t={args.t} r={args.r} a={args.a} case={args.case}"
            + (" variant=printed" if args.printed_variant else "")
        )
    _emit(serialize_edge_list(G, comments=[header]), args.out)
    return 0


def _run_enumerate(args) -> int:
    blocks = []
    count = 0
    for G in enumerate_left_compressed(args.r, args.m, args.nmax, limit=args.limit):
        count += 1
        if not args.count_only:
            blocks.append(serialize_edge_list(G, comments=[f"graph {count}"]))
    if args.count_only:
        _emit(f"{count}\n", args.out)
    else:
        _emit("".join(blocks), args.out)
    return 0


def _run_verify(args) -> int:
    cfg = _config_from(args)
    if args.what == "theorem":
        params = {}
        for key in ("t", "r", "a", "i", "p", "samples"):
            val = getattr(args, key, None)
            if val is not None:
                params[key] = val
        if args.m_min is not None:
            params["m_min"] = args.m_min
        if args.m_max is not None:
            params["m_max"] = args.m_max
        report = verify_theorem(args.name, params, cfg)
        if args.tolerance is not None:
            # re-judge every check at the overridden tolerance
            from dataclasses import replace

            checks = tuple(
                replace(c, tolerance=args.tolerance, passed=c.margin >= -args.tolerance)
                for c in report.checks
            )
            report = replace(report, checks=checks)
        _emit(_render_report(report, args.format), args.out)
        return 0 if report.passed else 1

    kwargs = {}
    if args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.tolerance is not None:
        kwargs["tolerance"] = args.tolerance
    ms = [args.m] if args.m is not None else list(range(1, args.m_max + 1))
    reports = [verify_conjecture(args.r, m, cfg, budget=args.budget, **kwargs) for m in ms]
    _emit(_render_reports(reports, args.format) if len(reports) > 1 else _render_report(reports[0], args.format), args.out)
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "lambda":
            return _run_lambda(args)
        if args.verb == "colex":
            return _run_colex(args)
        if args.verb == "construct":
            return _run_construct(args)
        if args.verb == "enumerate":
            return _run_enumerate(args)
        return _run_verify(args)
    except (EdgeListError, EnumerationBudgetError, ValueError, OSError) as exc:
        print(f"hlag: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

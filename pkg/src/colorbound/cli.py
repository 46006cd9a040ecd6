"""Command-line front end.

Every subcommand prints one JSON object to stdout (keys sorted, schema
field versioned). Exit codes: 0 success or no violation, 1 violation
or a walk that ends without a certificate, 2 usage or parse errors,
3 internal assertion failures. Campaign wall time lives in the
wall_time_ms field, the designated unstable field; everything else is
byte-stable for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .campaign import EnumerateSource, GnpSource, run_campaign
from .constructions import f_graph, n_epsilon
from .degrees import degree_report, exact_fraction
from .dimacs import parse_dimacs, write_dimacs
from .errors import InputError, InternalCheckError
from .laws import LAW_NAMES, check_laws
from .partitioned import (
    PartitionSpec,
    check_component_structure,
    global_min_coloring,
    minimum_partitioned_coloring,
    objective,
)
from .solvers import chromatic_number, clique_number
from .walk import CliqueCertificate, HypothesisViolation, IterationCapExceeded, run_walk


def _emit(payload):
    print(json.dumps(payload, sort_keys=True))


def _load_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_dimacs(text)


def _fraction(text):
    return exact_fraction(text, "fraction argument")


def _cmd_params(args):
    g = _load_graph(args.file)
    report = degree_report(g, args.eps or ())
    _emit(
        {
            "schema": "colorbound/params-v1",
            "n": report.n,
            "m": report.m,
            "min_degree": report.min_degree,
            "delta": report.max_degree,
            "delta2": report.delta2,
            "theta": report.ore_degree,
            "delta_eps": {str(eps): value for eps, value in report.delta_eps.items()},
        }
    )
    return 0


def _cmd_chi(args):
    g = _load_graph(args.file)
    _emit({"schema": "colorbound/chi-v1", "chi": chromatic_number(g), "n": g.n, "m": g.edge_count()})
    return 0


def _cmd_omega(args):
    g = _load_graph(args.file)
    _emit({"schema": "colorbound/omega-v1", "omega": clique_number(g), "n": g.n, "m": g.edge_count()})
    return 0


def _cmd_verify(args):
    g = _load_graph(args.file)
    verdicts = check_laws(g, args.law)
    _emit(
        {
            "schema": "colorbound/verify-v1",
            "n": g.n,
            "m": g.edge_count(),
            "verdicts": [v.as_dict() for v in verdicts],
        }
    )
    return 1 if any(v.holds is False for v in verdicts) else 0


def _campaign_exit(report):
    _emit({"schema": "colorbound/campaign-v1", **report.as_dict()})
    return 1 if report.counts["violated"] else 0


def _cmd_fuzz(args):
    source = GnpSource(args.n, args.p, args.count)
    return _campaign_exit(run_campaign(source, args.law, seed=args.seed))


def _cmd_enumerate(args):
    source = EnumerateSource(args.n)
    return _campaign_exit(run_campaign(source, args.law))


def _cmd_construct_fn(args):
    built = f_graph(args.n)
    payload = {
        "schema": "colorbound/construct-v1",
        "kind": "fn",
        "n": args.n,
        "vertices": built.graph.n,
        "edges": built.graph.edge_count(),
        "x": built.x,
        "y": built.y,
    }
    text = write_dimacs(built.graph)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc}") from exc
        payload["path"] = args.output
    else:
        payload["dimacs"] = text
    _emit(payload)
    return 0


def _cmd_construct_neps(args):
    _emit(
        {
            "schema": "colorbound/construct-v1",
            "kind": "neps",
            "eps": str(args.eps),
            "n_eps": n_epsilon(args.eps),
        }
    )
    return 0


def _write_trace(path, transcript):
    lines = [json.dumps(event, sort_keys=True) for event in transcript]
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _cmd_walk(args):
    g = _load_graph(args.file)
    outcome = run_walk(g, args.k, max_iter=args.max_iter)
    if args.trace is not None:
        _write_trace(args.trace, outcome.transcript)
    if isinstance(outcome, CliqueCertificate):
        _emit(
            {
                "schema": "colorbound/walk-v1",
                "outcome": "certificate",
                "vertices": list(outcome.vertices),
                "events": len(outcome.transcript),
            }
        )
        return 0
    if isinstance(outcome, HypothesisViolation):
        _emit(
            {
                "schema": "colorbound/walk-v1",
                "outcome": "hypothesis-violation",
                "failed": list(outcome.failed),
                "witness": outcome.witness,
            }
        )
        return 1
    if isinstance(outcome, IterationCapExceeded):
        _emit(
            {
                "schema": "colorbound/walk-v1",
                "outcome": "iteration-cap",
                "cap": outcome.cap,
                "iterations": outcome.state.iteration,
            }
        )
        return 1
    raise InternalCheckError(f"unknown walk outcome {outcome!r}")


def _parse_spec(text):
    try:
        sizes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"spec must be comma-separated integers, got {text!r}") from None
    return PartitionSpec(sizes)


def _cmd_lemma_check(args):
    g = _load_graph(args.file)
    spec = _parse_spec(args.spec)
    if args.x is not None:
        if not 0 <= args.x < g.n:
            raise InputError(f"vertex {args.x} out of range for n={g.n}")
        pc = global_min_coloring(g, spec, args.x)
    else:
        pc = minimum_partitioned_coloring(g, spec)
    if pc is None:
        _emit({"schema": "colorbound/lemma-check-v1", "feasible": False})
        return 0
    verdict = check_component_structure(pc)
    _emit(
        {
            "schema": "colorbound/lemma-check-v1",
            "feasible": True,
            "singleton": pc.singleton,
            "objective": objective(pc),
            "verdict": verdict.as_dict(),
        }
    )
    return 1 if verdict.holds is False else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colorbound",
        description="Exact chromatic-bound checks, constructions, and recoloring walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="degree parameters of a DIMACS graph")
    p.add_argument("file")
    p.add_argument("--eps", action="append", type=_fraction, metavar="A/B")
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("chi", help="exact chromatic number")
    p.add_argument("file")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("omega", help="exact clique number")
    p.add_argument("file")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("verify", help="check named laws against one graph")
    p.add_argument("file")
    p.add_argument("--law", action="append", required=True, choices=LAW_NAMES)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="check laws against random G(n,p) samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_fraction, required=True, metavar="A/B")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--law", action="append", required=True, choices=LAW_NAMES)
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("enumerate", help="check laws against all connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--law", action="append", required=True, choices=LAW_NAMES)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("construct", help="emit a named construction")
    csub = p.add_subparsers(dest="construction", required=True)
    c = csub.add_parser("fn", help="the two-clique lower-bound witness graph")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("-o", "--output", metavar="FILE")
    c.set_defaults(func=_cmd_construct_fn)
    c = csub.add_parser("neps", help="largest odd order carrying the eps threshold")
    c.add_argument("--eps", type=_fraction, required=True, metavar="A/B")
    c.set_defaults(func=_cmd_construct_neps)

    p = sub.add_parser("walk", help="run the recoloring walk to a clique certificate")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--trace", metavar="FILE")
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("lemma-check", help="component structure at a minimum coloring")
    p.add_argument("file")
    p.add_argument("--spec", required=True, metavar="R1,R2,...")
    p.add_argument("--x", type=int, default=None)
    p.set_defaults(func=_cmd_lemma_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

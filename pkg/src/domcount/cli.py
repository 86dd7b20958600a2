"""Command-line interface.

Subcommands: gen, analyze, count, bounds, oracle, experiment.  Results are
JSON on stdout (big counts as decimal strings) or CSV written to an explicit
path.  Exit codes: 0 success, 2 invalid configuration or arguments, 3 work
budget exhausted (for `count`, immediately; for `experiment`, when every
exact row hit the budget).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .engine import (
    DEFAULT_WORK_BUDGET,
    WorkBudgetExceeded,
    count_dominating_exact,
    domination_number,
    estimate_dominating_fraction,
)
from .experiment import (
    BUDGET_MARKER,
    ConfigError,
    read_config,
    run_experiment,
    write_rows_csv,
)
from .generate import ensemble_epsilon, erdos_renyi, gamma3_extremal
from .graph import read_graph, row_zero_profile, write_graph
from .moments import (
    dominating_sets_bracket,
    moment_report,
    row_zero_witness,
)
from .oracle import brute_expectation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcount",
        description="Count and bound dominating vertex sets in graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write it as an edge list")
    gen.add_argument("--model", choices=("er", "gjj"), required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, help="edge probability (model er)")
    gen.add_argument("--gamma", type=int, help="target domination number (model er)")
    gen.add_argument("--delta", type=float, default=1.0, help="threshold margin for --gamma")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    analyze = sub.add_parser("analyze", help="domination number and row-zero profile")
    analyze.add_argument("--in", dest="infile", required=True)

    count = sub.add_parser("count", help="count or estimate dominating k-subsets")
    count.add_argument("--in", dest="infile", required=True)
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--mode", choices=("exact", "sample"), default="exact")
    count.add_argument("--budget", type=int, default=DEFAULT_WORK_BUDGET)
    count.add_argument("--trials", type=int, help="sample size (mode sample)")
    count.add_argument("--seed", type=int, default=0, help="stream seed (mode sample)")

    bounds = sub.add_parser("bounds", help="closed-form moments and bound reports")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--gamma", type=int, required=True)
    bounds.add_argument("--epsilon", type=float, required=True)
    bounds.add_argument("--phi", type=float, help="Chebyshev deviation scale")
    bounds.add_argument("--b", type=int, default=2, help="subset size for the row-zero report")

    oracle = sub.add_parser("oracle", help="exhaustive small-n ensemble moments")
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--gamma", type=int, required=True)
    oracle.add_argument("--epsilon", type=float, required=True)

    experiment = sub.add_parser("experiment", help="run a config file, write CSV rows")
    experiment.add_argument("--config", required=True)
    experiment.add_argument("--out", required=True)
    experiment.add_argument("--jobs", type=int, default=1)
    experiment.add_argument("--budget", type=int, default=DEFAULT_WORK_BUDGET)
    experiment.add_argument(
        "--timing",
        action="store_true",
        help="include wall-clock elapsed_ms (breaks byte reproducibility)",
    )
    return parser


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_gen(args) -> int:
    if args.model == "gjj":
        graph = gamma3_extremal(args.n)
        epsilon = None
        p = None
    else:
        if (args.p is None) == (args.gamma is None):
            raise ValueError("model er needs exactly one of --p or --gamma")
        if args.p is not None:
            p = args.p
            epsilon = 1.0 - p
        else:
            epsilon = ensemble_epsilon(args.gamma, args.n, args.delta)
            p = 1.0 - epsilon
        graph = erdos_renyi(args.n, p, args.seed)
    write_graph(graph, args.out)
    _emit(
        {
            "model": args.model,
            "n": graph.n,
            "edges": graph.edge_count,
            "p": p,
            "epsilon": epsilon,
            "seed": args.seed if args.model == "er" else None,
            "out": args.out,
        }
    )
    return 0


def _cmd_analyze(args) -> int:
    graph = read_graph(args.infile)
    profile = row_zero_profile(graph)
    _emit(
        {
            "n": graph.n,
            "edges": graph.edge_count,
            "domination_number": domination_number(graph),
            "zeros_per_row": list(profile.zeros_per_row),
            "z_max": profile.z_max,
            "argmax": profile.argmax,
        }
    )
    return 0


def _cmd_count(args) -> int:
    graph = read_graph(args.infile)
    if args.mode == "exact":
        result = count_dominating_exact(graph, args.k, budget=args.budget)
        _emit(
            {
                "mode": "exact",
                "k": result.k,
                "total": str(result.total),
                "dominating": str(result.dominating),
                "non_dominating": str(result.non_dominating),
                "fraction": result.fraction,
            }
        )
    else:
        if args.trials is None:
            raise ValueError("mode sample needs --trials")
        est = estimate_dominating_fraction(graph, args.k, args.trials, args.seed)
        _emit(
            {
                "mode": "sample",
                "k": args.k,
                "point": est.point,
                "half_width": est.half_width,
                "trials": est.trials,
                "hits": est.hits,
                "seed": est.seed,
            }
        )
    return 0


def _cmd_bounds(args) -> int:
    report = moment_report(args.n, args.gamma, args.epsilon)
    payload: dict = {
        "n": report.n,
        "gamma": report.gamma,
        "epsilon": report.epsilon,
        "expected": report.expected,
        "expected_fraction": report.expected_fraction,
        "second_moment": report.second_moment,
        "variance": report.variance,
        "variance_clamped": report.variance_clamped,
        "markov_raw": report.markov_raw,
        "markov_bound": report.markov_bound,
    }
    if args.phi is not None:
        payload["chebyshev_phi"] = args.phi
        payload["chebyshev_tail"] = report.chebyshev_tail(args.phi)
    if args.gamma >= 3:
        bracket = dominating_sets_bracket(args.n, args.gamma)
        payload["bracket"] = {
            "total": str(bracket.total),
            "upper_defect": bracket.upper_defect,
            "lower_defect": bracket.lower_defect,
            "upper": bracket.upper,
            "lower": bracket.lower,
            "crossover_n": bracket.crossover_n,
        }
    else:
        payload["bracket"] = None
        payload["bracket_note"] = "defined for gamma >= 3 only"
    witness = row_zero_witness(args.n, args.b)
    payload["row_zero_witness"] = {
        "b": witness.b,
        "a_star": witness.a_star,
        "zeros_forced": witness.zeros_forced,
        "root_bound": witness.root_bound,
        "meets_root_bound": witness.meets_root_bound,
    }
    _emit(payload)
    return 0


def _cmd_oracle(args) -> int:
    result = brute_expectation(args.n, args.gamma, args.epsilon)
    variance = result.second_moment - result.expectation**2
    _emit(
        {
            "n": result.n,
            "gamma": result.gamma,
            "epsilon": result.epsilon,
            "expectation": result.expectation,
            "second_moment": result.second_moment,
            "variance": variance,
            "graphs_enumerated": result.graphs_enumerated,
            "weight_total": result.weight_total,
        }
    )
    return 0


def _cmd_experiment(args) -> int:
    cfg = read_config(args.config)
    rows = run_experiment(cfg, jobs=args.jobs, budget=args.budget)
    write_rows_csv(rows, args.out, timing=args.timing)
    exact_rows = [r for r in rows if cfg.mode == "exact"]
    if exact_rows and all(r.error == BUDGET_MARKER for r in exact_rows):
        print("all exact counts exceeded the work budget", file=sys.stderr)
        return 3
    _emit({"rows": len(rows), "out": args.out})
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "analyze": _cmd_analyze,
    "count": _cmd_count,
    "bounds": _cmd_bounds,
    "oracle": _cmd_oracle,
    "experiment": _cmd_experiment,
}


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except WorkBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

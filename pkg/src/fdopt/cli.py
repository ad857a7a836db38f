"""Command-line frontend.

Subcommands: run, bench, compare, antenna, evac, list.  Exit codes:
0 success, 2 usage error, 3 I/O error.  All configuration is explicit
flags, so identical invocations reproduce identical outputs.
"""

import argparse
import csv
import sys

import numpy as np

from . import applications, harness
from .core import FDO, IFDO, first_best_iteration
from .registry import all_objectives, get_objective

USAGE_ERROR = 2
IO_ERROR = 3


def _add_common(parser, agents=30, iters=500):
    parser.add_argument("--agents", type=int, default=agents)
    parser.add_argument("--iters", type=int, default=iters)
    parser.add_argument("--runs", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--wf-scope", choices=["scout", "swarm"], default="scout")
    parser.add_argument("--fdo-wf", type=float, choices=[0.0, 1.0], default=0.0)


def build_parser():
    parser = argparse.ArgumentParser(prog="fdopt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one objective")
    p_run.add_argument("--function", required=True)
    p_run.add_argument("--algo", choices=[FDO, IFDO], required=True)
    p_run.add_argument("--out", help="summary CSV path")
    p_run.add_argument("--trace", help="trace CSV path")
    p_run.add_argument("--history", help="search-history CSV path")
    _add_common(p_run)

    p_bench = sub.add_parser("bench", help="run a full suite with both algorithms")
    p_bench.add_argument("--suite", choices=["classical", "cec2019"], required=True)
    p_bench.add_argument("--out", help="comparison CSV path")
    _add_common(p_bench)
    p_bench.set_defaults(runs=30)

    p_cmp = sub.add_parser("compare", help="compare both algorithms on one objective")
    p_cmp.add_argument("--function", required=True)
    _add_common(p_cmp)
    p_cmp.set_defaults(runs=10)

    p_ant = sub.add_parser("antenna", help="optimize the antenna array layout")
    p_ant.add_argument("--algo", choices=[FDO, IFDO], default=IFDO)
    _add_common(p_ant, agents=20, iters=200)

    p_evac = sub.add_parser("evac", help="optimize the evacuation exit placement")
    p_evac.add_argument("--algo", choices=[FDO, IFDO], default=IFDO)
    p_evac.add_argument("--width", type=float, default=50.0)
    p_evac.add_argument("--height", type=float, default=50.0)
    p_evac.add_argument("--count", type=int, default=200)
    p_evac.add_argument("--formula", choices=["paper", "physical"], default="paper")
    p_evac.add_argument("--scenario-seed", type=int, default=0)
    p_evac.add_argument("--scenario-file", help="load a scenario instead of generating one")
    _add_common(p_evac, agents=20, iters=200)

    sub.add_parser("list", help="list every objective")
    return parser


def _experiment(args, objective_id, mode, record_positions=False):
    config = harness.ExperimentConfig(
        objective_id=objective_id,
        mode=mode,
        runs=args.runs,
        population=args.agents,
        iterations=args.iters,
        base_seed=args.seed,
        record_positions=record_positions,
        fdo_wf=args.fdo_wf,
        wf_scope=args.wf_scope,
    )
    return config


def cmd_run(args):
    try:
        objective = get_objective(args.function)
    except KeyError:
        print(f"error: unknown objective {args.function!r}; see 'fdopt list'", file=sys.stderr)
        return USAGE_ERROR
    config = _experiment(args, args.function, args.algo, record_positions=bool(args.history))
    result = harness.run_experiment(config, objective, jobs=args.jobs)
    print(
        f"{args.function} {args.algo} runs={args.runs} "
        f"mean={result.mean:.10e} std={result.std:.10e}"
    )
    try:
        if args.out:
            harness.export_results(result, "csv", args.out, kind="summary")
        if args.trace:
            harness.export_results(result, "csv", args.trace, kind="trace")
        if args.history:
            harness.export_search_history(result, args.history)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    return 0


def cmd_bench(args):
    suite = [
        s for s in all_objectives() if (s.id.startswith("TF") if args.suite == "classical" else s.id.startswith("CEC"))
    ]
    results = []
    writer = None
    out_fh = None
    try:
        if args.out:
            out_fh = open(args.out, "w", newline="")
            writer = csv.writer(out_fh)
            writer.writerow(
                ["objective", "mode", "runs", "population", "iterations", "mean", "std"]
            )
        for spec in suite:
            for mode in (FDO, IFDO):
                config = _experiment(args, spec.id, mode)
                result = harness.run_experiment(config, spec, jobs=args.jobs)
                results.append(result)
                print(
                    f"{spec.id} {mode} mean={result.mean:.10e} std={result.std:.10e}",
                    flush=True,
                )
                if writer is not None:
                    writer.writerow(
                        [spec.id, mode, args.runs, args.agents, args.iters,
                         f"{result.mean:.17g}", f"{result.std:.17g}"]
                    )
                    out_fh.flush()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    finally:
        if out_fh is not None:
            out_fh.close()
    print(harness.format_comparison(harness.compare(results)))
    return 0


def cmd_compare(args):
    try:
        objective = get_objective(args.function)
    except KeyError:
        print(f"error: unknown objective {args.function!r}; see 'fdopt list'", file=sys.stderr)
        return USAGE_ERROR
    results = [
        harness.run_experiment(_experiment(args, args.function, mode), objective, jobs=args.jobs)
        for mode in (FDO, IFDO)
    ]
    print(harness.format_comparison(harness.compare(results)))
    return 0


def cmd_antenna(args):
    objective = get_objective("ANTENNA")
    config = _experiment(args, "ANTENNA", args.algo)
    result = harness.run_experiment(config, objective, jobs=args.jobs)
    record = min(result.records, key=lambda r: r.best_fitness)
    positions = record.best_position
    marker = "" if applications.is_feasible(positions) else " INFEASIBLE"
    print("element positions: " + " ".join(f"{v:.6f}" for v in positions) + marker)
    print(f"peak sidelobe level (dB): {record.best_fitness:.10f}")
    print(f"first-best iteration: {first_best_iteration(record.trace)}")
    return 0


def cmd_evac(args):
    try:
        if args.scenario_file:
            scenario = applications.load_scenario(args.scenario_file, args.formula)
        else:
            scenario = applications.build_scenario(
                args.width, args.height, args.count, args.scenario_seed, args.formula
            )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    objective = applications.evac_objective(scenario)
    config = _experiment(args, "EVAC", args.algo)
    result = harness.run_experiment(config, objective, jobs=args.jobs)
    record = min(result.records, key=lambda r: r.best_fitness)
    door = applications.perimeter_point(record.best_position[0], scenario.width, scenario.height)
    print(f"exit arclength: {record.best_position[0]:.6f}")
    print(f"exit coordinates: ({door[0]:.6f}, {door[1]:.6f})")
    print(f"mean evacuation time: {record.best_fitness:.10f}")
    print(f"first-best iteration: {first_best_iteration(record.trace)}")
    return 0


def cmd_list(args):
    for spec in all_objectives():
        lo, hi = float(spec.bounds.lower[0]), float(spec.bounds.upper[0])
        floor = "unknown" if spec.known_fmin is None else f"{spec.known_fmin:.10g}"
        print(f"{spec.id:<8} dim={spec.dimension:<3} bounds=[{lo:g}, {hi:g}] fmin={floor}")
    return 0


_COMMANDS = {
    "run": cmd_run,
    "bench": cmd_bench,
    "compare": cmd_compare,
    "antenna": cmd_antenna,
    "evac": cmd_evac,
    "list": cmd_list,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

"""Experiment harness: repeated runs, mean/std aggregation and result export.

Run k of an experiment uses seed ``base_seed + k`` so any single run can be
reconstructed in isolation.  Exports use 17-significant-digit decimals so
64-bit floats round-trip exactly.
"""

import csv
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import RunConfig, run

_FMT = "{:.17g}"


@dataclass
class ExperimentConfig:
    objective_id: str
    mode: str
    runs: int = 30
    population: int = 30
    iterations: int = 500
    base_seed: int = 0
    record_positions: bool = False
    fdo_wf: float = 0.0
    wf_scope: str = "scout"

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")

    def run_config(self, k):
        return RunConfig(
            population=self.population,
            iterations=self.iterations,
            mode=self.mode,
            fdo_wf=self.fdo_wf,
            seed=self.base_seed + k,
            record_positions=self.record_positions,
            wf_scope=self.wf_scope,
        )


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list
    mean: float = field(init=False)
    std: float = field(init=False)
    total_wall_time_s: float = 0.0

    def __post_init__(self):
        bests = self.final_bests
        self.mean = float(np.mean(bests))
        # sample standard deviation; zero by convention for a single run
        self.std = float(np.std(bests, ddof=1)) if len(bests) > 1 else 0.0

    @property
    def final_bests(self):
        return np.array([r.best_fitness for r in self.records])


def run_experiment(config, objective, jobs=1):
    """Execute ``config.runs`` independent runs and aggregate them."""
    start = time.perf_counter()
    configs = [config.run_config(k) for k in range(config.runs)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda c: run(c, objective), configs))
    else:
        records = [run(c, objective) for c in configs]
    return ExperimentResult(
        config=config, records=records, total_wall_time_s=time.perf_counter() - start
    )


def _summary_row(result):
    c = result.config
    return {
        "objective": c.objective_id,
        "mode": c.mode,
        "runs": c.runs,
        "population": c.population,
        "iterations": c.iterations,
        "mean": result.mean,
        "std": result.std,
        "wall_ms": result.total_wall_time_s * 1e3,
    }


def export_results(result, format, path, kind="summary"):
    """Write an experiment to disk.

    ``kind="summary"`` is one aggregate row; ``kind="trace"`` is one row per
    run per iteration with the global best value.
    """
    if format not in ("csv", "json"):
        raise ValueError("format must be 'csv' or 'json'")
    if kind not in ("summary", "trace"):
        raise ValueError("kind must be 'summary' or 'trace'")
    try:
        if kind == "summary":
            row = _summary_row(result)
            if format == "csv":
                with open(path, "w", newline="") as fh:
                    writer = csv.writer(fh)
                    writer.writerow(row.keys())
                    writer.writerow(_format_values(row.values()))
            else:
                with open(path, "w") as fh:
                    json.dump(row, fh, indent=2)
                    fh.write("\n")
        else:
            if format == "csv":
                with open(path, "w", newline="") as fh:
                    writer = csv.writer(fh)
                    writer.writerow(["run", "iteration", "best_fitness"])
                    for k, record in enumerate(result.records):
                        for t, value in enumerate(record.trace):
                            writer.writerow([k, t, _FMT.format(value)])
            else:
                payload = {
                    "runs": [
                        {"run": k, "best_fitness_trace": list(map(float, r.trace))}
                        for k, r in enumerate(result.records)
                    ]
                }
                with open(path, "w") as fh:
                    json.dump(payload, fh)
                    fh.write("\n")
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc


def export_search_history(result, path):
    """Raw per-agent positions: ``run,iteration,agent,dim0,dim1,...``."""
    for record in result.records:
        if record.positions is None:
            raise ValueError("positions were not recorded; enable record_positions")
    dim = result.records[0].positions.shape[2]
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["run", "iteration", "agent"] + [f"dim{j}" for j in range(dim)])
            for k, record in enumerate(result.records):
                iters, agents, _ = record.positions.shape
                for t in range(iters):
                    for a in range(agents):
                        writer.writerow(
                            [k, t, a] + [_FMT.format(v) for v in record.positions[t, a]]
                        )
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc


def _format_values(values):
    return [_FMT.format(v) if isinstance(v, float) else v for v in values]


def compare(results):
    """Rows shaped like the benchmark tables, best mean flagged per objective.

    Returns a list of dicts; render with :func:`format_comparison`.
    """
    if len(results) < 2:
        raise ValueError("compare needs at least two experiment results")
    rows = [dict(_summary_row(r), best=False) for r in results]
    by_objective = {}
    for row in rows:
        by_objective.setdefault(row["objective"], []).append(row)
    for group in by_objective.values():
        best = min(group, key=lambda r: r["mean"])
        best["best"] = True
    ordered = []
    for group in by_objective.values():
        ordered.extend(group)
    return ordered


def format_comparison(rows):
    header = f"{'objective':<10} {'mode':<6} {'mean':>24} {'std':>24}  best"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row['objective']:<10} {row['mode']:<6} "
            f"{row['mean']:>24.10e} {row['std']:>24.10e}  {'*' if row['best'] else ''}"
        )
    return "\n".join(lines)

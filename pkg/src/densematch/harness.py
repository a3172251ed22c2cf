"""Experiment orchestration.

Runs seeded extraction experiments over instance families, compares trial
statistics against the closed-form bound and the limiting density
``1/(c*(c-1)**2)``, and renders machine-readable CSV/JSON.  Serialised
output is byte-reproducible: wall-clock time is measured and kept on the
summary object for logging, but the CSV column stays empty and JSON omits
it entirely.
"""

import csv
import dataclasses
import io
import json
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .extractor import ExtractionParams, extract_best, prepare_extraction
from .generators import (c5_blowup_complement, complement_of_random_triangle_free,
                         complete_graph, two_cliques)
from .graphs import Graph

FAMILIES = ("two-cliques", "rtf", "c5", "complete")

CSV_COLUMNS = [
    "family", "params", "n", "c", "c_prime", "t", "ell", "k", "p", "q",
    "threshold", "trials", "acceptance_rate", "bound", "bound_density",
    "asymptotic_density", "best", "mean", "median", "seed", "wall_ms", "error",
]


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: an instance family plus extraction knobs.

    ``graph_seed`` defaults to ``master_seed`` for the seeded families, so a
    single integer pins the whole run.
    """

    family: str
    c: float
    t: int
    trials: int
    master_seed: int
    n: int | None = None
    parts: tuple[int, ...] | None = None
    graph_seed: int | None = None

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not self.c > 4:
            raise ValueError(f"c must exceed 4 (got {self.c})")
        if self.t < 1:
            raise ValueError("t must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.family == "c5":
            if self.parts is None:
                raise ValueError("family c5 needs parts")
        elif self.n is None:
            raise ValueError(f"family {self.family} needs n")
        if self.family == "two-cliques" and self.n is not None and self.n % 2:
            raise ValueError("family two-cliques needs an even n")

    def effective_graph_seed(self) -> int:
        return self.master_seed if self.graph_seed is None else self.graph_seed

    def family_params(self) -> str:
        if self.family == "two-cliques" and self.n is not None:
            return f"s={self.n // 2}"
        if self.family == "rtf":
            return f"seed={self.effective_graph_seed()}"
        if self.family == "c5" and self.parts is not None:
            return "parts=" + ",".join(str(p) for p in self.parts)
        return ""

    def total_vertices(self) -> int | None:
        if self.family == "c5":
            return sum(self.parts) if self.parts is not None else None
        return self.n

    def build_graph(self) -> Graph:
        if self.family == "two-cliques":
            return two_cliques(self.n // 2)
        if self.family == "rtf":
            return complement_of_random_triangle_free(self.n, self.effective_graph_seed())
        if self.family == "c5":
            return c5_blowup_complement(self.parts)
        return complete_graph(self.n)


@dataclass(frozen=True)
class ExperimentSummary:
    """Aggregated trial statistics of one experiment."""

    config: ExperimentConfig
    n: int
    c_prime: float
    params: ExtractionParams
    acceptance_rate: float
    best: int
    mean: float
    median: float
    bound: float
    bound_density: float
    asymptotic_density: float
    wall_ms: float


def run_experiment(cfg: ExperimentConfig) -> ExperimentSummary:
    """Run one experiment; the result is a pure function of the config."""
    cfg.validate()
    start = time.perf_counter()
    g = cfg.build_graph()
    _, reports = extract_best(g, cfg.c, cfg.t, cfg.trials, cfg.master_seed)
    _, params = prepare_extraction(g, cfg.t)
    counts = [r.nonadjacent_pairs for r in reports]
    attempts = sum(r.rejection_attempts for r in reports)
    pairs = cfg.t * (cfg.t - 1) // 2
    wall_ms = (time.perf_counter() - start) * 1000.0
    return ExperimentSummary(
        config=cfg,
        n=g.n,
        c_prime=params.ratio,
        params=params,
        acceptance_rate=len(reports) / attempts,
        best=min(counts),
        mean=statistics.fmean(counts),
        median=float(statistics.median(counts)),
        bound=params.pair_bound,
        # no pairs exist at t=1, so the density question is vacuous there
        bound_density=params.pair_bound / pairs if pairs else 0.0,
        asymptotic_density=1.0 / (cfg.c * (cfg.c - 1.0) ** 2),
        wall_ms=wall_ms,
    )


def summary_to_dict(s: ExperimentSummary) -> dict:
    """Serialisable view of a summary; key order matches the CSV columns."""
    cfg = s.config
    return {
        "family": cfg.family,
        "params": cfg.family_params(),
        "n": s.n,
        "c": cfg.c,
        "c_prime": s.c_prime,
        "t": cfg.t,
        "ell": s.params.slack,
        "k": s.params.margin,
        "p": s.params.pick_cap,
        "q": s.params.accept_floor,
        "threshold": s.params.threshold,
        "trials": cfg.trials,
        "acceptance_rate": s.acceptance_rate,
        "bound": s.bound,
        "bound_density": s.bound_density,
        "asymptotic_density": s.asymptotic_density,
        "best": s.best,
        "mean": s.mean,
        "median": s.median,
        "seed": cfg.master_seed,
    }


def _run_safe(cfg: ExperimentConfig):
    try:
        return run_experiment(cfg), None
    except Exception as exc:  # noqa: BLE001 - error rows must not kill the sweep
        message = f"{type(exc).__name__}: {exc}".replace("\n", " ")
        return None, message


def sweep_results(configs, max_workers: int = 1):
    """Run every config, collecting ``(config, summary, error)`` in grid order.

    Failed configs yield an error string instead of a summary; the rest of
    the grid still runs.  Results do not depend on ``max_workers``.
    """
    configs = list(configs)
    if not configs:
        raise ValueError("sweep needs at least one config")
    if max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            outcomes = list(pool.map(_run_safe, configs))
    else:
        outcomes = [_run_safe(cfg) for cfg in configs]
    return [(cfg, summary, error) for cfg, (summary, error) in zip(configs, outcomes)]


def render_csv(results) -> str:
    """One CSV row per result in the fixed documented column order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for cfg, summary, error in results:
        if error is None:
            data = summary_to_dict(summary)
            data["error"] = ""
        else:
            data = {
                "family": cfg.family,
                "params": cfg.family_params(),
                "n": cfg.total_vertices(),
                "c": cfg.c,
                "t": cfg.t,
                "trials": cfg.trials,
                "seed": cfg.master_seed,
                "error": error,
            }
        writer.writerow([data.get(col, "") if data.get(col) is not None else "" for col in CSV_COLUMNS])
    return buf.getvalue()


def render_json(results) -> str:
    """JSON document for the same results (timing deliberately excluded)."""
    docs = []
    for cfg, summary, error in results:
        if error is None:
            docs.append(summary_to_dict(summary))
        else:
            docs.append({
                "family": cfg.family,
                "params": cfg.family_params(),
                "c": cfg.c,
                "t": cfg.t,
                "trials": cfg.trials,
                "seed": cfg.master_seed,
                "error": error,
            })
    return json.dumps(docs, indent=2) + "\n"


def sweep(configs, max_workers: int = 1) -> str:
    """Run the grid and return the CSV text."""
    return render_csv(sweep_results(configs, max_workers=max_workers))


def config_from_dict(obj: dict) -> ExperimentConfig:
    known = {f.name for f in dataclasses.fields(ExperimentConfig)}
    unknown = sorted(set(obj) - known)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(unknown)}")
    data = dict(obj)
    if data.get("parts") is not None:
        data["parts"] = tuple(int(p) for p in data["parts"])
    return ExperimentConfig(**data)


def configs_from_json(text: str) -> list[ExperimentConfig]:
    """Parse one JSON config object, or an array of them for a sweep."""
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ValueError("config file must hold a JSON object or array")
    return [config_from_dict(obj) for obj in data]

"""Config-driven ensemble experiments with reproducible CSV output.

A config is a flat key = value text file with one canonical serialization,
so identical configs produce byte-identical artifacts.  Trials may run on a
thread pool; every trial derives its own generator stream from (seed, trial
index), and rows are assembled in deterministic order no matter which worker
finished first.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

from .engine import (
    DEFAULT_WORK_BUDGET,
    WorkBudgetExceeded,
    count_dominating_exact,
    domination_number,
    estimate_dominating_fraction,
)
from .generate import ensemble_epsilon, erdos_renyi, gamma3_extremal
from .graph import Graph
from .moments import expected_count, variance_exact
from .rng import derive_seed

CSV_COLUMNS = (
    "seed",
    "n",
    "gamma_target",
    "epsilon",
    "p",
    "gamma_measured",
    "k",
    "dominating_count",
    "fraction",
    "formula_expected",
    "formula_sd",
    "elapsed_ms",
)

BUDGET_MARKER = "budget-exceeded"

_MODELS = ("er", "gjj")
_MODES = ("exact", "sample")


class ConfigError(ValueError):
    """Invalid experiment configuration; the message names the field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"config field '{field}': {message}")


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    gamma_target: int
    n_list: tuple[int, ...]
    trials: int
    seed: int
    k_list: tuple[int, ...]
    mode: str
    delta: float | None = None
    trials_per_graph: int | None = None
    p: float | None = None
    epsilon: float | None = None

    def __post_init__(self):
        _validate_config(self)

    def effective_epsilon(self, n: int) -> float | None:
        """Edge-absence rate used for model 'er' at this n; None for 'gjj'."""
        if self.model != "er":
            return None
        if self.epsilon is not None:
            return self.epsilon
        if self.p is not None:
            return 1.0 - self.p
        delta = 1.0 if self.delta is None else self.delta
        return ensemble_epsilon(self.gamma_target, n, delta)


def _validate_config(cfg: ExperimentConfig) -> None:
    if cfg.model not in _MODELS:
        raise ConfigError("model", f"expected one of {_MODELS}, got {cfg.model!r}")
    if cfg.mode not in _MODES:
        raise ConfigError("mode", f"expected one of {_MODES}, got {cfg.mode!r}")
    if not cfg.n_list:
        raise ConfigError("n", "at least one vertex count is required")
    for n in cfg.n_list:
        if not 2 <= n <= 4096:
            raise ConfigError("n", f"each n must be in [2, 4096], got {n}")
    if cfg.model == "gjj":
        if cfg.gamma_target != 3:
            raise ConfigError(
                "gamma_target", f"model gjj always has target 3, got {cfg.gamma_target}"
            )
        for n in cfg.n_list:
            if n % 3 != 0 or n < 9:
                raise ConfigError("n", f"model gjj needs n divisible by 3 and >= 9, got {n}")
        for field in ("delta", "p", "epsilon"):
            if getattr(cfg, field) is not None:
                raise ConfigError(field, "not meaningful for model gjj")
    else:
        if cfg.gamma_target < 2:
            raise ConfigError("gamma_target", f"must be >= 2, got {cfg.gamma_target}")
        if cfg.p is not None and cfg.epsilon is not None:
            raise ConfigError("epsilon", "give at most one of p and epsilon")
        if cfg.p is not None and not 0.0 <= cfg.p <= 1.0:
            raise ConfigError("p", f"must be in [0, 1], got {cfg.p}")
        if cfg.epsilon is not None and not 0.0 <= cfg.epsilon <= 1.0:
            raise ConfigError("epsilon", f"must be in [0, 1], got {cfg.epsilon}")
        if cfg.delta is not None and cfg.delta <= 0:
            raise ConfigError("delta", f"must be > 0, got {cfg.delta}")
        if cfg.delta is not None and (cfg.p is not None or cfg.epsilon is not None):
            raise ConfigError("delta", "not meaningful when p or epsilon is fixed")
    if cfg.trials < 1:
        raise ConfigError("trials", f"must be >= 1, got {cfg.trials}")
    if cfg.seed < 0:
        raise ConfigError("seed", f"must be >= 0, got {cfg.seed}")
    if not cfg.k_list:
        raise ConfigError("k_list", "at least one subset size is required")
    for k in cfg.k_list:
        if k < 1:
            raise ConfigError("k_list", f"each k must be >= 1, got {k}")
        for n in cfg.n_list:
            if k > n:
                raise ConfigError("k_list", f"k={k} exceeds n={n}")
    if cfg.mode == "sample":
        if cfg.trials_per_graph is None or cfg.trials_per_graph < 1:
            raise ConfigError(
                "trials_per_graph", "mode sample needs trials_per_graph >= 1"
            )
    elif cfg.trials_per_graph is not None:
        raise ConfigError("trials_per_graph", "only meaningful with mode sample")


# Canonical key order for serialization; optional keys are omitted when unset.
_CONFIG_KEYS = (
    "model",
    "gamma_target",
    "n",
    "delta",
    "trials",
    "seed",
    "k_list",
    "mode",
    "trials_per_graph",
    "p",
    "epsilon",
)

_INT_FIELDS = {"gamma_target", "trials", "seed", "trials_per_graph"}
_FLOAT_FIELDS = {"delta", "p", "epsilon"}
_LIST_FIELDS = {"n", "k_list"}


def parse_config(text: str) -> ExperimentConfig:
    """Parse the flat key = value format ('#' comments, blank lines ignored)."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError("(line)", f"line {lineno} is not 'key = value': {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(key, "unknown key")
        if key in raw:
            raise ConfigError(key, "duplicate key")
        if not value:
            raise ConfigError(key, "empty value")
        raw[key] = value
    for required in ("model", "gamma_target", "n", "trials", "seed", "k_list", "mode"):
        if required not in raw:
            raise ConfigError(required, "missing required key")

    def parse_int(field: str, value: str) -> int:
        try:
            return int(value)
        except ValueError:
            raise ConfigError(field, f"expected an integer, got {value!r}") from None

    def parse_float(field: str, value: str) -> float:
        try:
            return float(value)
        except ValueError:
            raise ConfigError(field, f"expected a number, got {value!r}") from None

    def parse_list(field: str, value: str) -> tuple[int, ...]:
        parts = [p.strip() for p in value.split(",")]
        if any(not p for p in parts):
            raise ConfigError(field, f"malformed integer list {value!r}")
        return tuple(parse_int(field, p) for p in parts)

    return ExperimentConfig(
        model=raw["model"],
        gamma_target=parse_int("gamma_target", raw["gamma_target"]),
        n_list=parse_list("n", raw["n"]),
        trials=parse_int("trials", raw["trials"]),
        seed=parse_int("seed", raw["seed"]),
        k_list=parse_list("k_list", raw["k_list"]),
        mode=raw["mode"],
        delta=parse_float("delta", raw["delta"]) if "delta" in raw else None,
        trials_per_graph=(
            parse_int("trials_per_graph", raw["trials_per_graph"])
            if "trials_per_graph" in raw
            else None
        ),
        p=parse_float("p", raw["p"]) if "p" in raw else None,
        epsilon=parse_float("epsilon", raw["epsilon"]) if "epsilon" in raw else None,
    )


def serialize_config(cfg: ExperimentConfig) -> str:
    """Canonical text form; parse(serialize(cfg)) == cfg."""
    values = {
        "model": cfg.model,
        "gamma_target": cfg.gamma_target,
        "n": ",".join(str(n) for n in cfg.n_list),
        "delta": cfg.delta,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "k_list": ",".join(str(k) for k in cfg.k_list),
        "mode": cfg.mode,
        "trials_per_graph": cfg.trials_per_graph,
        "p": cfg.p,
        "epsilon": cfg.epsilon,
    }
    lines = []
    for key in _CONFIG_KEYS:
        val = values[key]
        if val is None:
            continue
        lines.append(f"{key} = {_format_value(val)}")
    return "\n".join(lines) + "\n"


def _format_value(val) -> str:
    # repr of a float is its shortest round-tripping decimal form.
    return repr(val) if isinstance(val, float) else str(val)


def read_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def write_config(cfg: ExperimentConfig, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_config(cfg))


@dataclass(frozen=True)
class ExperimentRow:
    seed: int
    n: int
    gamma_target: int
    epsilon: float | None
    p: float | None
    gamma_measured: int
    k: int
    dominating_count: int | None
    fraction: float | None
    formula_expected: float | None
    formula_sd: float | None
    elapsed_ms: float
    error: str | None = None


def _make_graph(cfg: ExperimentConfig, n: int, trial_seed: int, backend: str | None) -> Graph:
    if cfg.model == "gjj":
        return gamma3_extremal(n)
    eps = cfg.effective_epsilon(n)
    return erdos_renyi(n, 1.0 - eps, trial_seed, backend=backend)


def _run_trial(
    cfg: ExperimentConfig,
    n: int,
    trial_seed: int,
    budget: int,
    backend: str | None,
) -> list[ExperimentRow]:
    graph = _make_graph(cfg, n, trial_seed, backend)
    eps = cfg.effective_epsilon(n)
    p = None if eps is None else 1.0 - eps
    gamma_measured = domination_number(graph)
    rows = []
    for k in cfg.k_list:
        error = None
        dominating: int | None = None
        fraction: float | None = None
        start = time.perf_counter()
        if cfg.mode == "exact":
            try:
                result = count_dominating_exact(graph, k, budget=budget, backend=backend)
                dominating = result.dominating
                fraction = result.fraction
            except WorkBudgetExceeded:
                error = BUDGET_MARKER
        else:
            est = estimate_dominating_fraction(
                graph, k, cfg.trials_per_graph, derive_seed(trial_seed, k)
            )
            fraction = est.point
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        formula_expected = None
        formula_sd = None
        if eps is not None:
            formula_expected = expected_count(n, k, eps)
            formula_sd = math.sqrt(variance_exact(n, k, eps))
        rows.append(
            ExperimentRow(
                seed=trial_seed,
                n=n,
                gamma_target=cfg.gamma_target,
                epsilon=eps,
                p=p,
                gamma_measured=gamma_measured,
                k=k,
                dominating_count=dominating,
                fraction=fraction,
                formula_expected=formula_expected,
                formula_sd=formula_sd,
                elapsed_ms=elapsed_ms,
                error=error,
            )
        )
    return rows


def run_experiment(
    cfg: ExperimentConfig,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_WORK_BUDGET,
    backend: str | None = None,
) -> list[ExperimentRow]:
    """Run all trials and return rows in deterministic (n, trial, k) order.

    Trial t of the i-th vertex count uses the derived stream
    derive_seed(seed, i * trials + t), so row content is independent of the
    worker count; only elapsed_ms varies between runs.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    tasks = [
        (i, t, derive_seed(cfg.seed, i * cfg.trials + t))
        for i in range(len(cfg.n_list))
        for t in range(cfg.trials)
    ]
    results: dict[tuple[int, int], list[ExperimentRow]] = {}
    if jobs == 1:
        for i, t, ts in tasks:
            results[(i, t)] = _run_trial(cfg, cfg.n_list[i], ts, budget, backend)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = {
                (i, t): pool.submit(_run_trial, cfg, cfg.n_list[i], ts, budget, backend)
                for i, t, ts in tasks
            }
            for key, fut in futures.items():
                results[key] = fut.result()
    rows: list[ExperimentRow] = []
    for i in range(len(cfg.n_list)):
        for t in range(cfg.trials):
            rows.extend(results[(i, t)])
    return rows


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def rows_to_csv(rows: Iterable[ExperimentRow], *, timing: bool = False) -> str:
    """Render rows as CSV text.

    elapsed_ms is blanked by default so identical configs yield byte-identical
    files; pass timing=True to include wall-clock numbers (breaks the
    byte-reproducibility contract, useful for perf runs).  Counts are decimal
    strings; a row whose exact count hit the work budget carries the marker in
    the dominating_count column.
    """
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        cells = [
            str(row.seed),
            str(row.n),
            str(row.gamma_target),
            _format_cell(row.epsilon),
            _format_cell(row.p),
            str(row.gamma_measured),
            str(row.k),
            BUDGET_MARKER if row.error == BUDGET_MARKER else _format_cell(row.dominating_count),
            _format_cell(row.fraction),
            _format_cell(row.formula_expected),
            _format_cell(row.formula_sd),
            _format_cell(row.elapsed_ms) if timing else "",
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_rows_csv(rows: Iterable[ExperimentRow], out: "str | IO[str]", *, timing: bool = False) -> None:
    text = rows_to_csv(rows, timing=timing)
    if isinstance(out, str):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)

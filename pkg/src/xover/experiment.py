"""Statistical comparison harness and a small generational GA driver.

A cell is one ``(operator, alpha, test function)`` triple. Each cell owns a
random source seeded from ``derive_cell_seed`` so results do not depend on
the order in which cells run or on how many run in parallel.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import benchmarks
from .core import CrossoverParams, RandomSource, derive_cell_seed
from .real import (
    blx_crossover,
    blx_sample,
    bx_crossover,
    bx_gamma,
    lpx,
    lpx_pair,
    rspx,
    sax,
    sbx,
    sbx_crossover,
    sbx_spread,
)

Triple = tuple[str, float, str]


class NumericError(ArithmeticError):
    """A cell produced a non-finite value."""


class CellError(RuntimeError):
    def __init__(self, triple: Triple, cause: BaseException):
        self.triple = triple
        self.cause = cause
        op, alpha, tf = triple
        super().__init__(f"cell (operator={op}, alpha={alpha!r}, tf={tf}): {cause}")


@dataclass(frozen=True)
class SummaryStats:
    sum: float
    mean: float
    sd: float
    count: int


def summarize(values: Sequence[float]) -> SummaryStats:
    """Sum, mean and population standard deviation."""
    n = len(values)
    if n == 0:
        raise ValueError("summarize needs at least one value")
    try:
        total = math.fsum(values)
        mean = total / n
        sd = math.sqrt(math.fsum((v - mean) * (v - mean) for v in values) / n)
    except (OverflowError, ValueError) as exc:
        raise NumericError(f"summary statistics overflowed: {exc}") from exc
    if not all(math.isfinite(x) for x in (total, mean, sd)):
        raise NumericError("summary statistics overflowed")
    return SummaryStats(total, mean, sd, n)


# Gene-level forms: (x1, x2, alpha, eta, rng) -> (offspring1, offspring2)
GeneOperator = Callable[[float, float, float, float, RandomSource], tuple[float, float]]

GENE_OPERATORS: dict[str, GeneOperator] = {
    "bx": lambda x1, x2, a, eta, rng: bx_gamma(x1, x2, a, rng.open_unit()),
    "sbx": lambda x1, x2, a, eta, rng: sbx(x1, x2, sbx_spread(rng.open_unit(), eta)),
    "lpx": lambda x1, x2, a, eta, rng: lpx_pair(x1, x2, a),
    "blx": lambda x1, x2, a, eta, rng: blx_sample(x1, x2, a, rng),
    "sax": lambda x1, x2, a, eta, rng: (sax(x1, x2, a),) * 2,
}


def check_alpha(operator_id: str, alpha: float) -> None:
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha}")
    if operator_id == "lpx" and not -1.0 <= alpha <= 1.0:
        raise ValueError(f"lpx needs alpha in [-1, 1], got {alpha}")
    if operator_id in ("bx", "blx") and alpha < 0:
        raise ValueError(f"{operator_id} needs alpha >= 0, got {alpha}")


@dataclass(frozen=True)
class ExperimentConfig:
    operator_ids: tuple[str, ...] = ("bx", "sbx", "lpx")
    alphas: tuple[float, ...] = (0.2, 0.5, 0.7)
    tf_ids: tuple[str, ...] = ("tf1", "tf3", "tf7")
    generations: int = 100
    gene_low: float = 0.0
    gene_high: float = 1.0
    eta: float = 2.0
    base_seed: int = 0
    series: bool = False

    def __post_init__(self):
        # normalise lists passed by callers
        object.__setattr__(self, "operator_ids", tuple(o.lower() for o in self.operator_ids))
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "tf_ids", tuple(t.lower() for t in self.tf_ids))
        if not (self.operator_ids and self.alphas and self.tf_ids):
            raise ValueError("operator, alpha and test-function lists must be non-empty")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        if not self.gene_low <= self.gene_high:
            raise ValueError("gene_low must not exceed gene_high")
        if self.eta < 0:
            raise ValueError("eta must be >= 0")
        for op in self.operator_ids:
            if op not in GENE_OPERATORS:
                raise ValueError(f"unknown operator {op!r}; expected one of {sorted(GENE_OPERATORS)}")
            for a in self.alphas:
                check_alpha(op, a)
        for tf in self.tf_ids:
            benchmarks.get(tf)

    def triples(self) -> list[Triple]:
        return [(op, a, tf) for op in self.operator_ids for a in self.alphas for tf in self.tf_ids]


@dataclass(frozen=True)
class SeriesRecord:
    operator: str
    alpha: float
    tf: str
    generation: int
    parent1: float
    parent2: float
    offspring1: float
    offspring2: float
    value: float


@dataclass
class CellResult:
    stats: SummaryStats
    seed: int
    series: list[SeriesRecord] = field(default_factory=list)


def _simulate_cell(operator_id: str, alpha: float, tf_id: str, config: ExperimentConfig) -> CellResult:
    operator = GENE_OPERATORS[operator_id]
    check_alpha(operator_id, alpha)
    evaluate = benchmarks.get(tf_id)
    seed = derive_cell_seed(config.base_seed, operator_id, alpha, tf_id)
    rng = RandomSource(seed)

    values, records = [], []
    for g in range(1, config.generations + 1):
        x1 = rng.uniform_in(config.gene_low, config.gene_high)
        x2 = rng.uniform_in(config.gene_low, config.gene_high)
        try:
            o1, o2 = operator(x1, x2, alpha, config.eta, rng)
            if not (math.isfinite(o1) and math.isfinite(o2)):
                raise NumericError(f"non-finite offspring at generation {g}")
            value = evaluate((o1, o2), rng)
        except OverflowError as exc:
            raise NumericError(f"overflow at generation {g}: {exc}") from exc
        if not math.isfinite(value):
            raise NumericError(f"non-finite {tf_id} value at generation {g}")
        values.append(value)
        if config.series:
            records.append(SeriesRecord(operator_id, alpha, tf_id, g, x1, x2, o1, o2, value))
    return CellResult(summarize(values), seed, records)


def run_cell(operator_id: str, alpha: float, tf_id: str, config: ExperimentConfig) -> SummaryStats:
    """Statistics of ``config.generations`` offspring evaluations for one cell.

    Each generation draws a parent gene pair from
    ``[config.gene_low, config.gene_high)``, recombines it with the
    operator's gene-level form and evaluates the test function on the two
    offspring genes.
    """
    return _simulate_cell(operator_id.lower(), float(alpha), tf_id.lower(), config).stats


@dataclass
class ExperimentReport:
    cells: dict[Triple, SummaryStats]
    seeds: dict[Triple, int]
    series: Optional[list[SeriesRecord]] = None


def _cell_job(args: tuple[Triple, ExperimentConfig]) -> CellResult:
    (op, alpha, tf), config = args
    try:
        return _simulate_cell(op, alpha, tf, config)
    except Exception as exc:
        raise CellError((op, alpha, tf), exc) from exc


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Run every configured cell; ``workers > 1`` spreads cells over processes."""
    triples = config.triples()
    jobs = [(t, config) for t in triples]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_cell_job, jobs))
    else:
        results = [_cell_job(j) for j in jobs]

    report = ExperimentReport(
        cells={t: r.stats for t, r in zip(triples, results)},
        seeds={t: r.seed for t, r in zip(triples, results)},
    )
    if config.series:
        report.series = [rec for r in results for rec in r.series]
    return report


# -- generational GA ------------------------------------------------------------

Crossover = Callable[[tuple, tuple, RandomSource], tuple[tuple, tuple]]


def _ga_operator(operator_id: str, alpha: Optional[float], eta: float) -> Crossover:
    op = operator_id.lower()
    if op == "bx":
        a = 0.5 if alpha is None else alpha
        return lambda p1, p2, rng: bx_crossover(p1, p2, a, rng)
    if op == "blx":
        a = 0.5 if alpha is None else alpha
        return lambda p1, p2, rng: blx_crossover(p1, p2, a, rng)
    if op == "sbx":
        return lambda p1, p2, rng: sbx_crossover(p1, p2, eta, rng)
    if op == "lpx":
        params = CrossoverParams(alpha=alpha, eta=eta, mode="all")
        return lambda p1, p2, rng: lpx(p1, p2, params, rng)
    if op == "rspx":
        def cross(p1, p2, rng):
            if len(p1) < 2:
                return p1, p2
            return rspx(p1, p2, rng.int_below(len(p1) - 1) + 1)
        return cross
    raise ValueError(f"unknown GA operator {operator_id!r}; expected one of {GA_OPERATORS}")


GA_OPERATORS = ("bx", "blx", "sbx", "lpx", "rspx")


def evolve(
    operator_id: str,
    tf_id: str,
    dim: int,
    pop_size: int,
    generations: int,
    seed: int,
    alpha: Optional[float] = None,
    eta: float = 2.0,
    gene_low: float = 0.0,
    gene_high: float = 1.0,
) -> list[float]:
    """Minimise a test function with a crossover-only generational GA.

    Binary tournaments pick parents, the crossover recombines every gene,
    and the best individual survives unchanged. Entry ``g`` of the returned
    trace is the best fitness of generation ``g + 1``; the first entry is
    the random initial population. Offspring with non-finite genes are
    replaced by a copy of their first parent.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if pop_size < 4 or pop_size % 2:
        raise ValueError("pop_size must be an even number >= 4")
    if generations < 1:
        raise ValueError("generations must be >= 1")
    if alpha is not None:
        check_alpha(operator_id.lower(), alpha)
    if not gene_low <= gene_high:
        raise ValueError("gene_low must not exceed gene_high")
    cross = _ga_operator(operator_id, alpha, eta)
    objective = benchmarks.get(tf_id)
    rng = RandomSource(seed)

    def evaluate(x, rng):
        try:
            value = objective(x, rng)
        except OverflowError:
            return math.inf
        return value if math.isfinite(value) else math.inf

    pop = [tuple(rng.uniform_in(gene_low, gene_high) for _ in range(dim)) for _ in range(pop_size)]
    fit = [evaluate(x, rng) for x in pop]
    trace = [min(fit)]

    def tournament() -> int:
        i, j = rng.int_below(pop_size), rng.int_below(pop_size)
        return i if fit[i] <= fit[j] else j

    for _ in range(generations - 1):
        elite = min(range(pop_size), key=fit.__getitem__)
        new_pop, new_fit = [pop[elite]], [fit[elite]]
        while len(new_pop) < pop_size:
            a, b = pop[tournament()], pop[tournament()]
            try:
                children = cross(a, b, rng)
            except OverflowError:
                children = (a, b)
            for child in children:
                if len(new_pop) == pop_size:
                    break
                if not all(map(math.isfinite, child)):
                    child = a
                new_pop.append(child)
                new_fit.append(evaluate(child, rng))
        pop, fit = new_pop, new_fit
        trace.append(min(fit))
    return trace

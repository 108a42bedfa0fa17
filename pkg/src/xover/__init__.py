"""Crossover operators for binary, real-coded and permutation chromosomes,
with the Lagrangian problem crossover (LPX), unimodal benchmarks and a
seeded comparison harness."""
from .binary import (
    half_uniform,
    k_point,
    shuffle_crossover,
    single_point,
    three_parent,
    uniform_coin,
    uniform_masked,
)
from .benchmarks import tf1, tf3, tf7
from .core import (
    ChromosomeError,
    CrossoverParams,
    RandomSource,
    derive_cell_seed,
    validate_permutation,
)
from .experiment import (
    ExperimentConfig,
    ExperimentReport,
    SummaryStats,
    evolve,
    run_cell,
    run_experiment,
    summarize,
)
from .permutation import SegmentRange, cx, pmx
from .real import (
    LpxComponents,
    blx_crossover,
    blx_range,
    blx_sample,
    bx_crossover,
    bx_gamma,
    lpx,
    lpx_components,
    lpx_pair,
    rspx,
    sax,
    sax_crossover,
    sbx,
    sbx_crossover,
    sbx_density,
    sbx_spread,
    wax,
    wax_crossover,
)

__version__ = "0.1.0"

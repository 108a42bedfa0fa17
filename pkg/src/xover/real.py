"""Real-coded crossover operators and the Lagrangian problem crossover (LPX).

Each operator has a gene-level form working on one gene pair ``(g1, g2)``
and, where it makes sense, a chromosome-level form. Chromosome-level forms
take a 1-based gene index ``k``; ``k=None`` applies the operator to every
gene.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    ChromosomeError,
    CrossoverParams,
    RandomSource,
    RealChromosome,
    as_real,
    check_cut,
    check_gene_index,
    check_same_length,
)

Pair = tuple[RealChromosome, RealChromosome]


def _finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ChromosomeError(f"non-finite input {v!r}")


def _parents(p1, p2) -> tuple[RealChromosome, RealChromosome, int]:
    a, b = as_real(p1, "parent 1"), as_real(p2, "parent 2")
    return a, b, check_same_length(a, b)


def _positions(k: Optional[int], n: int) -> range:
    if k is None:
        return range(n)
    check_gene_index(k, n)
    return range(k - 1, k)


def rspx(p1: Sequence[float], p2: Sequence[float], cut: int) -> Pair:
    """Real single-point crossover."""
    a, b, n = _parents(p1, p2)
    check_cut(cut, n)
    return a[:cut] + b[cut:], b[:cut] + a[cut:]


# -- arithmetic crossovers ---------------------------------------------------

def sax(g1: float, g2: float, alpha: float) -> float:
    """Single arithmetic crossover value ``(1 - alpha) * g1 + alpha * g2``."""
    _finite(g1, g2, alpha)
    return (1.0 - alpha) * g1 + alpha * g2


def sax_crossover(p1: Sequence[float], p2: Sequence[float], k: int, alpha: float) -> Pair:
    """Both offspring receive the SAX value at gene ``k``; other genes stay put."""
    a, b, n = _parents(p1, p2)
    check_gene_index(k, n)
    v = sax(a[k - 1], b[k - 1], alpha)
    o1, o2 = list(a), list(b)
    o1[k - 1] = o2[k - 1] = v
    return tuple(o1), tuple(o2)


def wax(g1: float, g2: float, alpha_m: float, beta_m: float) -> float:
    """Whole arithmetic (linear) crossover value ``alpha_m * g1 + beta_m * g2``."""
    _finite(g1, g2, alpha_m, beta_m)
    return alpha_m * g1 + beta_m * g2


def wax_crossover(
    p1: Sequence[float],
    p2: Sequence[float],
    coefficients: Sequence[tuple[float, float]],
    k: Optional[int] = None,
) -> tuple[RealChromosome, ...]:
    """One offspring per ``(alpha_m, beta_m)`` pair.

    Genes outside the recombined positions are copied from parent 1.
    """
    a, b, n = _parents(p1, p2)
    if not coefficients:
        raise ChromosomeError("at least one (alpha, beta) coefficient pair is required")
    positions = _positions(k, n)
    children = []
    for alpha_m, beta_m in coefficients:
        child = list(a)
        for i in positions:
            child[i] = wax(a[i], b[i], alpha_m, beta_m)
        children.append(tuple(child))
    return tuple(children)


# -- blend crossover ----------------------------------------------------------

def blx_range(g1: float, g2: float, alpha: float) -> tuple[float, float]:
    """BLX-alpha sampling interval extending ``alpha * |g2 - g1|`` past both parents."""
    _finite(g1, g2, alpha)
    if alpha < 0:
        raise ChromosomeError(f"alpha must be >= 0, got {alpha}")
    lo, hi = min(g1, g2), max(g1, g2)
    d = hi - lo
    return lo - alpha * d, hi + alpha * d


def blx_sample(g1: float, g2: float, alpha: float, rng: RandomSource) -> tuple[float, float]:
    lo, hi = blx_range(g1, g2, alpha)
    return rng.uniform_in(lo, hi), rng.uniform_in(lo, hi)


def blx_crossover(
    p1: Sequence[float],
    p2: Sequence[float],
    alpha: float,
    rng: RandomSource,
    k: Optional[int] = None,
) -> Pair:
    a, b, n = _parents(p1, p2)
    o1, o2 = list(a), list(b)
    for i in _positions(k, n):
        o1[i], o2[i] = blx_sample(a[i], b[i], alpha, rng)
    return tuple(o1), tuple(o2)


def bx_gamma(g1: float, g2: float, alpha: float, r: float) -> tuple[float, float]:
    """Blend crossover in its gamma form, ``gamma = (1 + 2 alpha) r - alpha``."""
    _finite(g1, g2, alpha, r)
    if not 0.0 < r < 1.0:
        raise ChromosomeError(f"r must lie in (0, 1), got {r}")
    gamma = (1.0 + 2.0 * alpha) * r - alpha
    return (1.0 - gamma) * g1 + gamma * g2, (1.0 - gamma) * g2 + gamma * g1


def bx_crossover(
    p1: Sequence[float],
    p2: Sequence[float],
    alpha: float,
    rng: Optional[RandomSource] = None,
    k: Optional[int] = None,
    r: Optional[float] = None,
) -> Pair:
    """Gamma-form blend crossover; a fresh ``r`` is drawn per gene unless given."""
    if r is None and rng is None:
        raise ChromosomeError("bx_crossover needs either r or a random source")
    a, b, n = _parents(p1, p2)
    o1, o2 = list(a), list(b)
    for i in _positions(k, n):
        ri = rng.open_unit() if r is None else r
        o1[i], o2[i] = bx_gamma(a[i], b[i], alpha, ri)
    return tuple(o1), tuple(o2)


# -- simulated binary crossover ----------------------------------------------

def sbx_spread(mu: float, eta: float) -> float:
    """Spread factor drawn by inverting the SBX density at ``mu``."""
    _finite(mu, eta)
    if not 0.0 < mu < 1.0:
        raise ChromosomeError(f"mu must lie in (0, 1), got {mu}")
    if eta < 0:
        raise ChromosomeError(f"eta must be >= 0, got {eta}")
    e = 1.0 / (eta + 1.0)
    if mu < 0.5:
        return (2.0 * mu) ** e
    return (1.0 / (2.0 * (1.0 - mu))) ** e


def sbx(
    g1: float,
    g2: float,
    spread: float,
    clamp: Optional[tuple[float, float]] = None,
) -> tuple[float, float]:
    """Offspring at ``mid -/+ spread * |g2 - g1| / 2``.

    Results may fall outside the parents' range; ``clamp=(lo, hi)`` clips
    them as an optional post-step.
    """
    _finite(g1, g2, spread)
    if spread <= 0:
        raise ChromosomeError(f"spread must be > 0, got {spread}")
    s, d = g1 + g2, abs(g2 - g1)
    o1, o2 = 0.5 * (s - spread * d), 0.5 * (s + spread * d)
    if clamp is not None:
        lo, hi = clamp
        o1, o2 = min(max(o1, lo), hi), min(max(o2, lo), hi)
    return o1, o2


def sbx_density(spread: float, eta: float) -> float:
    """Probability density of the spread factor (contracting below 1, expanding above)."""
    _finite(spread, eta)
    if spread <= 0 or eta < 0:
        raise ChromosomeError("sbx_density needs spread > 0 and eta >= 0")
    if spread <= 1.0:
        return 0.5 * (eta + 1.0) * spread ** eta
    return 0.5 * (eta + 1.0) / spread ** (eta + 2.0)


def sbx_crossover(
    p1: Sequence[float],
    p2: Sequence[float],
    eta: float,
    rng: Optional[RandomSource] = None,
    k: Optional[int] = None,
    mu: Optional[float] = None,
    clamp: Optional[tuple[float, float]] = None,
) -> Pair:
    """SBX over the selected genes; a fresh ``mu`` is drawn per gene unless given."""
    if mu is None and rng is None:
        raise ChromosomeError("sbx_crossover needs either mu or a random source")
    a, b, n = _parents(p1, p2)
    o1, o2 = list(a), list(b)
    for i in _positions(k, n):
        spread = sbx_spread(rng.open_unit() if mu is None else mu, eta)
        o1[i], o2[i] = sbx(a[i], b[i], spread, clamp)
    return tuple(o1), tuple(o2)


# -- Lagrangian problem crossover ---------------------------------------------

@dataclass(frozen=True)
class LpxComponents:
    """Terms of the Lagrangian ``f - alpha * (g1 + g2)`` for one ordered gene pair."""

    f_value: float
    g1_value: float
    g2_value: float
    alpha: float

    @property
    def value(self) -> float:
        return self.f_value - (self.alpha * self.g1_value + self.alpha * self.g2_value)


def _check_lpx_alpha(alpha: float) -> None:
    if not -1.0 <= alpha <= 1.0:
        raise ChromosomeError(f"LPX multiplier alpha must lie in [-1, 1], got {alpha}")


def lpx_components(x1: float, x2: float, alpha: float) -> LpxComponents:
    """Objective ``(x1 - x2)^2 + (x2 - 1)^2`` with constraints
    ``x1 + 2 x2 - 1`` and ``2 x1 + x2 - 1``."""
    _finite(x1, x2, alpha)
    _check_lpx_alpha(alpha)
    d, e = x1 - x2, x2 - 1.0
    # products overflow to inf; ** would raise
    return LpxComponents(
        f_value=d * d + e * e,
        g1_value=x1 + 2.0 * x2 - 1.0,
        g2_value=2.0 * x1 + x2 - 1.0,
        alpha=alpha,
    )


def lpx_pair(x1: float, x2: float, alpha: float) -> tuple[float, float]:
    """Two offspring genes; the second uses the same Lagrangian with the parents exchanged."""
    return lpx_components(x1, x2, alpha).value, lpx_components(x2, x1, alpha).value


def lpx(
    p1: Sequence[float],
    p2: Sequence[float],
    params: CrossoverParams = CrossoverParams(),
    rng: Optional[RandomSource] = None,
) -> Pair:
    """Chromosome-level LPX.

    ``params.mode == "single"`` recombines only gene ``params.gene_index``
    (drawn uniformly when absent) and copies the rest from each offspring's
    own parent; ``"all"`` recombines every gene with one shared multiplier.
    A missing ``params.alpha`` is drawn uniformly from [-1, 1].
    """
    a, b, n = _parents(p1, p2)
    needs_rng = params.alpha is None or (params.mode == "single" and params.gene_index is None)
    if needs_rng and rng is None:
        raise ChromosomeError("lpx needs a random source to draw alpha or the gene index")

    alpha = params.alpha if params.alpha is not None else rng.uniform_in(-1.0, 1.0)
    _check_lpx_alpha(alpha)
    if params.mode == "all":
        positions = range(n)
    else:
        k = params.gene_index if params.gene_index is not None else rng.int_below(n) + 1
        positions = _positions(k, n)

    o1, o2 = list(a), list(b)
    for i in positions:
        o1[i], o2[i] = lpx_pair(a[i], b[i], alpha)
    return tuple(o1), tuple(o2)

"""Chromosome representations, validation and the seeded random source.

Chromosomes are plain sequences. Operators accept any sequence and return
tuples, so results are immutable and hashable. Gene positions exposed to
callers (cut points, gene indices, segments) are 1-based.
"""
from __future__ import annotations

import hashlib
import math
import random
import struct
from dataclasses import dataclass
from typing import Optional, Sequence

RealChromosome = tuple[float, ...]
BitChromosome = tuple[int, ...]
PermutationChromosome = tuple[int, ...]

MASK64 = (1 << 64) - 1


class ChromosomeError(ValueError):
    """Raised when a chromosome or an operator argument is malformed."""


def as_real(genes: Sequence[float], name: str = "chromosome") -> RealChromosome:
    out = tuple(float(g) for g in genes)
    if not out:
        raise ChromosomeError(f"{name} must have at least one gene")
    if not all(math.isfinite(g) for g in out):
        raise ChromosomeError(f"{name} contains a non-finite gene")
    return out


def as_bits(genes: Sequence[int], name: str = "chromosome") -> BitChromosome:
    out = tuple(int(g) for g in genes)
    if not out:
        raise ChromosomeError(f"{name} must have at least one gene")
    if any(g not in (0, 1) or g != orig for g, orig in zip(out, genes)):
        raise ChromosomeError(f"{name} genes must be 0 or 1")
    return out


def validate_permutation(genes: Sequence[int]) -> bool:
    """True iff ``genes`` holds each label 1..n exactly once."""
    n = len(genes)
    if n == 0:
        return False
    seen = [False] * (n + 1)
    for g in genes:
        if isinstance(g, bool) or not isinstance(g, int) or not 1 <= g <= n or seen[g]:
            return False
        seen[g] = True
    return True


def as_permutation(genes: Sequence[int], name: str = "chromosome") -> PermutationChromosome:
    out = tuple(genes)
    if not validate_permutation(out):
        raise ChromosomeError(f"{name} is not a permutation of 1..{len(out)}")
    return out


def check_same_length(*parents: Sequence) -> int:
    n = len(parents[0])
    if any(len(p) != n for p in parents[1:]):
        raise ChromosomeError(
            "parent length mismatch: " + ", ".join(str(len(p)) for p in parents)
        )
    return n


def check_cut(cut: int, n: int) -> int:
    if n < 2:
        raise ChromosomeError("a cut point needs chromosomes of length >= 2")
    if not 1 <= cut <= n - 1:
        raise ChromosomeError(f"cut {cut} outside [1, {n - 1}]")
    return cut


def check_gene_index(k: int, n: int) -> int:
    if not 1 <= k <= n:
        raise ChromosomeError(f"gene index {k} outside [1, {n}]")
    return k


class RandomSource:
    """Seeded stream of draws; one owner at a time.

    Backed by the stdlib Mersenne Twister, whose output for a given integer
    seed is stable across platforms and Python versions.
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & MASK64
        self._rng = random.Random(self.seed)

    def unit_uniform(self) -> float:
        """Real in [0, 1)."""
        return self._rng.random()

    def open_unit(self) -> float:
        """Real in (0, 1); zero draws are rejected."""
        while True:
            u = self._rng.random()
            if u > 0.0:
                return u

    def uniform_in(self, lo: float, hi: float) -> float:
        """Real in [lo, hi); returns ``lo`` for a degenerate interval."""
        if hi < lo:
            raise ValueError(f"empty interval [{lo}, {hi})")
        if hi == lo:
            return lo
        x = lo + (hi - lo) * self._rng.random()
        # rounding can land exactly on hi
        return x if x < hi else math.nextafter(hi, lo)

    def bit(self, p: float) -> int:
        """1 with probability ``p``."""
        return 1 if self._rng.random() < p else 0

    def int_below(self, k: int) -> int:
        """Integer in [0, k)."""
        if k <= 0:
            raise ValueError("int_below needs k >= 1")
        return self._rng.randrange(k)

    def permutation(self, n: int) -> list[int]:
        """Uniform random ordering of range(n)."""
        order = list(range(n))
        self._rng.shuffle(order)
        return order

    def sample(self, population: Sequence, k: int) -> list:
        """``k`` distinct items chosen uniformly without replacement."""
        return self._rng.sample(list(population), k)


def derive_cell_seed(base_seed: int, operator_id: str, alpha: float, tf_id: str) -> int:
    """Mix an experiment cell's identity into a 64-bit seed.

    The first 8 bytes (little endian) of BLAKE2b over the base seed
    (8 bytes, masked to 64 bits), the IEEE-754 bytes of ``alpha`` and the
    lower-cased ids, each text field NUL-terminated.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(struct.pack("<Q", int(base_seed) & MASK64))
    h.update(struct.pack("<d", float(alpha)))
    h.update(operator_id.lower().encode() + b"\0")
    h.update(tf_id.lower().encode() + b"\0")
    return int.from_bytes(h.digest(), "little")


@dataclass(frozen=True)
class CrossoverParams:
    """Operator parameters; ``gene_index`` is 1-based."""

    alpha: Optional[float] = None
    eta: float = 2.0
    gene_index: Optional[int] = None
    mode: str = "single"

    def __post_init__(self):
        if self.eta < 0 or not math.isfinite(self.eta):
            raise ChromosomeError(f"eta must be a finite value >= 0, got {self.eta}")
        if self.mode not in ("single", "all"):
            raise ChromosomeError(f"mode must be 'single' or 'all', got {self.mode!r}")
        if self.alpha is not None and not math.isfinite(self.alpha):
            raise ChromosomeError("alpha must be finite")
        if self.gene_index is not None and self.gene_index < 1:
            raise ChromosomeError(f"gene index must be >= 1, got {self.gene_index}")

"""Crossover operators for bit-string chromosomes.

Cut positions are 1-based: a cut at ``c`` splits between gene ``c`` and
gene ``c + 1``.
"""
from __future__ import annotations

from typing import Sequence

from .core import (
    BitChromosome,
    ChromosomeError,
    RandomSource,
    as_bits,
    check_cut,
    check_same_length,
)

Pair = tuple[BitChromosome, BitChromosome]


def _parents(p1, p2) -> tuple[BitChromosome, BitChromosome, int]:
    a, b = as_bits(p1, "parent 1"), as_bits(p2, "parent 2")
    return a, b, check_same_length(a, b)


def single_point(p1: Sequence[int], p2: Sequence[int], cut: int) -> Pair:
    a, b, n = _parents(p1, p2)
    check_cut(cut, n)
    return a[:cut] + b[cut:], b[:cut] + a[cut:]


def k_point(p1: Sequence[int], p2: Sequence[int], cuts: Sequence[int]) -> Pair:
    """Alternate the source parent at every cut, starting from ``p1``."""
    a, b, n = _parents(p1, p2)
    cuts = list(cuts)
    if not cuts:
        raise ChromosomeError("at least one cut point is required")
    for c in cuts:
        check_cut(c, n)
    if any(x >= y for x, y in zip(cuts, cuts[1:])):
        raise ChromosomeError(f"cut points must be strictly increasing: {cuts}")

    o1, o2 = [], []
    bounds = [0, *cuts, n]
    for seg, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        src1, src2 = (a, b) if seg % 2 == 0 else (b, a)
        o1.extend(src1[lo:hi])
        o2.extend(src2[lo:hi])
    return tuple(o1), tuple(o2)


def uniform_masked(p1: Sequence[int], p2: Sequence[int], mask: Sequence[int]) -> Pair:
    """Offspring 1 takes ``p1`` where the mask is 1 and ``p2`` elsewhere.

    Covers both the coin-flip uniform crossover and the crossover-mask (UCM)
    variant: any mask built by the caller is accepted.
    """
    a, b, n = _parents(p1, p2)
    m = as_bits(mask, "mask")
    if len(m) != n:
        raise ChromosomeError(f"mask length {len(m)} != parent length {n}")
    o1 = tuple(x if bit else y for x, y, bit in zip(a, b, m))
    o2 = tuple(y if bit else x for x, y, bit in zip(a, b, m))
    return o1, o2


def uniform_coin(p1: Sequence[int], p2: Sequence[int], bias: float, rng: RandomSource) -> Pair:
    """Uniform crossover where each position favours ``p1`` with probability ``bias``."""
    if not 0.0 <= bias <= 1.0:
        raise ChromosomeError(f"bias {bias} outside [0, 1]")
    a, b, n = _parents(p1, p2)
    mask = [rng.bit(bias) for _ in range(n)]
    return uniform_masked(a, b, mask)


def half_uniform(p1: Sequence[int], p2: Sequence[int], rng: RandomSource) -> Pair:
    """HUX: swap exactly half (rounded down) of the differing positions."""
    a, b, _ = _parents(p1, p2)
    differing = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
    swap = set(rng.sample(differing, len(differing) // 2))
    o1 = tuple(y if i in swap else x for i, (x, y) in enumerate(zip(a, b)))
    o2 = tuple(x if i in swap else y for i, (x, y) in enumerate(zip(a, b)))
    return o1, o2


def shuffle_crossover(
    p1: Sequence[int],
    p2: Sequence[int],
    cut: int,
    rng: RandomSource,
    unshuffle: bool = True,
) -> Pair:
    """SHX with the two sides of the cut shuffled independently.

    Both parents share the same position permutation on each side, so the
    positional pairing of genes survives the shuffle.
    """
    a, b, n = _parents(p1, p2)
    check_cut(cut, n)
    order = rng.permutation(cut) + [cut + i for i in rng.permutation(n - cut)]
    sa = tuple(a[i] for i in order)
    sb = tuple(b[i] for i in order)
    o1, o2 = single_point(sa, sb, cut)
    if not unshuffle:
        return o1, o2
    r1, r2 = [0] * n, [0] * n
    for j, i in enumerate(order):
        r1[i], r2[i] = o1[j], o2[j]
    return tuple(r1), tuple(r2)


def three_parent(
    p1: Sequence[int], p2: Sequence[int], p3: Sequence[int]
) -> tuple[BitChromosome, BitChromosome, BitChromosome]:
    """TPX over the parent orderings (1,2,3), (1,3,2) and (2,3,1).

    For ordering (A, B, C), a position takes A's bit when A and B agree and
    C's bit otherwise, which for bits is the positionwise majority.
    """
    a, b, c = as_bits(p1, "parent 1"), as_bits(p2, "parent 2"), as_bits(p3, "parent 3")
    check_same_length(a, b, c)

    def combine(x, y, z):
        return tuple(xi if xi == yi else zi for xi, yi, zi in zip(x, y, z))

    return combine(a, b, c), combine(a, c, b), combine(b, c, a)

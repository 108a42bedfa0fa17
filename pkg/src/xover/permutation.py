"""Order-coded crossovers: partially mapped (PMX) and cycle (CX)."""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import ChromosomeError, PermutationChromosome, as_permutation, check_same_length

Pair = tuple[PermutationChromosome, PermutationChromosome]


class SegmentRange(NamedTuple):
    """Inclusive 1-based segment ``[lo, hi]``."""

    lo: int
    hi: int

    def check(self, n: int) -> "SegmentRange":
        if not 1 <= self.lo <= self.hi <= n:
            raise ChromosomeError(f"segment [{self.lo}, {self.hi}] invalid for length {n}")
        return self


def _parents(p1, p2) -> tuple[PermutationChromosome, PermutationChromosome, int]:
    a, b = as_permutation(p1, "parent 1"), as_permutation(p2, "parent 2")
    return a, b, check_same_length(a, b)


def _pmx_child(keep: PermutationChromosome, fill: PermutationChromosome, lo: int, hi: int):
    child = list(fill)
    child[lo:hi] = keep[lo:hi]
    in_segment = set(keep[lo:hi])
    where_in_keep = {v: i for i, v in enumerate(keep)}
    for i in [*range(lo), *range(hi, len(keep))]:
        v = fill[i]
        while v in in_segment:
            v = fill[where_in_keep[v]]
        child[i] = v
    return tuple(child)


def pmx(p1: Sequence[int], p2: Sequence[int], seg: tuple[int, int]) -> Pair:
    """Partially mapped crossover.

    Offspring 1 keeps ``p1``'s segment and takes the remaining positions
    from ``p2``; a value already present in the segment is replaced by
    following the segment's positionwise mapping until a free value turns up.
    """
    a, b, n = _parents(p1, p2)
    lo, hi = SegmentRange(*seg).check(n)
    return _pmx_child(a, b, lo - 1, hi), _pmx_child(b, a, lo - 1, hi)


def cycles(p1: Sequence[int], p2: Sequence[int]) -> list[list[int]]:
    """Position cycles (0-based), each started from the lowest unvisited position."""
    where_in_p1 = {v: i for i, v in enumerate(p1)}
    visited = [False] * len(p1)
    out = []
    for start in range(len(p1)):
        if visited[start]:
            continue
        cyc, i = [], start
        while not visited[i]:
            visited[i] = True
            cyc.append(i)
            i = where_in_p1[p2[i]]
        out.append(cyc)
    return out


def cx(p1: Sequence[int], p2: Sequence[int]) -> Pair:
    """Cycle crossover: odd-numbered cycles come from ``p1`` in offspring 1."""
    a, b, _ = _parents(p1, p2)
    o1, o2 = list(a), list(b)
    for number, cyc in enumerate(cycles(a, b), start=1):
        if number % 2 == 0:
            for i in cyc:
                o1[i], o2[i] = b[i], a[i]
    return tuple(o1), tuple(o2)

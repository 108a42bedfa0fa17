"""Worked examples with reference values, checked by ``xover demo``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .binary import three_parent
from .core import CrossoverParams
from .real import blx_range, bx_gamma, lpx, lpx_pair, sax, sbx, sbx_spread, wax


@dataclass(frozen=True)
class GoldenCase:
    name: str
    expected: tuple
    compute: Callable[[], tuple]
    tol: float = 0.0

    def run(self) -> tuple[tuple, bool]:
        got = tuple(self.compute())
        if len(got) != len(self.expected):
            return got, False
        ok = all(
            g == e if isinstance(e, (str, tuple)) else abs(g - e) <= self.tol
            for g, e in zip(got, self.expected)
        )
        return got, ok


def _bits(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


def _tpx():
    kids = three_parent(_bits("11100000"), _bits("00001110"), _bits("01001010"))
    return tuple("".join(map(str, k)) for k in kids)


def _blx_contains():
    lo, hi = blx_range(0.13, 0.94, 0.5)
    return (lo, hi, float(lo <= 1.2 <= hi), float(lo <= 0.7 <= hi))


CASES: list[GoldenCase] = [
    GoldenCase("TPX three parents", ("01001010",) * 3, _tpx),
    GoldenCase("SAX k=2 alpha=0.5", (0.535,), lambda: (sax(0.13, 0.94, 0.5),), 1e-12),
    GoldenCase(
        "WAX coefficient pairs",
        (0.12, 1.64, 0.52),
        lambda: tuple(wax(0.88, 0.64, a, b) for a, b in [(0.5, -0.5), (1.5, 0.5), (-0.5, 1.5)]),
        1e-12,
    ),
    GoldenCase(
        "BX range holds sampled offspring",
        (-0.275, 1.345, 1.0, 1.0),
        _blx_contains,
        1e-12,
    ),
    GoldenCase(
        "BX gamma alpha=0.5 r=0.5",
        (0.535, 0.535),
        lambda: bx_gamma(0.13, 0.94, 0.5, 0.5),
        1e-12,
    ),
    GoldenCase("SBX spread mu=0.4 eta=2", (0.928,), lambda: (sbx_spread(0.4, 2),), 1e-3),
    GoldenCase(
        "SBX offspring",
        (0.1592, 0.9108),
        lambda: sbx(0.13, 0.94, sbx_spread(0.4, 2)),
        5e-4,
    ),
    GoldenCase("LPX gene pair alpha=0.2", (0.4177, 1.171), lambda: lpx_pair(0.13, 0.94, 0.2), 5e-4),
    GoldenCase(
        "LPX chromosomes k=2 alpha=0.2",
        (0.88, 0.4177, 0.25, 0.64, 1.171, 0.35),
        lambda: sum(lpx((0.88, 0.13, 0.25), (0.64, 0.94, 0.35), CrossoverParams(alpha=0.2, gene_index=2)), ()),
        5e-4,
    ),
]


def run_all() -> list[tuple[GoldenCase, tuple, bool]]:
    return [(case, *case.run()) for case in CASES]

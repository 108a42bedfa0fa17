"""Unimodal benchmark functions TF1 (sphere), TF3 (prefix-sum squares) and TF7 (noisy quartic)."""
from __future__ import annotations

from itertools import accumulate
from math import fsum
from typing import Callable, Optional, Sequence

from .core import RandomSource, as_real


def tf1(x: Sequence[float]) -> float:
    return fsum(v * v for v in as_real(x))


def tf3(x: Sequence[float]) -> float:
    return fsum(s * s for s in accumulate(as_real(x)))


def tf7(x: Sequence[float], rng: Optional[RandomSource] = None) -> float:
    """``sum(i * x_i**4)`` with 1-based ``i``, plus one U[0, 1) draw when ``rng`` is given."""
    base = fsum(i * (v * v) * (v * v) for i, v in enumerate(as_real(x), start=1))
    return base if rng is None else base + rng.unit_uniform()


TEST_FUNCTIONS = ("tf1", "tf3", "tf7")


def get(tf_id: str) -> Callable[[Sequence[float], Optional[RandomSource]], float]:
    """Uniform ``f(x, rng)`` callable for a test-function id; only tf7 uses ``rng``."""
    key = tf_id.lower()
    if key == "tf1":
        return lambda x, rng=None: tf1(x)
    if key == "tf3":
        return lambda x, rng=None: tf3(x)
    if key == "tf7":
        return tf7
    raise KeyError(f"unknown test function {tf_id!r}; expected one of {TEST_FUNCTIONS}")

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from xover.core import (
    ChromosomeError,
    CrossoverParams,
    RandomSource,
    as_bits,
    as_real,
    derive_cell_seed,
    validate_permutation,
)


@pytest.mark.parametrize(
    "genes, expected",
    [([1, 2, 3], True), ([1, 1, 3], False), ([2, 3, 1], True), ([], False), ([0, 1], False)],
)
def test_validate_permutation_examples(genes, expected):
    assert validate_permutation(genes) is expected


def _count_oracle(seq):
    return len(seq) > 0 and all(seq.count(v) == 1 for v in range(1, len(seq) + 1))


def test_validate_permutation_exhaustive_against_counting():
    for n in range(1, 7):
        for seq in itertools.product(range(1, 7), repeat=n):
            assert validate_permutation(seq) == _count_oracle(list(seq)), seq


def test_validate_permutation_rejects_non_integers():
    assert not validate_permutation([1.0, 2.0])
    assert not validate_permutation([True])


def test_same_seed_same_stream():
    a, b = RandomSource(12345), RandomSource(12345)
    draws_a = [a.unit_uniform() for _ in range(10_000)]
    draws_b = [b.unit_uniform() for _ in range(10_000)]
    assert draws_a == draws_b
    assert RandomSource(12346).unit_uniform() != draws_a[0]


def test_unit_uniform_range_and_mean():
    rng = RandomSource(3)
    draws = [rng.unit_uniform() for _ in range(100_000)]
    assert all(0.0 <= d < 1.0 for d in draws)
    assert abs(sum(draws) / len(draws) - 0.5) < 0.01


def test_other_draws_respect_their_ranges():
    rng = RandomSource(9)
    for _ in range(10_000):
        assert -2.0 <= rng.uniform_in(-2.0, 3.0) < 3.0
        assert 0 <= rng.int_below(7) < 7
        assert 0.0 < rng.open_unit() < 1.0
    assert rng.uniform_in(4.0, 4.0) == 4.0
    assert {rng.bit(1.0) for _ in range(100)} == {1}
    assert {rng.bit(0.0) for _ in range(100)} == {0}
    assert sorted(rng.permutation(6)) == list(range(6))


def test_seed_is_masked_to_64_bits():
    assert RandomSource(2**64 + 5).seed == 5
    assert RandomSource(-1).seed == 2**64 - 1


def test_derive_cell_seed_examples():
    s = derive_cell_seed(7, "lpx", 0.2, "tf1")
    assert s == derive_cell_seed(7, "lpx", 0.2, "tf1")
    assert s != derive_cell_seed(7, "lpx", 0.5, "tf1")
    assert derive_cell_seed(7, "bx", 0.2, "tf1") != derive_cell_seed(8, "bx", 0.2, "tf1")
    assert 0 <= s < 2**64


def test_derive_cell_seed_distinct_over_grid():
    seeds = {
        derive_cell_seed(base, op, a, tf)
        for base in range(5)
        for op in ("bx", "sbx", "lpx", "blx")
        for a in (0.1, 0.2, 0.3, 0.5, 0.7)
        for tf in ("tf1", "tf3", "tf7")
    }
    assert len(seeds) == 5 * 4 * 5 * 3


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=1))
def test_as_real_accepts_finite(genes):
    assert as_real(genes) == tuple(genes)


@pytest.mark.parametrize("bad", [[], [float("nan")], [1.0, float("inf")]])
def test_as_real_rejects(bad):
    with pytest.raises(ChromosomeError):
        as_real(bad)


@pytest.mark.parametrize("bad", [[], [2], [0, 1, 0.5]])
def test_as_bits_rejects(bad):
    with pytest.raises(ChromosomeError):
        as_bits(bad)


def test_crossover_params_validation():
    with pytest.raises(ChromosomeError):
        CrossoverParams(eta=-1)
    with pytest.raises(ChromosomeError):
        CrossoverParams(mode="some")
    with pytest.raises(ChromosomeError):
        CrossoverParams(gene_index=0)
    assert CrossoverParams(alpha=0.2, gene_index=2).mode == "single"


def test_sample_is_without_replacement():
    rng, r = RandomSource(1), random.Random(0)
    pool = list(range(20))
    for _ in range(200):
        k = r.randint(0, 20)
        picked = rng.sample(pool, k)
        assert len(set(picked)) == k

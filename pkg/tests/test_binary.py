import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from xover.binary import (
    half_uniform,
    k_point,
    shuffle_crossover,
    single_point,
    three_parent,
    uniform_coin,
    uniform_masked,
)
from xover.core import ChromosomeError, RandomSource


def bits(s):
    return tuple(int(c) for c in s)


def hamming(a, b):
    return sum(x != y for x, y in zip(a, b))


def random_pair(r, n):
    return tuple(r.randint(0, 1) for _ in range(n)), tuple(r.randint(0, 1) for _ in range(n))


def test_single_point_examples():
    assert single_point([1, 1, 1, 1], [0, 0, 0, 0], 2) == ((1, 1, 0, 0), (0, 0, 1, 1))
    assert single_point([1, 0, 1, 1, 0], [0, 1, 0, 0, 1], 3) == ((1, 0, 1, 0, 1), (0, 1, 0, 1, 0))
    p = (1, 0, 1)
    assert single_point(p, p, 1) == (p, p)


@pytest.mark.parametrize("cut", [0, 4, -1])
def test_single_point_cut_out_of_range(cut):
    with pytest.raises(ChromosomeError):
        single_point([1, 0, 1, 0], [0, 1, 0, 1], cut)


def test_length_mismatch():
    with pytest.raises(ChromosomeError):
        single_point([1, 0], [1, 0, 1], 1)
    with pytest.raises(ChromosomeError):
        three_parent([1, 0], [1, 0], [1])


def test_k_point_examples():
    assert k_point([1] * 6, [0] * 6, [2, 4]) == ((1, 1, 0, 0, 1, 1), (0, 0, 1, 1, 0, 0))
    assert k_point([1] * 4, [0] * 4, [1, 2, 3]) == ((1, 0, 1, 0), (0, 1, 0, 1))
    p = (0, 1, 1, 0, 1)
    assert k_point(p, p, [1, 3]) == (p, p)


@pytest.mark.parametrize("cuts", [[], [2, 2], [3, 1], [0, 2], [2, 5]])
def test_k_point_bad_cuts(cuts):
    with pytest.raises(ChromosomeError):
        k_point([1] * 5, [0] * 5, cuts)


def test_k_point_one_cut_is_single_point():
    r = random.Random(0)
    for _ in range(2000):
        n = r.randint(2, 64)
        a, b = random_pair(r, n)
        c = r.randint(1, n - 1)
        assert k_point(a, b, [c]) == single_point(a, b, c)


def test_uniform_masked_examples():
    a, b = (1, 1, 0), (0, 0, 1)
    assert uniform_masked(a, b, [1, 1, 1]) == (a, b)
    assert uniform_masked(a, b, [0, 0, 0]) == (b, a)
    assert uniform_masked(a, b, [1, 0, 1]) == ((1, 0, 0), (0, 1, 1))
    with pytest.raises(ChromosomeError):
        uniform_masked(a, b, [1, 0])


def test_uniform_coin_extremes_and_replay():
    a, b = (1, 0, 1, 1, 0, 0), (0, 1, 1, 0, 1, 0)
    assert uniform_coin(a, b, 1.0, RandomSource(4)) == (a, b)
    assert uniform_coin(a, b, 0.0, RandomSource(4)) == (b, a)
    got = uniform_coin(a, b, 0.5, RandomSource(99))
    replay = RandomSource(99)
    mask = [replay.bit(0.5) for _ in a]
    assert got == uniform_masked(a, b, mask)
    assert got == uniform_coin(a, b, 0.5, RandomSource(99))
    with pytest.raises(ChromosomeError):
        uniform_coin(a, b, 1.5, RandomSource(0))


def test_uniform_coin_bias_shifts_material():
    a, b = (1,) * 1000, (0,) * 1000
    o1, _ = uniform_coin(a, b, 0.8, RandomSource(5))
    assert abs(sum(o1) / 1000 - 0.8) < 0.05


def test_half_uniform_examples():
    p = (1, 0, 1)
    assert half_uniform(p, p, RandomSource(0)) == (p, p)
    outcomes = {half_uniform((1, 0), (0, 1), RandomSource(s)) for s in range(50)}
    assert outcomes == {((0, 0), (1, 1)), ((1, 1), (0, 0))}


def test_half_uniform_swaps_exactly_half_of_four():
    a, b = (1, 1, 1, 1), (0, 0, 0, 0)
    rng = RandomSource(11)
    seen = Counter()
    for _ in range(10_000):
        o1, o2 = half_uniform(a, b, rng)
        assert hamming(o1, a) == 2 and hamming(o1, b) == 2
        assert hamming(o2, a) == 2 and hamming(o2, b) == 2
        seen[o1] += 1
    # all C(4, 2) choices appear
    assert len(seen) == 6


def test_position_provenance():
    r = random.Random(1)
    rng = RandomSource(1)
    for _ in range(10_000):
        n = r.randint(2, 64)
        a, b = random_pair(r, n)
        cut = r.randint(1, n - 1)
        cuts = sorted(r.sample(range(1, n), r.randint(1, min(4, n - 1))))
        mask = [r.randint(0, 1) for _ in range(n)]
        for o1, o2 in (
            single_point(a, b, cut),
            k_point(a, b, cuts),
            uniform_masked(a, b, mask),
            uniform_coin(a, b, 0.5, rng),
            half_uniform(a, b, rng),
        ):
            assert all(sorted((x, y)) == sorted((p, q)) for x, y, p, q in zip(o1, o2, a, b))
        assert hamming(half_uniform(a, b, rng)[0], a) == hamming(a, b) // 2


def test_shuffle_identical_parents_and_degenerate_sides():
    p = (1, 0, 0, 1, 1)
    assert shuffle_crossover(p, p, 2, RandomSource(3)) == (p, p)
    a, b = (1, 0), (0, 1)
    assert shuffle_crossover(a, b, 1, RandomSource(8)) == single_point(a, b, 1)
    assert shuffle_crossover(a, b, 1, RandomSource(8), unshuffle=False) == single_point(a, b, 1)


def test_shuffle_replayed_by_hand():
    a, b = (1, 1, 0, 0), (0, 0, 1, 1)
    cut, seed = 2, 21
    replay = RandomSource(seed)
    order = replay.permutation(cut) + [cut + i for i in replay.permutation(4 - cut)]
    sa, sb = [a[i] for i in order], [b[i] for i in order]
    shuffled = (tuple(sa[:cut] + sb[cut:]), tuple(sb[:cut] + sa[cut:]))
    assert shuffle_crossover(a, b, cut, RandomSource(seed), unshuffle=False) == shuffled

    o1, o2 = shuffle_crossover(a, b, cut, RandomSource(seed), unshuffle=True)
    plain1, plain2 = single_point(a, b, cut)
    assert Counter(o1[:cut]) == Counter(plain1[:cut]) and Counter(o1[cut:]) == Counter(plain1[cut:])
    assert Counter(o2[:cut]) == Counter(plain2[:cut]) and Counter(o2[cut:]) == Counter(plain2[cut:])


def test_shuffle_without_unshuffle_keeps_side_multisets():
    r = random.Random(2)
    rng = RandomSource(2)
    for _ in range(2000):
        n = r.randint(2, 32)
        a, b = random_pair(r, n)
        cut = r.randint(1, n - 1)
        o1, o2 = shuffle_crossover(a, b, cut, rng, unshuffle=False)
        p1, p2 = single_point(a, b, cut)
        assert Counter(o1[:cut]) == Counter(p1[:cut]) and Counter(o1[cut:]) == Counter(p1[cut:])
        assert Counter(o2[:cut]) == Counter(p2[:cut]) and Counter(o2[cut:]) == Counter(p2[cut:])


def test_three_parent_reference_example():
    kids = three_parent(bits("11100000"), bits("00001110"), bits("01001010"))
    assert kids == (bits("01001010"),) * 3


@given(st.lists(st.integers(0, 1), min_size=1, max_size=32))
def test_three_parent_identical(p):
    assert three_parent(p, p, p) == (tuple(p),) * 3


@given(st.integers(1, 32).flatmap(lambda n: st.tuples(*[st.lists(st.integers(0, 1), min_size=n, max_size=n)] * 3)))
def test_three_parent_is_majority(parents):
    majority = tuple(int(sum(col) >= 2) for col in zip(*parents))
    assert three_parent(*parents) == (majority,) * 3

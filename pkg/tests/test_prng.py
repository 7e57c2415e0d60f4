import numpy as np

from src.prng import SplitMix64, derive_seed, splitmix64

REFERENCE_1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]


def test_reference_sequence():
    assert splitmix64(1234567, 0, 5).tolist() == REFERENCE_1234567


def test_counter_offset():
    assert splitmix64(1234567, 2, 3).tolist() == REFERENCE_1234567[2:]


def test_stream_continues_across_calls():
    rng = SplitMix64(1234567)
    first = rng.raw(2).tolist()
    rest = rng.raw(3).tolist()
    assert first + rest == REFERENCE_1234567


def test_derive_seed():
    assert derive_seed(1234567, 0) == REFERENCE_1234567[0]
    assert derive_seed(1234567, 3) == REFERENCE_1234567[3]


def test_integers_within_bound():
    values = SplitMix64(7).integers(5, 1000)
    assert values.dtype == np.int64
    assert values.min() >= 0 and values.max() < 5


def test_integers_reduce_modulo():
    assert SplitMix64(1234567).integers(3, 4).tolist() == [v % 3 for v in REFERENCE_1234567[:4]]


def test_shuffled_is_deterministic_permutation():
    items = list(range(10))
    first = SplitMix64(99).shuffled(items)
    assert sorted(first) == items
    assert SplitMix64(99).shuffled(items) == first
    assert items == list(range(10))


def test_negative_seed_wraps():
    assert SplitMix64(-1).seed == (1 << 64) - 1

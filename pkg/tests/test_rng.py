from hypothesis import given, settings
from hypothesis import strategies as st

from domcount.rng import MASK64, SplitMix64, derive_seed, mix64, sample_k_subset

# Published reference outputs for the generator at seed 0.
SEED0_OUTPUTS = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]

# Frozen from this implementation, pinning the stream across refactors.
SEED_42_FIRST = 13679457532755275413
UNIT_SEED_42 = 0.7415648787718233


def test_reference_vectors_seed0():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == SEED0_OUTPUTS


def test_frozen_stream_seed42():
    rng = SplitMix64(42)
    assert rng.next_u64() == SEED_42_FIRST
    assert SplitMix64(42).next_unit() == UNIT_SEED_42


def test_streams_restart_identically():
    a = SplitMix64(7)
    b = SplitMix64(7)
    assert [a.next_u64() for _ in range(50)] == [b.next_u64() for _ in range(50)]


@given(st.integers(min_value=0, max_value=MASK64))
def test_mix64_stays_in_range(z):
    assert 0 <= mix64(z) <= MASK64


@given(st.integers(min_value=0, max_value=MASK64), st.integers(min_value=0, max_value=1000))
def test_derive_seed_deterministic_and_in_range(seed, index):
    a = derive_seed(seed, index)
    assert a == derive_seed(seed, index)
    assert 0 <= a <= MASK64


def test_derive_seed_separates_adjacent_indices():
    seeds = [derive_seed(123, i) for i in range(1000)]
    assert len(set(seeds)) == 1000


def test_derive_seed_rejects_negative_index():
    import pytest

    with pytest.raises(ValueError):
        derive_seed(1, -1)


@given(st.floats(min_value=0, max_value=1, allow_nan=False))
def test_next_unit_range(_):
    rng = SplitMix64(99)
    for _ in range(100):
        u = rng.next_unit()
        assert 0.0 <= u < 1.0


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=0, max_value=MASK64))
def test_next_below_in_range(bound, seed):
    rng = SplitMix64(seed)
    for _ in range(5):
        assert 0 <= rng.next_below(bound) < bound


def test_next_below_rejects_nonpositive():
    import pytest

    with pytest.raises(ValueError):
        SplitMix64(0).next_below(0)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=MASK64))
def test_sample_k_subset_shape(k, seed):
    n = 30
    out = sample_k_subset(SplitMix64(seed), n, k)
    assert len(out) == k
    assert out == sorted(set(out))
    assert all(0 <= v < n for v in out)


def test_sample_k_subset_deterministic():
    a = sample_k_subset(SplitMix64(5), 100, 10)
    b = sample_k_subset(SplitMix64(5), 100, 10)
    assert a == b


def test_sample_k_subset_covers_all_vertices_eventually():
    seen = set()
    for t in range(200):
        seen.update(sample_k_subset(SplitMix64(derive_seed(3, t)), 10, 3))
    assert seen == set(range(10))


def test_sample_k_subset_roughly_uniform():
    # Each vertex should appear in about trials * k / n samples.
    trials, n, k = 3000, 10, 3
    counts = [0] * n
    for t in range(trials):
        for v in sample_k_subset(SplitMix64(derive_seed(11, t)), n, k):
            counts[v] += 1
    expect = trials * k / n
    assert all(0.8 * expect < c < 1.2 * expect for c in counts), counts


def test_sample_k_subset_rejects_bad_k():
    import pytest

    with pytest.raises(ValueError):
        sample_k_subset(SplitMix64(0), 5, 6)

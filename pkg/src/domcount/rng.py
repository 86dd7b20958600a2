"""Deterministic pseudorandom streams for reproducible experiments.

The generator is splitmix64 (Steele, Lea and Flood's SplittableRandom
finalizer, as published in Vigna's reference splitmix64.c).  It was chosen
because the state update is a plain counter: stream element i depends only on
``seed + (i + 1) * GOLDEN``, so a scalar Python loop, a vectorized numpy
evaluation and a jitted kernel all produce bit-identical streams without
sharing any mutable state.

Reference vectors (seed = 0, first three outputs) match the published
generator and are frozen in the test suite:

    0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

# 2**-53; multiplying a 53-bit integer by this is exact in binary64.
_UNIT = 2.0**-53


def mix64(z: int) -> int:
    """splitmix64 output finalizer: avalanche a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Derive the seed of substream `index` from a base seed.

    Defined as mix64(seed XOR mix64((index + 1) * GOLDEN)).  Mixing the index
    before the XOR keeps adjacent substreams uncorrelated even for adjacent
    base seeds.
    """
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    return mix64((seed & MASK64) ^ mix64(((index + 1) * GOLDEN) & MASK64))


class SplitMix64:
    """Scalar splitmix64 stream.

    Output i (0-based) is mix64(seed + (i + 1) * GOLDEN) mod 2**64.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def next_unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits, exactly representable."""
        return (self.next_u64() >> 11) * _UNIT

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        # Largest multiple of bound that fits in 64 bits; draws at or above
        # it would bias the modulus, so they are rejected.
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound


def sample_k_subset(rng: SplitMix64, n: int, k: int) -> list[int]:
    """Sample a uniform k-subset of range(n) with Floyd's algorithm.

    Consumes exactly k next_below draws plus rejections; returns a sorted
    vertex list.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    chosen: set[int] = set()
    for j in range(n - k, n):
        t = rng.next_below(j + 1)
        chosen.add(j if t in chosen else t)
    return sorted(chosen)

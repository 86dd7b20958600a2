"""Pure-numpy fallback kernels, result-identical to the jitted versions.

The counting walk keeps the same iterative prefix-tree shape as the numba
kernel; only the innermost work (word unions, popcounts, the final-slot scan)
is vectorized.  Bernoulli draws evaluate the whole splitmix64 stream with
array arithmetic, which wraps mod 2**64 exactly like the scalar generator.
"""

import math

import numpy as np

BACKEND_NAME = "numpy"

_GOLD = np.uint64(0x9E3779B97F4A7C15)
_MIXA = np.uint64(0xBF58476D1CE4E5B9)
_MIXB = np.uint64(0x94D049BB133111EB)
_U53 = 2.0**-53


def count_dominating_block(rows, k, lo, hi, full, top_gain):
    """Count dominating k-subsets whose smallest member lies in [lo, hi)."""
    n, nw = rows.shape
    not_rows = ~rows
    count = 0
    if k == 1:
        return int(np.sum(np.all(rows[lo:hi] == full[np.newaxis, :], axis=1)))

    cur = np.empty(k - 1, np.int64)
    unions = np.zeros((k - 1, nw), np.uint64)
    d = 0
    cur[0] = lo - 1
    while d >= 0:
        cur[d] += 1
        v = int(cur[d])
        vmax = hi - 1 if d == 0 else n - k + d
        if v > vmax:
            d -= 1
            continue
        union = unions[d] | rows[v]
        unc = int(np.sum(np.bitwise_count(full & ~union)))
        rem = k - 1 - d
        if unc == 0:
            count += math.comb(n - 1 - v, rem)
            continue
        if top_gain[rem] < unc:
            continue
        if rem == 1:
            missing = full & ~union
            viol = np.bitwise_and(not_rows[v + 1 : n], missing[np.newaxis, :])
            count += int(np.sum(~viol.any(axis=1)))
        else:
            unions[d + 1] = union
            d += 1
            cur[d] = v
    return count


def pair_bernoulli_bits(m, p, seed):
    """m independent Bernoulli(p) draws from the splitmix64 stream at `seed`."""
    with np.errstate(over="ignore"):
        s = np.uint64(seed) + np.arange(1, m + 1, dtype=np.uint64) * _GOLD
        z = (s ^ (s >> np.uint64(30))) * _MIXA
        z = (z ^ (z >> np.uint64(27))) * _MIXB
        z = z ^ (z >> np.uint64(31))
    return ((z >> np.uint64(11)) * _U53) < p

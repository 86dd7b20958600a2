"""Jitted kernels: dominating-set counting and pairwise Bernoulli draws.

All word arithmetic is kept in uint64 with explicitly typed constants; mixing
a uint64 with a Python int literal would silently promote to float64 under
numba's type rules and corrupt the bit patterns.  Counters and combinatorial
values stay in int64 (callers guarantee they fit, see engine.py).
"""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)

_GOLD = np.uint64(0x9E3779B97F4A7C15)
_MIXA = np.uint64(0xBF58476D1CE4E5B9)
_MIXB = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_U53 = 2.0**-53


@njit(cache=True, nogil=True)
def _popcount64(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True, nogil=True)
def _comb64(m, r):
    # Exact multiplicative binomial; caller guarantees the result fits int64.
    if r < 0 or r > m:
        return np.int64(0)
    rr = r if r * 2 <= m else m - r
    c = np.int64(1)
    for i in range(1, rr + 1):
        c = c * (m - rr + i) // i
    return c


@njit(cache=True, nogil=True)
def count_dominating_block(rows, k, lo, hi, full, top_gain):
    """Count dominating k-subsets whose smallest member lies in [lo, hi).

    rows: (n, W) uint64 closed-neighborhood words.
    full: (W,) uint64 mask of all n vertices.
    top_gain: int64, top_gain[r] = sum of the r largest closed-neighborhood
    sizes; a prefix is abandoned when even the r best rows cannot cover the
    remaining vertices.
    """
    n, nw = rows.shape
    count = np.int64(0)
    if k == 1:
        for v in range(lo, hi):
            ok = True
            for w in range(nw):
                if rows[v, w] != full[w]:
                    ok = False
                    break
            if ok:
                count += 1
        return count

    cur = np.empty(k - 1, np.int64)
    unions = np.zeros((k - 1, nw), np.uint64)
    zbuf = np.empty(nw, np.uint64)
    d = 0
    cur[0] = lo - 1
    while d >= 0:
        cur[d] += 1
        v = cur[d]
        vmax = hi - 1 if d == 0 else n - k + d
        if v > vmax:
            d -= 1
            continue
        unc = np.int64(0)
        for w in range(nw):
            uw = unions[d, w] | rows[v, w]
            zbuf[w] = uw
            unc += _popcount64(full[w] & ~uw)
        rem = k - 1 - d
        if unc == 0:
            # Prefix already dominates: every completion counts.
            count += _comb64(n - 1 - v, rem)
            continue
        if top_gain[rem] < unc:
            continue
        if rem == 1:
            for w in range(nw):
                zbuf[w] = full[w] & ~zbuf[w]
            for c in range(v + 1, n):
                ok = True
                for w in range(nw):
                    if zbuf[w] & ~rows[c, w] != np.uint64(0):
                        ok = False
                        break
                if ok:
                    count += 1
        else:
            for w in range(nw):
                unions[d + 1, w] = zbuf[w]
            d += 1
            cur[d] = v
    return count


@njit(cache=True, nogil=True)
def pair_bernoulli_bits(m, p, seed):
    """m independent Bernoulli(p) draws from the splitmix64 stream at `seed`.

    Draw i uses stream output i, so any implementation of the same generator
    reproduces the array exactly.
    """
    out = np.empty(m, np.bool_)
    s = seed
    for i in range(m):
        s = s + _GOLD
        z = s
        z = (z ^ (z >> _S30)) * _MIXA
        z = (z ^ (z >> _S27)) * _MIXB
        z = z ^ (z >> _S31)
        out[i] = ((z >> _S11) * _U53) < p
    return out

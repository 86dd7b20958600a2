"""Exact and sampled domination analysis.

count_dominating_exact walks every k-subset (with pruning) through one of the
kernel backends; domination_number is a branch-and-bound search over Python
integer bitmasks, deliberately independent of the counting kernels so the two
paths can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph, row_zero_profile
from .rng import SplitMix64, derive_seed, sample_k_subset

DEFAULT_WORK_BUDGET = 10**9

# The kernels track counts and combinatorial intermediates in int64; staying
# at or below 2**48 subsets keeps every intermediate provably in range.
MAX_EXACT_SETS = 2**48

# Two-sided 99% normal quantile.
_Z99 = 2.5758293035489004


class WorkBudgetExceeded(RuntimeError):
    """Raised when an exact count would exceed its work budget."""


@dataclass(frozen=True)
class DominationCount:
    """Exact census of the k-subsets of a graph."""

    k: int
    total: int
    dominating: int
    non_dominating: int

    @property
    def fraction(self) -> float:
        return self.dominating / self.total if self.total else 0.0


@dataclass(frozen=True)
class FractionEstimate:
    """Monte Carlo estimate of the dominating fraction of k-subsets."""

    point: float
    half_width: float
    trials: int
    hits: int
    seed: int

    @property
    def low(self) -> float:
        return max(0.0, self.point - self.half_width)

    @property
    def high(self) -> float:
        return min(1.0, self.point + self.half_width)


def _top_gain(g: Graph, k: int) -> np.ndarray:
    sizes = sorted(g.neighborhood_sizes, reverse=True)
    gains = np.zeros(k + 1, dtype=np.int64)
    acc = 0
    for r in range(1, k + 1):
        acc += sizes[r - 1] if r - 1 < len(sizes) else 0
        gains[r] = acc
    return gains


def count_dominating_exact(
    g: Graph,
    k: int,
    *,
    budget: int = DEFAULT_WORK_BUDGET,
    backend: str | None = None,
) -> DominationCount:
    """Exact count of dominating k-subsets.

    Work is metered as C(n, k) * k row operations; a count whose meter
    exceeds `budget` raises WorkBudgetExceeded before any work is done.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"need 0 <= k <= n={g.n}, got k={k}")
    total = math.comb(g.n, k)
    if k == 0:
        # The empty set dominates only the empty graph, and n >= 1 here.
        return DominationCount(k=0, total=1, dominating=0, non_dominating=1)
    work = total * k
    if work > budget:
        raise WorkBudgetExceeded(
            f"exact count at k={k} needs {work} row operations "
            f"(C({g.n}, {k}) = {total} subsets); budget is {budget}"
        )
    if total > MAX_EXACT_SETS:
        raise WorkBudgetExceeded(
            f"C({g.n}, {k}) = {total} exceeds the kernel integer range ({MAX_EXACT_SETS})"
        )
    kern = kernels.get_backend(backend)
    dom = int(
        kern.count_dominating_block(g.words, k, 0, g.n - k + 1, g.full_words, _top_gain(g, k))
    )
    return DominationCount(k=k, total=total, dominating=dom, non_dominating=total - dom)


def count_dominating_blocks(
    g: Graph,
    k: int,
    bounds: list[tuple[int, int]],
    *,
    backend: str | None = None,
) -> list[int]:
    """Raw per-block counts over ranges of the smallest member (no budget check).

    Blocks partitioning [0, n - k + 1) sum to the full dominating count; used
    for threaded runs and for cross-checking the kernel.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n={g.n}, got k={k}")
    kern = kernels.get_backend(backend)
    gains = _top_gain(g, k)
    full = g.full_words
    return [int(kern.count_dominating_block(g.words, k, lo, hi, full, gains)) for lo, hi in bounds]


def estimate_dominating_fraction(
    g: Graph, k: int, trials: int, seed: int
) -> FractionEstimate:
    """Sample uniform k-subsets and report the dominating fraction.

    Trial t draws from its own derived stream, so the estimate does not
    depend on evaluation order.  The half width is a 99% normal interval.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n={g.n}, got k={k}")
    rows = g.rows
    full = g.full_mask
    hits = 0
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        covered = 0
        for v in sample_k_subset(rng, g.n, k):
            covered |= rows[v]
            if covered == full:
                break
        hits += covered == full
    point = hits / trials
    half = _Z99 * math.sqrt(point * (1.0 - point) / trials)
    return FractionEstimate(point=point, half_width=half, trials=trials, hits=hits, seed=seed)


def row_zero_lower_bound(g: Graph, m: int) -> int:
    """C(z_max, m): subsets of the worst row's absent entries.

    Every m-subset drawn from the vertices missing from some closed
    neighborhood N[v] fails to dominate v unless it contains v itself; since
    those vertices exclude v, each such subset is non-dominating.
    """
    if m < 0:
        raise ValueError(f"subset size must be >= 0, got {m}")
    return math.comb(row_zero_profile(g).z_max, m)


def _greedy_cover_size(rows: tuple[int, ...], n: int, full: int) -> int:
    covered = 0
    size = 0
    while covered != full:
        missing = full & ~covered
        best_v = -1
        best_gain = -1
        for v in range(n):
            gain = (rows[v] & missing).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        covered |= rows[best_v]
        size += 1
    return size


def _branch_vertex(rows: tuple[int, ...], missing: int) -> int:
    # Uncovered vertex whose closed neighborhood offers the least residual
    # coverage: some member of N[u] must be chosen, and a small N[u] keeps
    # the branching factor down.
    best_u = -1
    best = -1
    m = missing
    while m:
        low = m & -m
        u = low.bit_length() - 1
        c = (rows[u] & missing).bit_count()
        if best == -1 or c < best:
            best = c
            best_u = u
        m ^= low
    return best_u


def _exists_dominating(
    rows: tuple[int, ...], n: int, full: int, k: int, max_gain: int
) -> bool:
    def open_node(covered: int, budget: int):
        # Returns True (dominated), None (dead end), or a candidate iterator.
        if covered == full:
            return True
        if budget == 0:
            return None
        missing = full & ~covered
        if budget * max_gain < missing.bit_count():
            return None
        if budget == 1:
            for v in range(n):
                if rows[v] & missing == missing:
                    return True
            return None
        return iter(list(_bit_members(rows[_branch_vertex(rows, missing)])))

    first = open_node(0, k)
    if first is True:
        return True
    if first is None:
        return False
    stack: list[tuple[int, object, int]] = [(0, first, k)]
    while stack:
        covered, it, budget = stack[-1]
        descended = False
        for w in it:  # type: ignore[union-attr]
            child = covered | rows[w]
            res = open_node(child, budget - 1)
            if res is True:
                return True
            if res is None:
                continue
            stack.append((child, res, budget - 1))
            descended = True
            break
        if not descended:
            stack.pop()
    return False


def _bit_members(bits: int):
    m = bits
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def domination_number(g: Graph) -> int:
    """Size of a smallest dominating set, by branch and bound.

    A greedy cover bounds the answer from above; decision searches then walk
    k downward until no dominating set of size k exists.
    """
    rows = g.rows
    n = g.n
    full = g.full_mask
    max_gain = max(g.neighborhood_sizes)
    k = _greedy_cover_size(rows, n, full) - 1
    while k >= 1 and _exists_dominating(rows, n, full, k, max_gain):
        k -= 1
    return k + 1

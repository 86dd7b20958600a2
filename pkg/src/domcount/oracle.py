"""Brute-force reference implementations.

Everything here recomputes domination from the definition using plain
adjacency sets, sharing no code with the bitmask engine.  Slow on purpose:
these are the ground truth the fast paths are tested against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .graph import Graph

MAX_ORACLE_VERTICES = 6
MAX_NAIVE_NUMBER_VERTICES = 16
MAX_NAIVE_COUNT_SUBSETS = 10**6


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive ensemble moments of the count of dominating gamma-subsets."""

    n: int
    gamma: int
    epsilon: float
    expectation: float
    second_moment: float
    graphs_enumerated: int
    weight_total: float


def _adjacency_sets(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _dominates(adj: list[set[int]], members: frozenset[int], n: int) -> bool:
    # Direct reading of the definition: every vertex is in the set or has a
    # neighbor in it.
    for v in range(n):
        if v in members or adj[v] & members:
            continue
        return False
    return True


def brute_expectation(n: int, gamma: int, epsilon: float) -> OracleResult:
    """First and second ensemble moments by enumerating all labeled graphs.

    Each of the 2**C(n, 2) graphs is weighted by its probability when every
    edge appears independently with probability 1 - epsilon.
    """
    if not 1 <= n <= MAX_ORACLE_VERTICES:
        raise ValueError(f"exhaustive enumeration needs 1 <= n <= {MAX_ORACLE_VERTICES}, got {n}")
    if not 1 <= gamma <= n:
        raise ValueError(f"need 1 <= gamma <= n={n}, got {gamma}")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must be in [0, 1], got {epsilon}")
    pairs = list(itertools.combinations(range(n), 2))
    npairs = len(pairs)
    subsets = [frozenset(c) for c in itertools.combinations(range(n), gamma)]
    p_edge = 1.0 - epsilon
    expectation = 0.0
    second = 0.0
    weight_total = 0.0
    for code in range(1 << npairs):
        adj: list[set[int]] = [set() for _ in range(n)]
        present = 0
        for b, (u, v) in enumerate(pairs):
            if (code >> b) & 1:
                adj[u].add(v)
                adj[v].add(u)
                present += 1
        weight = p_edge**present * epsilon ** (npairs - present)
        x = sum(1 for s in subsets if _dominates(adj, s, n))
        weight_total += weight
        expectation += weight * x
        second += weight * x * x
    return OracleResult(
        n=n,
        gamma=gamma,
        epsilon=epsilon,
        expectation=expectation,
        second_moment=second,
        graphs_enumerated=1 << npairs,
        weight_total=weight_total,
    )


def naive_domination_number(g: Graph) -> int:
    """Smallest k admitting a dominating k-subset, checked by enumeration."""
    if g.n > MAX_NAIVE_NUMBER_VERTICES:
        raise ValueError(
            f"naive search is limited to n <= {MAX_NAIVE_NUMBER_VERTICES}, got n={g.n}"
        )
    adj = _adjacency_sets(g)
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if _dominates(adj, frozenset(combo), g.n):
                return k
    raise AssertionError("the full vertex set always dominates")


def naive_count(g: Graph, k: int) -> int:
    """Dominating k-subsets by plain enumeration."""
    if not 0 <= k <= g.n:
        raise ValueError(f"need 0 <= k <= n={g.n}, got k={k}")
    total = math.comb(g.n, k)
    if total > MAX_NAIVE_COUNT_SUBSETS:
        raise ValueError(
            f"C({g.n}, {k}) = {total} exceeds the naive enumeration bound "
            f"({MAX_NAIVE_COUNT_SUBSETS})"
        )
    adj = _adjacency_sets(g)
    return sum(
        1 for combo in itertools.combinations(range(g.n), k) if _dominates(adj, frozenset(combo), g.n)
    )

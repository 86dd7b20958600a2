"""Random and structured graph generators for domination experiments.

The edge-absence probability epsilon is the natural parameter here: a
gamma-subset dominates a vertex outside it unless all gamma of its edges to
the subset are absent, an event of probability epsilon**gamma.  Generators
therefore speak epsilon and convert to the edge-presence probability
p = 1 - epsilon only at the sampling step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import MAX_VERTICES, Graph
from .rng import MASK64


@dataclass(frozen=True)
class EnsembleParams:
    """One random-graph experiment: n vertices, edge-absence rate epsilon."""

    gamma_target: int
    n: int
    delta: float
    epsilon: float
    seed: int
    trials: int

    def __post_init__(self):
        if self.gamma_target < 2:
            raise ValueError(f"gamma_target must be >= 2, got {self.gamma_target}")
        if not 2 <= self.n <= MAX_VERTICES:
            raise ValueError(f"n must be in [2, {MAX_VERTICES}], got {self.n}")
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")

    @property
    def p(self) -> float:
        """Edge-presence probability."""
        return 1.0 - self.epsilon


def _schedule_raw(gamma: int, n: float) -> float:
    return math.log(n) / n ** (1.0 / (gamma - 1))


def _min_schedule_n(gamma: int) -> int:
    # The schedule peaks near n = e**(gamma - 1) and decreases beyond it;
    # report the first n past the peak where it drops below 1.
    lo = max(2, math.ceil(math.exp(gamma - 1)))
    hi = lo
    while _schedule_raw(gamma, hi) >= 1.0:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _schedule_raw(gamma, mid) >= 1.0:
            lo = mid + 1
        else:
            hi = mid
    return lo


def epsilon_schedule(gamma: int, n: int) -> float:
    """ln(n) / n**(1/(gamma-1)): the edge-absence rate that pins the
    domination number of the random graph at gamma for large n."""
    if gamma < 2:
        raise ValueError(f"the schedule needs gamma >= 2, got {gamma}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    value = _schedule_raw(gamma, n)
    if value >= 1.0:
        raise ValueError(
            f"schedule value {value:.6g} is not a probability at n={n}; "
            f"smallest usable n for gamma={gamma} is {_min_schedule_n(gamma)}"
        )
    return value


def markov_epsilon_threshold(gamma: int, n: int, delta: float) -> float:
    """Edge-absence rate above which sets of size gamma - 1 almost never
    dominate: ((gamma - 1 + delta) ln(n) / n)**(1/(gamma-1))."""
    if gamma < 2:
        raise ValueError(f"the threshold needs gamma >= 2, got {gamma}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    value = ((gamma - 1 + delta) * math.log(n) / n) ** (1.0 / (gamma - 1))
    if value >= 1.0:
        raise ValueError(
            f"threshold value {value:.6g} is not a probability at n={n} "
            f"(gamma={gamma}, delta={delta}); increase n"
        )
    return value


def ensemble_epsilon(gamma: int, n: int, delta: float = 1.0) -> float:
    """Edge-absence rate used by experiments targeting domination number gamma.

    The larger of the schedule and the threshold: big enough that sets of
    size gamma - 1 essentially never dominate, small enough that gamma-sets
    dominate at a healthy rate.
    """
    return max(epsilon_schedule(gamma, n), markov_epsilon_threshold(gamma, n, delta))


def erdos_renyi(n: int, p: float, seed: int, *, backend: str | None = None) -> Graph:
    """Uniform random graph: each pair is an edge with probability p.

    Pair (u, v), u < v, consumes draw u * n - u * (u + 3) / 2 + v - 1 of the
    splitmix64 stream at `seed` (lexicographic order), so the graph is
    reproducible across backends and machines.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in [1, {MAX_VERTICES}], got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    kern = kernels.get_backend(backend)
    m = n * (n - 1) // 2
    bits = np.asarray(kern.pair_bernoulli_bits(m, float(p), np.uint64(seed & MASK64)))
    adj = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    adj[iu] = bits
    adj |= adj.T
    return Graph.from_adjacency(adj)


def gamma3_extremal(n: int) -> Graph:
    """Dense construction with domination number exactly 3 and
    (n/3) * C(2n/3, 2) dominating triples, the most a graph with no
    dominating pair can have.

    Vertices 0..n/3-1 form a clique; the rest form a clique minus a perfect
    matching (consecutive pairs), so every vertex misses exactly one other
    vertex and no two vertices cover everything.
    """
    if n % 3 != 0 or n < 9:
        raise ValueError(f"the construction needs n divisible by 3 and >= 9, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(f"n must be <= {MAX_VERTICES}, got {n}")
    a = n // 3
    adj = np.zeros((n, n), dtype=bool)
    adj[:a, :a] = True
    adj[a:, a:] = True
    for i in range(a, n, 2):
        adj[i, i + 1] = False
        adj[i + 1, i] = False
    np.fill_diagonal(adj, False)
    return Graph.from_adjacency(adj)

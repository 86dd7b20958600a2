"""Closed-form ensemble moments and bounds for dominating-set counts.

Model: every vertex pair is independently a non-edge with probability
epsilon.  A fixed gamma-subset dominates an outside vertex unless all gamma
incident pairs are absent, so a single subset dominates with probability
(1 - epsilon**gamma)**(n - gamma).  Everything else here is bookkeeping over
that event: expectations, a Markov bound one size down, the exact second
moment over pairs of subsets with each possible overlap, and Chebyshev tails.

All formula evaluation runs in log space (lgamma for binomials, log1p for
the near-one powers) so values survive n = 10**6 without underflow, and the
same helper expressions are shared between functions that must agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "MarkovBound",
    "MomentReport",
    "BoundsBracket",
    "RowZeroWitness",
    "expected_count",
    "expected_fraction",
    "markov_tail",
    "pair_joint_probability",
    "mutual_polynomial",
    "mutual_leading_terms",
    "second_moment_terms",
    "second_moment_exact",
    "variance_exact",
    "chebyshev_tail",
    "nondominating_floor",
    "dominating_sets_bracket",
    "row_zero_witness",
    "binomial_power_ratio",
    "moment_report",
]

# Relative slack allowed when clamping a rounding-noise negative variance.
_VAR_CLAMP_REL = 1e-9


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _check_eps(epsilon: float) -> None:
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must be in [0, 1], got {epsilon}")


def _check_gamma(n: int, gamma: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= gamma <= n:
        raise ValueError(f"need 1 <= gamma <= n={n}, got gamma={gamma}")


def _outside_log(n: int, gamma: int, r: int, epsilon: float) -> float:
    """log probability that all n - 2*gamma + r outside vertices are
    dominated by both of two gamma-subsets sharing r vertices."""
    x = epsilon**gamma
    y = epsilon ** (2 * gamma - r)
    return (n - 2 * gamma + r) * math.log1p(-2.0 * x + y)


def expected_count(n: int, gamma: int, epsilon: float) -> float:
    """E[X]: expected number of dominating gamma-subsets,
    C(n, gamma) * (1 - epsilon**gamma)**(n - gamma)."""
    _check_gamma(n, gamma)
    _check_eps(epsilon)
    if epsilon == 1.0:
        return 1.0 if gamma == n else 0.0
    if epsilon == 0.0:
        return float(math.comb(n, gamma))
    # r = gamma collapses the pairwise outside term to the single-subset one;
    # sharing the helper keeps this bit-identical to the r = gamma moment term.
    return math.exp(_log_comb(n, gamma) + _outside_log(n, gamma, gamma, epsilon))


def expected_fraction(n: int, gamma: int, epsilon: float) -> float:
    """Probability that one fixed gamma-subset dominates."""
    _check_gamma(n, gamma)
    _check_eps(epsilon)
    if epsilon == 1.0:
        return 1.0 if gamma == n else 0.0
    return math.exp(_outside_log(n, gamma, gamma, epsilon))


@dataclass(frozen=True)
class MarkovBound:
    """Markov bound on seeing any dominating set one size below target."""

    raw: float
    bound: float


def markov_tail(n: int, gamma: int, epsilon: float) -> MarkovBound:
    """P(some (gamma-1)-subset dominates) <= E[X_(gamma-1)], capped at 1."""
    if gamma < 2:
        raise ValueError(f"the Markov bound needs gamma >= 2, got {gamma}")
    raw = expected_count(n, gamma - 1, epsilon)
    return MarkovBound(raw=raw, bound=min(1.0, raw))


def mutual_polynomial(gamma: int, r: int = 0) -> dict[int, int]:
    """Exact coefficients, keyed by power of epsilon, of the probability that
    two gamma-subsets sharing r vertices dominate each other's members.

    Inclusion-exclusion over which of the gamma - r private vertices on each
    side end up isolated from the other subset; the event that i on one side
    and j on the other are all isolated needs gamma*(i+j) - i*j absent pairs.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if not 0 <= r <= gamma:
        raise ValueError(f"need 0 <= r <= gamma={gamma}, got r={r}")
    s = gamma - r
    coef: dict[int, int] = {}
    for i in range(s + 1):
        for j in range(s + 1):
            e = gamma * (i + j) - i * j
            c = (-1) ** (i + j) * math.comb(s, i) * math.comb(s, j)
            coef[e] = coef.get(e, 0) + c
    return {e: c for e, c in sorted(coef.items()) if c != 0}


def mutual_leading_terms(gamma: int) -> dict[int, int]:
    """Low-order terms of mutual_polynomial(gamma, 0): the contributions of
    at most two isolated private vertices.

    Returns {0: 1, gamma: -2*gamma, 2*gamma - 1: gamma**2, 2*gamma: gamma**2 - gamma}.
    For gamma = 2 the full polynomial merges the 2*gamma power with
    higher-order contributions, so these terms are reported separately.
    """
    if gamma < 2:
        raise ValueError(f"leading-term extraction needs gamma >= 2, got {gamma}")
    return {
        0: 1,
        gamma: -2 * gamma,
        2 * gamma - 1: gamma**2,
        2 * gamma: gamma**2 - gamma,
    }


def _mutual_value(gamma: int, r: int, epsilon: float) -> float:
    return math.fsum(c * epsilon**e for e, c in mutual_polynomial(gamma, r).items())


def pair_joint_probability(gamma: int, r: int, epsilon: float, n: int) -> float:
    """Probability that two fixed gamma-subsets sharing exactly r vertices
    both dominate."""
    _check_gamma(n, gamma)
    _check_eps(epsilon)
    if not 0 <= r <= gamma:
        raise ValueError(f"need 0 <= r <= gamma={gamma}, got r={r}")
    if n - 2 * gamma + r < 0:
        raise ValueError(f"two gamma-subsets with overlap {r} need n >= {2 * gamma - r}")
    if epsilon == 1.0:
        return 1.0 if (r == gamma and gamma == n) else 0.0
    mutual = _mutual_value(gamma, r, epsilon)
    if mutual <= 0.0:
        return 0.0
    return math.exp(math.log(mutual) + _outside_log(n, gamma, r, epsilon))


def second_moment_terms(n: int, gamma: int, epsilon: float) -> dict[int, float]:
    """Per-overlap contributions to E[X**2], keyed by overlap size r.

    Term r counts ordered pairs of gamma-subsets sharing r vertices times
    their joint domination probability.
    """
    _check_gamma(n, gamma)
    _check_eps(epsilon)
    if epsilon == 1.0:
        return {gamma: 1.0 if gamma == n else 0.0}
    if epsilon == 0.0:
        # Complete graph almost surely: every pair of subsets dominates, and
        # the overlap terms sum to C(n, gamma)**2 exactly.
        return {
            r: float(math.comb(n, gamma) * math.comb(gamma, r) * math.comb(n - gamma, gamma - r))
            for r in range(max(0, 2 * gamma - n), gamma + 1)
        }
    terms: dict[int, float] = {}
    for r in range(max(0, 2 * gamma - n), gamma + 1):
        if math.comb(gamma, r) == 0 or math.comb(n - gamma, gamma - r) == 0:
            continue
        log_ways = (
            _log_comb(n, gamma) + _log_comb(gamma, r) + _log_comb(n - gamma, gamma - r)
        )
        mutual = _mutual_value(gamma, r, epsilon)
        if mutual <= 0.0:
            terms[r] = 0.0
            continue
        terms[r] = math.exp(log_ways + math.log(mutual) + _outside_log(n, gamma, r, epsilon))
    return terms


def second_moment_exact(n: int, gamma: int, epsilon: float) -> float:
    """E[X**2] for the count of dominating gamma-subsets."""
    return math.fsum(second_moment_terms(n, gamma, epsilon).values())


def variance_exact(n: int, gamma: int, epsilon: float) -> float:
    """Var(X) = E[X**2] - E[X]**2.

    A rounding-noise negative within 1e-9 relative of E[X**2] clamps to 0;
    anything farther negative raises, since the true value cannot be < 0.
    """
    m2 = second_moment_exact(n, gamma, epsilon)
    mean = expected_count(n, gamma, epsilon)
    var = m2 - mean * mean
    if var < 0.0:
        if -var <= _VAR_CLAMP_REL * max(m2, 1e-300):
            return 0.0
        raise ArithmeticError(
            f"variance evaluated to {var} (beyond rounding tolerance) at "
            f"n={n}, gamma={gamma}, epsilon={epsilon}"
        )
    return var


def chebyshev_tail(n: int, gamma: int, epsilon: float, phi: float) -> float:
    """Chebyshev bound on |X - E[X]| exceeding phi * n**(gamma - 1/2), capped at 1."""
    if phi <= 0:
        raise ValueError(f"phi must be > 0, got {phi}")
    dev = phi * n ** (gamma - 0.5)
    return min(1.0, variance_exact(n, gamma, epsilon) / (dev * dev))


def nondominating_floor(n: int, gamma: int) -> float:
    """Minimum number of non-dominating gamma-subsets any graph with
    domination number gamma must have: n**(gamma - 1 - 1/(gamma-1)) / gamma!.

    Needs gamma >= 3: with gamma = 2 a single adjacent pair can dominate, and
    no polynomial floor of this shape holds.  Any n >= 1 is accepted; below
    n = gamma the value is a plain formula evaluation with no graph behind it.
    """
    if gamma < 3:
        raise ValueError(f"the floor needs gamma >= 3, got {gamma}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n ** (gamma - 1 - 1.0 / (gamma - 1)) / math.factorial(gamma)


@dataclass(frozen=True)
class BoundsBracket:
    """Two-sided bracket on the maximum number of dominating gamma-subsets
    over graphs with domination number gamma."""

    n: int
    gamma: int
    total: int
    upper_defect: float
    lower_defect: float
    crossover_n: int

    @property
    def upper(self) -> float:
        return self.total - self.upper_defect

    @property
    def lower(self) -> float:
        return self.total - self.lower_defect


def dominating_sets_bracket(n: int, gamma: int) -> BoundsBracket:
    """Bracket C(n,g) - lower_defect <= max count <= C(n,g) - upper_defect.

    The upper defect is nondominating_floor; the lower defect
    ln(n)**gamma * n**(gamma - 1/(gamma-1)) is what the random construction
    concedes.  crossover_n is the first n where the bracket is ordered.
    """
    if gamma < 3:
        raise ValueError(f"the bracket needs gamma >= 3, got {gamma}")
    if n < gamma:
        raise ValueError(f"need n >= gamma={gamma}, got {n}")
    upper_defect = nondominating_floor(n, gamma)
    lower_defect = math.log(n) ** gamma * n ** (gamma - 1.0 / (gamma - 1))
    crossover = gamma
    while _bracket_defect_gap(crossover, gamma) < 0:
        crossover += 1
    if n >= crossover and upper_defect > lower_defect:
        raise AssertionError(f"bracket inversion past crossover at n={n}, gamma={gamma}")
    return BoundsBracket(
        n=n,
        gamma=gamma,
        total=math.comb(n, gamma),
        upper_defect=upper_defect,
        lower_defect=lower_defect,
        crossover_n=crossover,
    )


def _bracket_defect_gap(n: int, gamma: int) -> float:
    return (
        math.log(n) ** gamma * n ** (gamma - 1.0 / (gamma - 1))
        - n ** (gamma - 1 - 1.0 / (gamma - 1)) / math.factorial(gamma)
    )


@dataclass(frozen=True)
class RowZeroWitness:
    """Largest a with C(n, b) > n * C(a, b), plus the derived row-zero demand.

    If every b-subset of an n-vertex graph dominates, some closed
    neighborhood must miss more than a_star vertices; a_star + 1 is then
    compared against the n**((b-1)/b) growth this forces.
    """

    n: int
    b: int
    a_star: int | None
    root_bound: float

    @property
    def zeros_forced(self) -> int | None:
        return None if self.a_star is None else self.a_star + 1

    @property
    def meets_root_bound(self) -> bool | None:
        if self.a_star is None:
            return None
        return self.a_star + 1 >= self.root_bound


def row_zero_witness(n: int, b: int) -> RowZeroWitness:
    """Binary search for the largest a in [b, n-1] with C(n, b) > n * C(a, b)."""
    if b < 2:
        raise ValueError(
            f"need b >= 2, got {b}: C(n, 1) = n can never exceed n * C(a, 1)"
        )
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    root_bound = n ** ((b - 1) / b)
    target = math.comb(n, b)
    if n <= b or target <= n * math.comb(b, b):
        return RowZeroWitness(n=n, b=b, a_star=None, root_bound=root_bound)
    lo, hi = b, n - 1
    # n * C(a, b) grows strictly with a, so the predicate is monotone.
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if target > n * math.comb(mid, b):
            lo = mid
        else:
            hi = mid - 1
    return RowZeroWitness(n=n, b=b, a_star=lo, root_bound=root_bound)


def binomial_power_ratio(a: int, b: int) -> float:
    """C(a, b) * b! / a**b as the exact product of (1 - i/a) for i < b.

    Tends to 1 as a grows with b fixed, which is what lets binomials be
    traded for powers inside the asymptotic bounds.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if a < b:
        raise ValueError(f"need a >= b, got a={a}, b={b}")
    out = 1.0
    for i in range(b):
        out *= 1.0 - i / a
    return out


@dataclass(frozen=True)
class MomentReport:
    """Bundle of the closed-form quantities for one (n, gamma, epsilon)."""

    n: int
    gamma: int
    epsilon: float
    expected: float
    expected_fraction: float
    second_moment: float
    variance: float
    variance_clamped: bool
    markov_raw: float | None
    markov_bound: float | None

    def chebyshev_tail(self, phi: float) -> float:
        if phi <= 0:
            raise ValueError(f"phi must be > 0, got {phi}")
        dev = phi * self.n ** (self.gamma - 0.5)
        return min(1.0, self.variance / (dev * dev))


def moment_report(n: int, gamma: int, epsilon: float) -> MomentReport:
    _check_gamma(n, gamma)
    _check_eps(epsilon)
    mean = expected_count(n, gamma, epsilon)
    m2 = second_moment_exact(n, gamma, epsilon)
    raw_var = m2 - mean * mean
    variance = variance_exact(n, gamma, epsilon)
    markov = markov_tail(n, gamma, epsilon) if gamma >= 2 else None
    return MomentReport(
        n=n,
        gamma=gamma,
        epsilon=epsilon,
        expected=mean,
        expected_fraction=expected_fraction(n, gamma, epsilon),
        second_moment=m2,
        variance=variance,
        variance_clamped=raw_var < 0.0,
        markov_raw=None if markov is None else markov.raw,
        markov_bound=None if markov is None else markov.bound,
    )

"""Brute-force sums over sieved primes, with explicit tail bounds.

These are the slow ground truth for the accelerated series: add up
f(p^-s) (or f'(p^-s) p^-s log p) for every prime p <= limit, then bound
what the primes beyond the limit can contribute.

Tail bounds use the explicit Rosser-Schoenfeld inequalities

    pi(t) <= 1.25506 t / log t   (t > 1),   pi(t) >= t / log t   (t >= 17),
    theta(t) <= 1.01624 t        (t > 0),

so they hold for every limit, not just asymptotically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from .arith import iter_prime_blocks
from .funcs import AnalyticFunction

PI_UPPER = 1.25506
THETA_UPPER = 1.01624


class OracleDomainError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    """Partial sum over p <= limit.

    The true value lies in [partial, partial + tail_bound] when every term is
    nonnegative, and within partial +- tail_bound otherwise.  ``tail_estimate``
    is the prime-number-theorem density estimate of the missing tail.
    """

    partial: float
    tail_bound: float
    limit: int
    tail_estimate: float = 0.0
    n_primes: int = 0

    @property
    def estimate(self) -> float:
        return self.partial + self.tail_estimate

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.partial - self.tail_bound - slack <= value <= self.partial + self.tail_bound + slack


def _accumulate(limit: int, term) -> tuple[float, int]:
    # fsum per block, then fsum of block sums: ascending order, deterministic
    block_sums = []
    count = 0
    for block in iter_prime_blocks(limit):
        block_sums.append(math.fsum(term(block.astype(float))))
        count += len(block)
    return math.fsum(block_sums), count


def prime_power_tail(sigma: float, limit: int) -> float:
    """Upper bound for sum_{p > limit} p^-sigma, sigma > 1."""
    L = float(limit)
    base = L ** (1.0 - sigma) / ((sigma - 1.0) * math.log(L))
    if limit >= 17:
        factor = max(2.0, 1.0 + (PI_UPPER - 1.0) * sigma)
    else:
        factor = max(2.0, PI_UPPER * sigma)
    return factor * base


def log_prime_power_tail(sigma: float, limit: int) -> float:
    """Upper bound for sum_{p > limit} log(p) p^-sigma, sigma > 1."""
    L = float(limit)
    return max(4.0, THETA_UPPER * sigma) * L ** (1.0 - sigma) / (sigma - 1.0)


def direct_prime_sum(f: AnalyticFunction, s: float, limit: int) -> OracleResult:
    """sum_{p <= limit} f(p^-s) with a bound on the primes beyond ``limit``."""
    if s <= 1:
        raise OracleDomainError(f"the prime sum diverges for s = {s} <= 1")
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    k0 = f.leading_order()
    if k0 is None:
        return OracleResult(0.0, 0.0, limit)

    partial, count = _accumulate(limit, lambda p: f.eval(np.power(p, -s)))

    sigma = k0 * s
    xmax = float(limit) ** -s
    c0 = f.coeff(k0)
    # |f(x)| <= x^k0 (|c_k0| + 2 C xmax) for 0 < x <= xmax <= 1/2
    env = abs(c0) + (2.0 * f.coeff_bound * xmax if f.degree != k0 else 0.0)
    tail_bound = env * prime_power_tail(sigma, limit)
    tail_estimate = c0 * float(exp1((sigma - 1.0) * math.log(limit)))
    return OracleResult(partial, tail_bound, limit, tail_estimate, count)


def direct_logweight_sum(f: AnalyticFunction, s: float, limit: int) -> OracleResult:
    """sum_{p <= limit} f'(p^-s) p^-s log p with a tail bound.

    s = 1 is admissible whenever f'(x) x = O(x^2), as for f1.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    k0 = f.leading_order()
    if k0 is None:
        return OracleResult(0.0, 0.0, limit)
    sigma = k0 * s
    if s < 1 or sigma <= 1:
        raise OracleDomainError(
            f"log-weighted sum diverges: effective exponent {sigma} <= 1 at s = {s}")

    def term(p):
        x = np.power(p, -s)
        return f.eval_deriv(x) * x * np.log(p)

    partial, count = _accumulate(limit, term)

    xmax = float(limit) ** -s
    c0 = k0 * f.coeff(k0)
    env = abs(c0) + (f.coeff_bound * (2 * k0 + 4) * xmax if f.degree != k0 else 0.0)
    tail_bound = env * log_prime_power_tail(sigma, limit)
    tail_estimate = c0 * float(limit) ** (1.0 - sigma) / (sigma - 1.0)
    return OracleResult(partial, tail_bound, limit, tail_estimate, count)

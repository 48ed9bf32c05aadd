"""Evaluators turning sums over primes into series of zeta values.

With b_n = sum_{d|n} d c_d mu(n/d) (see ``arith.divisor_weights``):

    sum_p f(p^-s)                 = sum_n (b_n / n) log zeta(ns)
    sum_p f'(p^-s) p^-s log p     = -sum_n b_n zeta'(ns) / zeta(ns)

The finite form over an arbitrary sequence uses -log prod_k (1 - a_k^n) in
place of log zeta(ns); the leading minus sign comes from
log(1 - x) = -sum_m x^m / m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.special import exp1

from . import zeta as Z
from .arith import PrimeSieve, build_sieve, divisor_weights, mobius
from .bounds import ErrorBudget, scheme_bound, select_truncation, truncation_budget
from .funcs import AnalyticFunction, BoundaryConvergenceError

DEFAULT_SIEVE_LIMIT = 10**6
DEFAULT_TOL = 1e-15


class SeriesDomainError(ValueError):
    pass


@dataclass
class SeriesResult:
    """An accelerated sum together with its per-term ledger.

    ``value`` is the ascending-n sequential sum of ``terms``.
    """

    value: float
    M: int
    s: float
    function_id: str
    terms: list[tuple[int, float]] = field(default_factory=list)
    budget: ErrorBudget | None = None
    method: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def error_bound(self) -> float | None:
        return None if self.budget is None else self.budget.bound

    def replay(self) -> float:
        return _accumulate(self.terms)


def _accumulate(terms: list[tuple[int, float]]) -> float:
    total = 0.0
    for _, t in terms:
        total += t
    return total


def _resolve_M(f, s, M, tol, logweight):
    if M is not None and tol is not None:
        raise ValueError("give either M or tol, not both")
    if M is not None:
        if M < 1:
            raise ValueError(f"M must be >= 1, got {M}")
        return int(M)
    return select_truncation(f, s, DEFAULT_TOL if tol is None else tol, logweight).M


def finite_identity(a: Sequence[float], f: AnalyticFunction, N: int) -> tuple[float, float]:
    """Both sides of sum_k f(a_k) = -sum_{n<=N} (b_n/n) log prod_k (1 - a_k^n).

    Returns ``(lhs, rhs)``; the right side is truncated after n = N.
    """
    a = np.asarray(a, dtype=float).ravel()
    if np.any(np.abs(a) >= 1.0):
        raise ValueError("every |a_k| must be < 1")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if a.size == 0:
        return 0.0, 0.0
    lhs = math.fsum(np.atleast_1d(f.eval(a)))
    w = divisor_weights(f, N)
    rhs = 0.0
    power = np.ones_like(a)
    for n in range(1, N + 1):
        power = power * a
        b = float(w.b[n])
        if b == 0.0:
            continue
        log_prod = math.fsum(np.log1p(-power))
        rhs -= b / n * log_prod
    return lhs, rhs


def finite_identity_tail_bound(a: Sequence[float], f: AnalyticFunction, N: int) -> float:
    """Bound on what ``finite_identity`` drops by stopping the n-sum at N.

    |b_n| <= n sup_k |k c_k| and |log(1 - x^n)| <= |x|^n / (1 - |x|^n) give
    sup |k c_k| * sum_k |a_k|^(N+1) / ((1 - |a_k|)(1 - |a_k|^(N+1))).
    """
    r = np.abs(np.asarray(a, dtype=float).ravel())
    if r.size == 0:
        return 0.0
    if f.degree is not None:
        sup = max((abs(k * f.coeff(k)) for k in range(1, f.degree + 1)), default=0.0)
    else:
        # sampled sup; exact for the builtins, whose k c_k is periodic or constant
        sup = max(abs(k * f.coeff(k)) for k in range(1, 4 * N + 1))
    rN = r ** (N + 1)
    return float(sup * np.sum(rN / ((1.0 - r) * (1.0 - rN))))


def prime_sum(f: AnalyticFunction, s: float, M: int | None = None, tol: float | None = None,
              with_bound: bool = True) -> SeriesResult:
    """sum_p f(p^-s) as sum_{n<=M} (b_n/n) log zeta(ns), s > 1."""
    if s <= 1:
        raise SeriesDomainError(f"prime_sum needs s > 1, got {s}")
    M = _resolve_M(f, s, M, tol, logweight=False)
    w = divisor_weights(f, M)
    terms = []
    for n in range(1, M + 1):
        b = float(w.b[n])
        if b == 0.0:
            continue
        terms.append((n, b / n * Z.log_zeta(n * s)))
    budget = None
    if with_bound:
        try:
            budget = truncation_budget(f, M, s)
        except BoundaryConvergenceError:
            budget = None
    return SeriesResult(_accumulate(terms), M, s, f.id, terms, budget, method="zeta")


def prime_sum_logweight(f: AnalyticFunction, s: float, M: int | None = None,
                        tol: float | None = None, with_bound: bool = True) -> SeriesResult:
    """sum_p f'(p^-s) p^-s log p as -sum_n b_n zeta'(ns)/zeta(ns).

    s = 1 is allowed when b_1 = c_1 = 0, since zeta(s) itself is then never needed.
    """
    if s < 1:
        raise SeriesDomainError(f"prime_sum_logweight needs s >= 1, got {s}")
    if s == 1 and f.coeff(1) != 0.0:
        raise SeriesDomainError("s = 1 needs b_1 = 0 (the pole of zeta at 1)")
    M = _resolve_M(f, s, M, tol, logweight=True)
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    w = divisor_weights(f, M)
    n0 = 1 if w.b[1] != 0.0 else 2
    terms = []
    for n in range(n0, M + 1):
        b = float(w.b[n])
        if b == 0.0:
            continue
        terms.append((n, -b * Z.log_deriv(n * s)))
    budget = truncation_budget(f, M, s, logweight=True) if with_bound else None
    return SeriesResult(_accumulate(terms), M, s, f.id, terms, budget, method="zeta-logweight")


def finite_scheme(g: AnalyticFunction, s: float, M: int, sieve: PrimeSieve | None = None,
                  l_max: int = 64) -> SeriesResult:
    """sum_{n<=M} (mu(n)/n) sum_k sum_{l<=l_max} g(p_k^(-snl)) / l over sieved primes.

    The k-sum stops at the sieve limit L; each (n, l) pair gets the density
    estimate c_k0 E1((k0 s n l - 1) log L) for the primes beyond it.  The
    l-sum also stops once 2^(-snl)/l < 1e-18.
    """
    if s <= 1:
        raise SeriesDomainError(f"finite_scheme needs s > 1, got {s}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if l_max < 1:
        raise ValueError(f"l_max must be >= 1, got {l_max}")
    if not math.isfinite(g.coeff_bound):
        raise ValueError("g needs bounded Taylor coefficients")
    if sieve is None:
        sieve = build_sieve(DEFAULT_SIEVE_LIMIT)
    if len(sieve.primes) == 0:
        raise ValueError("empty sieve")

    k0 = g.leading_order()
    primes = sieve.primes.astype(float)
    logL = math.log(sieve.limit)
    terms = []
    tail_total = 0.0
    for n in range(1, M + 1):
        mu_n = mobius(n, sieve) if n <= sieve.limit else mobius(n)
        if mu_n == 0 or k0 is None:
            continue
        base = np.power(primes, -s * n)
        x = np.ones_like(base)
        inner = 0.0
        for l in range(1, l_max + 1):
            x = x * base
            live = np.count_nonzero(x)
            x = x[:live]
            base = base[:live]
            head = math.fsum(np.atleast_1d(g.eval(x))) if live else 0.0
            sigma = k0 * s * n * l
            tail = g.coeff(k0) * float(exp1((sigma - 1.0) * logL))
            tail_total += mu_n / n * tail / l
            inner += (head + tail) / l
            if 2.0 ** (-s * n * l) / l < 1e-18:
                break
        terms.append((n, mu_n / n * inner))
    budget = scheme_bound(g, M, s)
    return SeriesResult(_accumulate(terms), M, s, g.id, terms, budget, method="finite",
                        meta={"sieve_limit": sieve.limit, "prime_tail_estimate": tail_total,
                              "l_max": l_max})

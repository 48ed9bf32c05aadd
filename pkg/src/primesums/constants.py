"""Landau's totient constants, the log-weighted prime series, and two
zeta-regularized prime products."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import zeta as Z
from .arith import PrimeSieve, build_sieve, divisor_weights
from .bounds import select_truncation
from .funcs import builtin
from .series import prime_sum_logweight

EULER_GAMMA = 0.577215664901533
LOG_2PI = math.log(2.0 * math.pi)
_S_TOL = 1e-17
_ROUTE_AGREEMENT = 1e-10


@dataclass(frozen=True)
class NamedConstant:
    id: str
    value: float
    method: str
    error_bound: float | None = None


def euler_gamma() -> NamedConstant:
    return NamedConstant("gamma", EULER_GAMMA, "closed-form")


@lru_cache(maxsize=None)
def landau_a() -> NamedConstant:
    """A = 315 zeta(3) / (2 pi^4) = zeta(2) zeta(3) / zeta(6)."""
    return NamedConstant("A", 315.0 * Z.zeta(3.0) / (2.0 * math.pi**4), "closed-form")


def landau_a_zeta_ratio() -> float:
    return Z.zeta(2.0) * Z.zeta(3.0) / Z.zeta(6.0)


def landau_a_partial(limit: int, sieve: PrimeSieve | None = None) -> float:
    """sum_{k <= limit} mu(k)^2 / (k phi(k)); converges to A from below, slowly."""
    sieve = sieve if sieve is not None and sieve.limit >= limit else build_sieve(limit)
    k = np.arange(1, limit + 1)
    keep = sieve.mu[1 : limit + 1] != 0
    kk = k[keep].astype(float)
    return math.fsum(1.0 / (kk * sieve.phi[1 : limit + 1][keep].astype(float)))


@lru_cache(maxsize=None)
def series_a() -> NamedConstant:
    """S = sum_p log p / (p^2 - p + 1), via the log-weighted f1 series at s = 1."""
    f1 = builtin("f1")
    budget = select_truncation(f1, 1.0, _S_TOL, logweight=True)
    res = prime_sum_logweight(f1, 1.0, budget.M)
    return NamedConstant("S", res.value, "zeta-accelerated", res.error_bound)


def landau_b_routes() -> tuple[float, float]:
    """(A (gamma - S), A (gamma + sum_{n>=2} zeta'(n)/zeta(n) b_n))."""
    A = landau_a().value
    S = series_a()
    f1 = builtin("f1")
    M = select_truncation(f1, 1.0, _S_TOL, logweight=True).M
    w = divisor_weights(f1, M)
    acc = 0.0
    for n in range(2, M + 1):
        b = float(w.b[n])
        if b != 0.0:
            acc += Z.log_deriv(float(n)) * b
    return A * (EULER_GAMMA - S.value), A * (EULER_GAMMA + acc)


@lru_cache(maxsize=None)
def landau_b() -> NamedConstant:
    """B = A (gamma - S); returns the zeta-series route after checking both agree."""
    via_s, via_zeta = landau_b_routes()
    if abs(via_s - via_zeta) > _ROUTE_AGREEMENT:
        raise ArithmeticError(f"routes for B disagree: {via_s!r} vs {via_zeta!r}")
    S = series_a()
    err = None if S.error_bound is None else landau_a().value * S.error_bound
    return NamedConstant("B", via_zeta, "zeta-accelerated", err)


def regularized_product(id: str) -> NamedConstant:
    """Closed forms of the zeta-regularized products over the primes.

    ``primes``:      prod_p p        = 4 pi^2
    ``primes_logp``: prod_p p^log p  = exp(2 zeta''(0) + 12 log(2 pi)^2)
    """
    if id == "primes":
        return NamedConstant("prod_primes", 4.0 * math.pi**2, "closed-form")
    if id == "primes_logp":
        exponent = 2.0 * Z.zeta_deriv(0.0, 2) + 12.0 * LOG_2PI**2
        return NamedConstant("prod_primes_logp", math.exp(exponent), "closed-form")
    raise ValueError(f"unknown regularized product {id!r}; use 'primes' or 'primes_logp'")


def regularization_check() -> float:
    """exp(-2 zeta'(0)); equals 2 pi, whose square is the product over all primes."""
    return math.exp(-2.0 * Z.zeta_deriv(0.0, 1))


NAMES = ("A", "B", "gamma", "S", "prod_primes", "prod_primes_logp")


def by_name(name: str) -> NamedConstant:
    table = {
        "A": landau_a,
        "B": landau_b,
        "gamma": euler_gamma,
        "S": series_a,
        "prod_primes": lambda: regularized_product("primes"),
        "prod_primes_logp": lambda: regularized_product("primes_logp"),
    }
    if name not in table:
        raise ValueError(f"unknown constant {name!r}; valid names: {', '.join(NAMES)}")
    return table[name]()

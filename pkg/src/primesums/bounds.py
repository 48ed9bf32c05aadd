"""A-priori truncation bounds for the zeta-value series, and choice of M."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import zeta as Z
from .funcs import AnalyticFunction, boundary_integral, default_radius

M_CAP = 120


@dataclass(frozen=True)
class ErrorBudget:
    """Bound on the tail of an outer n-sum truncated after n = M.

    ``kind`` is one of prop1, prop2, geometric-proxy, scheme-order.
    ``heuristic`` marks bounds whose constants were taken off the unit circle.
    ``capped`` marks a truncation search that hit ``M_CAP`` without meeting tol.
    """

    M: int
    s: float
    bound: float
    kind: str
    inputs: dict = field(default_factory=dict)
    heuristic: bool = False
    capped: bool = False


def prop1_prefactor(s: float) -> float:
    t = 2.0 ** s
    return 2.0 * t * (t + 1.0) * (s + 1.0) / (math.pi * (t - 1.0) ** 3)


def prop1_bound(f: AnalyticFunction, M: int, s: float, radius: float | None = None,
                nodes: int = 4096) -> ErrorBudget:
    """Cauchy-estimate bound on sum_{n>M} (b_n/n) log zeta(ns).

    bound = 2^(s+1) (2^s+1)(s+1) / (pi (2^s-1)^3) * C_f * M^2 / ((sM+s-1) 2^(sM))
    with C_f the integral of |f| around the circle of the given radius.
    """
    if s <= 1:
        raise ValueError(f"prop1 bound needs s > 1, got {s}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if radius is None:
        radius = default_radius(f)
    C_f = boundary_integral(f, radius, nodes)
    tail = M * M * 2.0 ** (-s * M) / (s * M + s - 1.0)
    bound = prop1_prefactor(s) * C_f * tail
    return ErrorBudget(M, s, bound, "prop1",
                       {"C_f": C_f, "radius": radius, "nodes": nodes},
                       heuristic=radius < 1.0 and f.degree is None)


def prop2_bound(M: int) -> ErrorBudget:
    """(2M + 4) |zeta'(M + 1)| for the log-weighted f1 series at s = 1."""
    if M < 2:
        raise ValueError(f"prop2 bound needs M >= 2, got {M}")
    dz = abs(Z.zeta_deriv(M + 1.0, 1))
    return ErrorBudget(M, 1.0, (2 * M + 4) * dz, "prop2", {"abs_zeta_prime": dz})


def geometric_proxy_bound(f: AnalyticFunction, M: int, s: float) -> ErrorBudget:
    """Bound for the log-weighted series of a general f.

    Uses |b_n| <= n sup|k c_k| and |zeta'/zeta(x)| <= 2^-x (log 2 + ...) <= 4 * 2^-x (1 + 2/(x-1)).
    """
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    sup = max(abs(k * f.coeff(k)) for k in range(1, 4 * M + 1))
    total = 0.0
    n = M + 1
    while True:
        x = n * s
        term = n * 2.0 ** (-x) * (1.0 + 2.0 / (x - 1.0))
        total += term
        if term <= 1e-20 * total or term == 0.0:
            break
        n += 1
    return ErrorBudget(M, s, 4.0 * sup * total, "geometric-proxy", {"sup_kc": sup})


def scheme_bound(g: AnalyticFunction, M: int, s: float) -> ErrorBudget:
    """Order-of-magnitude term 4 M |g(2^(-s(M+1)))| of the finite scheme."""
    x = 2.0 ** (-s * (M + 1))
    return ErrorBudget(M, s, 4.0 * M * abs(float(g.eval(x))), "scheme-order", {"x": x})


def _is_f1(f: AnalyticFunction) -> bool:
    return f.id == "f1"


def truncation_budget(f: AnalyticFunction, M: int, s: float,
                      logweight: bool = False, radius: float | None = None) -> ErrorBudget:
    """The bound matching a given evaluator."""
    if logweight:
        if _is_f1(f) and s == 1.0:
            return prop2_bound(M)
        return geometric_proxy_bound(f, M, s)
    return prop1_bound(f, M, s, radius)


def select_truncation(f: AnalyticFunction, s: float, tol: float,
                      logweight: bool | None = None, radius: float | None = None) -> ErrorBudget:
    """Budget for the smallest M <= 120 whose bound is <= tol (``capped`` if none)."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if logweight is None:
        logweight = s == 1.0
    if not logweight and s <= 1:
        raise ValueError(f"need s > 1, got {s}")
    first = 2 if (logweight and _is_f1(f) and s == 1.0) else 1
    if f.is_zero:
        return ErrorBudget(first, s, 0.0, "prop1", {"C_f": 0.0})
    budget = None
    for M in range(first, M_CAP + 1):
        budget = truncation_budget(f, M, s, logweight, radius)
        if budget.bound <= tol:
            return budget
    return ErrorBudget(budget.M, budget.s, budget.bound, budget.kind, budget.inputs,
                       budget.heuristic, capped=True)


def choose_M(f: AnalyticFunction, s: float, tol: float, logweight: bool | None = None) -> int:
    return select_truncation(f, s, tol, logweight).M

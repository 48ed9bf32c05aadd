"""Riemann zeta on the real axis by Euler-Maclaurin summation.

One kernel serves s > 1 and the continuation strip -1 < s < 1:

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{j=1}^{10} B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)

Derivatives in s are taken term by term, so zeta' and zeta'' come from the
same formula with no numerical differencing.  Values are memoized in a
thread-safe ``ZetaTable`` keyed on the bit pattern of s.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

# B_2, B_4, ..., B_22; the last one only feeds the error estimate.
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
]
_N_CORRECTIONS = 10
_EM_COEFFS = [float(b / math.factorial(2 * j))
              for j, b in enumerate(_BERNOULLI, start=1)]
_RISING = [Polynomial.fromroots([-i for i in range(2 * j - 1)])
           for j in range(1, len(_BERNOULLI) + 1)]

NODES_MAIN = 64
NODES_STRIP = 8
_EPS = np.finfo(float).eps


class ZetaDomainError(ValueError):
    """Argument outside the supported real domain."""


def _check_domain(s: float) -> float:
    s = float(s)
    if math.isnan(s):
        raise ZetaDomainError("s is NaN")
    if s == 1.0:
        raise ZetaDomainError("zeta has a pole at s = 1")
    if s <= -1.0:
        raise ZetaDomainError(f"s = {s} outside the supported domain (-1, inf)")
    return s


def default_nodes(s: float) -> int:
    # Small N in the strip keeps the cancellation in sum n^-s against N^(1-s)/(s-1) mild.
    return NODES_MAIN if s > 1 else NODES_STRIP


def _pieces(s: float, order: int, N: int, skip_one: bool) -> tuple[list[float], float]:
    """Euler-Maclaurin pieces of d^order/ds^order zeta(s), plus the first omitted term."""
    L = math.log(N)
    start = 2 if skip_one else 1
    n = np.arange(start, N, dtype=float)
    logn = np.log(n)
    pieces = list((-logn) ** order * np.power(n, -s))

    u = s - 1.0
    e = float(N) ** -u
    if order == 0:
        pieces.append(e / u)
    elif order == 1:
        pieces.append(e * (-L / u - 1.0 / u**2))
    else:
        pieces.append(e * (L**2 / u + 2.0 * L / u**2 + 2.0 / u**3))
    pieces.append((-L) ** order * float(N) ** -s / 2.0)

    omitted = 0.0
    for j, (c, P) in enumerate(zip(_EM_COEFFS, _RISING), start=1):
        E = float(N) ** -(s + 2 * j - 1)
        if E == 0.0:
            break
        p0 = P(s)
        if order == 0:
            t = c * p0 * E
        elif order == 1:
            t = c * (P.deriv()(s) - L * p0) * E
        else:
            t = c * (P.deriv(2)(s) - 2.0 * L * P.deriv()(s) + L * L * p0) * E
        if j > _N_CORRECTIONS:
            omitted = abs(t)
        else:
            pieces.append(t)
    return pieces, omitted


def _evaluate(s: float, order: int, N: int, minus_one: bool = False) -> tuple[float, float]:
    pieces, omitted = _pieces(s, order, N, skip_one=minus_one)
    value = math.fsum(pieces)
    # each piece carries a couple of ulps of its own, fsum adds one final rounding
    rounding = 2 * _EPS * math.fsum(abs(p) for p in pieces) + _EPS * abs(value)
    return value, omitted + rounding


class ZetaTable:
    """Memo of (s, derivative order, N) -> (value, absolute error estimate)."""

    def __init__(self):
        self._cache: dict[tuple[str, int, int], tuple[float, float]] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._cache)

    def entries(self) -> dict[tuple[str, int, int], tuple[float, float]]:
        with self._lock:
            return dict(self._cache)

    def lookup(self, s: float, order: int = 0, nodes: int | None = None) -> tuple[float, float]:
        """Return ``(value, abs_error_estimate)`` for order 0, 1, 2, or -1 (meaning zeta(s) - 1)."""
        s = _check_domain(s)
        if order not in (-1, 0, 1, 2):
            raise ValueError(f"derivative order must be 0, 1 or 2, got {order}")
        if order == -1 and s <= 1:
            raise ZetaDomainError("zeta(s) - 1 is only provided for s > 1")
        N = nodes if nodes is not None else default_nodes(s)
        if N < 4:
            raise ValueError("need at least 4 summation nodes")
        key = (s.hex(), order, N)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        if order == -1:
            res = _evaluate(s, 0, N, minus_one=True)
        elif order == 0 and s > 1:
            zm1, err = self.lookup(s, -1, N)
            res = (1.0 + zm1, err + _EPS)
        else:
            res = _evaluate(s, order, N)
        with self._lock:
            self._cache.setdefault(key, res)
        return res

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


TABLE = ZetaTable()


def zeta(s: float, nodes: int | None = None) -> float:
    """Riemann zeta(s) for real s in (-1, inf), s != 1."""
    return TABLE.lookup(s, 0, nodes)[0]


def zeta_deriv(s: float, order: int = 1, nodes: int | None = None) -> float:
    """First or second derivative of zeta at real s in (-1, inf), s != 1."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    return TABLE.lookup(s, order, nodes)[0]


def zeta_error(s: float, order: int = 0, nodes: int | None = None) -> float:
    """Absolute error estimate attached to the cached value."""
    return TABLE.lookup(s, order, nodes)[1]


def zeta_minus_one(s: float) -> float:
    """zeta(s) - 1 for s > 1, summed from n = 2 so it keeps full relative accuracy."""
    if float(s) <= 1:
        raise ZetaDomainError(f"zeta(s) - 1 needs s > 1, got {s}")
    return TABLE.lookup(s, -1)[0]


def log_zeta(s: float) -> float:
    """log zeta(s) for s > 1, as log1p(zeta(s) - 1)."""
    if float(s) <= 1:
        raise ZetaDomainError(f"log zeta(s) needs s > 1, got {s}")
    return math.log1p(zeta_minus_one(s))


def log_deriv(s: float) -> float:
    """zeta'(s) / zeta(s) for s > 1."""
    if float(s) <= 1:
        raise ZetaDomainError(f"zeta'/zeta needs s > 1, got {s}")
    return zeta_deriv(s, 1) / zeta(s)

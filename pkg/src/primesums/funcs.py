"""Analytic functions f with f(0) = 0, described by their Taylor coefficients.

Every function carries exact coefficient rules c_k = f^(k)(0)/k!, a direct
(vectorized) evaluator on (-1, 1], its derivative, and a uniform bound
|c_k| <= coeff_bound.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

SQRT3 = math.sqrt(3.0)
# additive constant making f1(0) = 0
F1_SHIFT = math.pi / (6.0 * SQRT3)
# a(k) = k c_k for f1, indexed by k mod 6
F1_TABLE = (-1, 0, 1, 1, 0, -1)
_F1_SERIES_CUTOFF = 0.05
_F1_SERIES_TERMS = 16


class CoefficientFileError(ValueError):
    """Malformed coefficient file."""


class BoundaryConvergenceError(ValueError):
    """Taylor series does not converge on the requested circle."""


@dataclass(frozen=True, eq=False)
class AnalyticFunction:
    """Taylor-coefficient provider with direct evaluation.

    Attributes:
        id: registry name
        coeff: k -> c_k for k >= 1
        eval: vectorized f(x) for real x in (-1, 1]
        eval_deriv: vectorized f'(x)
        coeff_bound: C with |c_k| <= C for every k
        degree: highest nonzero power for polynomials, None for infinite series
    """

    id: str
    coeff: Callable[[int], float]
    eval: Callable
    eval_deriv: Callable
    coeff_bound: float
    degree: int | None = None
    coeffs_list: tuple[float, ...] = field(default=(), repr=False)

    def coeffs(self, K: int) -> np.ndarray:
        """Array [c_1, ..., c_K]."""
        return np.array([self.coeff(k) for k in range(1, K + 1)], dtype=float)

    def leading_order(self, search: int = 64) -> int | None:
        """Smallest k with c_k != 0, or None for the zero function."""
        top = self.degree if self.degree is not None else search
        for k in range(1, top + 1):
            if self.coeff(k) != 0.0:
                return k
        return None

    @property
    def is_zero(self) -> bool:
        return self.degree == 0

    def taylor_eval(self, z, K: int) -> np.ndarray:
        """Partial sum sum_{k<=K} c_k z^k (complex allowed)."""
        z = np.asarray(z)
        c = np.concatenate(([0.0], self.coeffs(K)))
        return np.polynomial.polynomial.polyval(z, c)


# -- identity ----------------------------------------------------------------

def _identity() -> AnalyticFunction:
    def ev(x):
        out = np.array(x, dtype=float)
        return out if out.ndim else float(out)

    def dv(x):
        out = np.ones_like(np.asarray(x, dtype=float))
        return out if out.ndim else float(out)

    return AnalyticFunction(
        id="identity",
        coeff=lambda k: 1.0 if k == 1 else 0.0,
        eval=ev,
        eval_deriv=dv,
        coeff_bound=1.0,
        degree=1,
        coeffs_list=(1.0,),
    )


# -- f1 ------------------------------------------------------------------------

def f1_a(k: int) -> int:
    """a(k) = k c_k for f1: the period-6 pattern 0, 1, 1, 0, -1, -1."""
    return F1_TABLE[k % 6]


def _f1_coeff(k: int) -> float:
    return f1_a(k) / k


_F1_SMALL = np.array([0.0] + [_f1_coeff(k) for k in range(1, _F1_SERIES_TERMS + 1)])


def _f1_eval(x):
    x = np.asarray(x, dtype=float)
    closed = (np.arctan((2.0 * x - 1.0) / SQRT3) / SQRT3
              + 0.5 * np.log1p(x * (x - 1.0)) + F1_SHIFT)
    # the closed form loses digits to cancellation as x -> 0; f1(x) ~ x^2/2 there
    series = np.polynomial.polynomial.polyval(x, _F1_SMALL)
    out = np.where(np.abs(x) < _F1_SERIES_CUTOFF, series, closed)
    return out if out.ndim else float(out)


def _f1_deriv(x):
    x = np.asarray(x, dtype=float)
    out = x / (x * x - x + 1.0)
    return out if out.ndim else float(out)


def _f1() -> AnalyticFunction:
    return AnalyticFunction(
        id="f1",
        coeff=_f1_coeff,
        eval=_f1_eval,
        eval_deriv=_f1_deriv,
        coeff_bound=0.5,
    )


# -- -log(1 - x) -----------------------------------------------------------------

def _neg_log1m() -> AnalyticFunction:
    def ev(x):
        out = -np.log1p(-np.asarray(x, dtype=float))
        return out if out.ndim else float(out)

    def dv(x):
        out = 1.0 / (1.0 - np.asarray(x, dtype=float))
        return out if out.ndim else float(out)

    return AnalyticFunction(
        id="neg_log1m",
        coeff=lambda k: 1.0 / k,
        eval=ev,
        eval_deriv=dv,
        coeff_bound=1.0,
    )


# -- polynomials -------------------------------------------------------------------

def polynomial(coeffs: Sequence[float], coeff_bound: float | None = None,
               name: str | None = None) -> AnalyticFunction:
    """f(x) = sum_k coeffs[k-1] x^k; an empty list gives the zero function."""
    cs = [float(c) for c in coeffs]
    while cs and cs[-1] == 0.0:
        cs.pop()
    bound = max((abs(c) for c in cs), default=0.0)
    if coeff_bound is not None:
        if coeff_bound < bound:
            raise ValueError(f"coeff_bound {coeff_bound} is below max |c_k| = {bound}")
        bound = float(coeff_bound)
    full = np.array([0.0] + cs)
    dfull = np.polynomial.polynomial.polyder(full) if cs else np.array([0.0])

    def coeff(k: int) -> float:
        return cs[k - 1] if 1 <= k <= len(cs) else 0.0

    def ev(x):
        x = np.asarray(x, dtype=float)
        out = np.polynomial.polynomial.polyval(x, full) if cs else np.zeros_like(x)
        return out if out.ndim else float(out)

    def dv(x):
        x = np.asarray(x, dtype=float)
        out = np.polynomial.polynomial.polyval(x, dfull) + np.zeros_like(x)
        return out if out.ndim else float(out)

    if name is None:
        name = "zero" if not cs else "polynomial(" + ",".join(repr(c) for c in cs) + ")"
    return AnalyticFunction(id=name, coeff=coeff, eval=ev, eval_deriv=dv,
                            coeff_bound=bound, degree=len(cs), coeffs_list=tuple(cs))


def square() -> AnalyticFunction:
    return _builtin_cached("square")


def zero() -> AnalyticFunction:
    return _builtin_cached("zero")


@lru_cache(maxsize=None)
def _builtin_cached(name: str) -> AnalyticFunction:
    if name == "identity":
        return _identity()
    if name == "f1":
        return _f1()
    if name == "neg_log1m":
        return _neg_log1m()
    if name == "square":
        return polynomial([0.0, 1.0], name="square")
    if name == "zero":
        return polynomial([], name="zero")
    raise KeyError(name)


BUILTIN_NAMES = ("identity", "f1", "neg_log1m", "square", "zero")


def builtin(id: str, coeffs: Sequence[float] | None = None) -> AnalyticFunction:
    """Look up a registered function.

    ``id`` is one of identity, f1, neg_log1m, square, zero, or ``polynomial``
    together with ``coeffs`` = [c_1, c_2, ...].  The string form
    ``"polynomial:c1,c2,..."`` is accepted as well.
    """
    if id == "polynomial":
        if coeffs is None:
            raise ValueError("polynomial needs a coefficient list")
        return polynomial(coeffs)
    if id.startswith("polynomial:"):
        body = id.split(":", 1)[1]
        return polynomial([float(t) for t in body.split(",") if t.strip()])
    try:
        return _builtin_cached(id)
    except KeyError:
        raise ValueError(
            f"unknown function {id!r}; known: {', '.join(BUILTIN_NAMES)}, polynomial"
        ) from None


def registered() -> list[AnalyticFunction]:
    """The named infinite-series and polynomial builtins (zero excluded)."""
    return [builtin(n) for n in ("identity", "f1", "neg_log1m", "square")]


def load_coefficient_file(path: str | Path) -> AnalyticFunction:
    """Read a ``k,c_k`` coefficient file with a ``# coeff_bound=<real>`` header."""
    path = Path(path)
    bound = None
    entries: dict[int, float] = {}
    last_k = 0
    with path.open() as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("coeff_bound="):
                    try:
                        bound = float(body.split("=", 1)[1])
                    except ValueError:
                        raise CoefficientFileError(f"{path}:{lineno}: bad coeff_bound") from None
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise CoefficientFileError(f"{path}:{lineno}: expected 'k,c_k', got {line!r}")
            try:
                k = int(parts[0])
                c = float(parts[1])
            except ValueError:
                raise CoefficientFileError(f"{path}:{lineno}: cannot parse {line!r}") from None
            if k <= last_k:
                raise CoefficientFileError(f"{path}:{lineno}: k must be ascending from 1")
            if not math.isfinite(c):
                raise CoefficientFileError(f"{path}:{lineno}: coefficient must be finite")
            entries[k] = c
            last_k = k
    if bound is None:
        raise CoefficientFileError(f"{path}: missing '# coeff_bound=<real>' header")
    cs = [entries.get(k, 0.0) for k in range(1, last_k + 1)]
    try:
        return polynomial(cs, coeff_bound=bound, name=f"file:{path.name}")
    except ValueError as exc:
        raise CoefficientFileError(f"{path}: {exc}") from None


def resolve(spec: str) -> AnalyticFunction:
    """Builtin name, ``polynomial:...`` string, or path to a coefficient file."""
    try:
        return builtin(spec)
    except ValueError:
        if Path(spec).is_file():
            return load_coefficient_file(spec)
        raise


def _taylor_order(f: AnalyticFunction, radius: float, tol: float, k_max: int) -> int:
    if f.degree is not None:
        return max(f.degree, 1)
    if radius >= 1.0:
        raise BoundaryConvergenceError(
            f"Taylor series of {f.id} does not converge absolutely on |z| = {radius}; "
            "use a radius below 1 (e.g. 0.99)")
    # tail bound C r^K / (1 - r) <= tol
    C = max(f.coeff_bound, 1e-300)
    K = math.ceil(math.log(tol * (1.0 - radius) / C) / math.log(radius))
    if K > k_max:
        raise BoundaryConvergenceError(
            f"Taylor series of {f.id} needs {K} terms at radius {radius}; use a smaller radius")
    return max(K, 1)


@lru_cache(maxsize=256)
def _boundary_integral(f: AnalyticFunction, radius: float, nodes: int) -> float:
    K = _taylor_order(f, radius, tol=1e-17, k_max=1 << 22)
    # alias c_k r^k onto k mod nodes; one FFT then gives f on all the nodes
    c = f.coeffs(K) * radius ** np.arange(1, K + 1)
    folded = np.zeros(nodes, dtype=float)
    np.add.at(folded, np.arange(1, K + 1) % nodes, c)
    values = np.fft.ifft(folded) * nodes
    return float(2.0 * math.pi * np.mean(np.abs(values)))


def boundary_integral(f: AnalyticFunction, radius: float = 1.0, nodes: int = 4096) -> float:
    """Trapezoidal value of the integral of |f(radius e^{it})| over [0, 2 pi].

    Raises ``BoundaryConvergenceError`` when the Taylor series cannot be summed
    on that circle (any non-polynomial at radius 1).
    """
    if not 0.0 < radius <= 1.0:
        raise ValueError(f"radius must lie in (0, 1], got {radius}")
    if nodes < 64:
        raise ValueError(f"need at least 64 quadrature nodes, got {nodes}")
    if f.is_zero:
        return 0.0
    return _boundary_integral(f, float(radius), int(nodes))


def default_radius(f: AnalyticFunction) -> float:
    """1.0 when the Taylor series terminates, else 0.99 (bound becomes heuristic)."""
    if f.degree is not None:
        return 1.0
    warnings.warn(
        f"{f.id}: boundary integral taken at radius 0.99; the resulting bound is heuristic",
        stacklevel=3)
    return 0.99

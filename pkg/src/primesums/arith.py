"""Prime sieving and elementary multiplicative arithmetic.

Provides:
- Segmented Eratosthenes sieve (``iter_prime_blocks``, ``primes_up_to``)
- ``PrimeSieve``: primes together with mu(n) and phi(n) tables
- Divisor enumeration by trial division
- ``divisor_weights``: the Moebius-transformed Taylor coefficients
  b_n = sum_{d|n} d * c_d * mu(n/d)
"""

from __future__ import annotations

import math
import threading
import weakref
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

import numpy as np

if TYPE_CHECKING:
    from .funcs import AnalyticFunction

MAX_SIEVE_LIMIT = 10**8
_BLOCK = 1 << 22


def _small_primes(n: int) -> np.ndarray:
    """Plain Eratosthenes for the base primes <= n."""
    if n < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def iter_prime_blocks(limit: int, block: int = _BLOCK) -> Iterator[np.ndarray]:
    """Yield the primes <= limit in ascending blocks.

    Memory stays O(sqrt(limit) + block) regardless of ``limit``.
    """
    if limit < 2:
        return
    base = _small_primes(math.isqrt(limit))
    lo = 2
    while lo <= limit:
        hi = min(lo + block, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            seg[start - lo :: p] = False
        yield np.flatnonzero(seg).astype(np.int64) + lo
        lo = hi


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    blocks = list(iter_prime_blocks(limit))
    if not blocks:
        return np.array([], dtype=np.int64)
    return np.concatenate(blocks)


@dataclass(frozen=True, eq=False)
class PrimeSieve:
    """Primes and multiplicative-function tables up to ``limit``.

    Attributes:
        limit: inclusive upper bound
        primes: ascending int64 array of all primes <= limit
        mu: int8 array of length limit+1, mu[n] = Moebius(n) (mu[0] = 0)
        phi: int64 array of length limit+1, phi[n] = Euler totient (phi[0] = 0)
    """

    limit: int
    primes: np.ndarray
    mu: np.ndarray
    phi: np.ndarray

    def __post_init__(self):
        for arr in (self.primes, self.mu, self.phi):
            arr.setflags(write=False)


def build_sieve(limit: int) -> PrimeSieve:
    """Sieve primes, mu and phi up to ``limit`` (2 <= limit <= 10**8).

    Only primes <= sqrt(limit) are crossed off; every n keeps a running
    cofactor, and a leftover cofactor > 1 is the single large prime factor.
    """
    if not isinstance(limit, (int, np.integer)) or isinstance(limit, bool):
        raise TypeError(f"sieve limit must be an integer, got {limit!r}")
    limit = int(limit)
    if not 2 <= limit <= MAX_SIEVE_LIMIT:
        raise ValueError(f"sieve limit must lie in [2, {MAX_SIEVE_LIMIT}], got {limit}")

    idx_type = np.int32 if limit < 2**31 else np.int64
    rest = np.arange(limit + 1, dtype=idx_type)
    phi = np.arange(limit + 1, dtype=np.int64)
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0

    for p in _small_primes(math.isqrt(limit)):
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
        phi[p::p] = phi[p::p] // p * (p - 1)
        pk = p
        while pk <= limit:
            rest[pk::pk] //= p
            pk *= p

    big = np.flatnonzero(rest > 1)
    q = rest[big].astype(np.int64)
    mu[big] = -mu[big]
    phi[big] = phi[big] // q * (q - 1)

    return PrimeSieve(limit=limit, primes=primes_up_to(limit), mu=mu, phi=phi)


_sieve_lock = threading.Lock()
_small_sieve: PrimeSieve | None = None


def default_sieve(min_limit: int = 1 << 12) -> PrimeSieve:
    """Shared sieve covering at least ``min_limit`` (grown on demand)."""
    global _small_sieve
    with _sieve_lock:
        if _small_sieve is None or _small_sieve.limit < min_limit:
            size = max(min_limit, 1 << 12)
            _small_sieve = build_sieve(size)
        return _small_sieve


def _check_range(n: int, sieve: PrimeSieve) -> None:
    if not 1 <= n <= sieve.limit:
        raise ValueError(f"n={n} outside the sieve range [1, {sieve.limit}]")


def mobius(n: int, sieve: PrimeSieve | None = None) -> int:
    """Moebius mu(n) read from the sieve table."""
    sieve = sieve if sieve is not None else default_sieve(max(n, 2))
    _check_range(n, sieve)
    return int(sieve.mu[n])


def totient(n: int, sieve: PrimeSieve | None = None) -> int:
    sieve = sieve if sieve is not None else default_sieve(max(n, 2))
    _check_range(n, sieve)
    return int(sieve.phi[n])


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n (trial division to sqrt n)."""
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@dataclass(frozen=True, eq=False)
class DivisorWeights:
    """b_n = sum_{d|n} d c_d mu(n/d) for 1 <= n <= M_max.

    ``b[0]`` is unused padding so that ``b[n]`` is b_n.
    """

    source: str
    b: np.ndarray

    def __post_init__(self):
        self.b.setflags(write=False)

    @property
    def M_max(self) -> int:
        return len(self.b) - 1

    def __getitem__(self, n: int) -> float:
        if not 1 <= n <= self.M_max:
            raise IndexError(n)
        return float(self.b[n])


def moebius_convolve(values: np.ndarray, mu: np.ndarray) -> np.ndarray:
    """Dirichlet convolution (values * mu)(n) for n < len(values); index 0 ignored."""
    size = len(values)
    out = np.zeros(size, dtype=float)
    for d in range(1, size):
        v = values[d]
        if v == 0:
            continue
        # multiples m = d*k, k = 1..(size-1)//d
        kmax = (size - 1) // d
        out[d :: d][:kmax] += v * mu[1 : kmax + 1]
    return out


_weights_cache: "weakref.WeakKeyDictionary[AnalyticFunction, DivisorWeights]" = weakref.WeakKeyDictionary()
_weights_lock = threading.Lock()


def divisor_weights(f: "AnalyticFunction", M_max: int,
                    sieve: PrimeSieve | None = None) -> DivisorWeights:
    """Moebius-transformed coefficients of ``f`` up to ``M_max``.

    The longest table computed so far for each function is cached; shorter
    requests are served as prefixes of it.
    """
    if M_max < 1:
        raise ValueError(f"M_max must be >= 1, got {M_max}")
    if sieve is not None and M_max > sieve.limit:
        raise ValueError(f"M_max={M_max} exceeds sieve limit {sieve.limit}")
    with _weights_lock:
        hit = _weights_cache.get(f)
    if hit is not None and hit.M_max >= M_max:
        if hit.M_max == M_max:
            return hit
        return DivisorWeights(source=f.id, b=hit.b[: M_max + 1].copy())
    if sieve is None:
        sieve = default_sieve(max(M_max, 2))

    kc = np.zeros(M_max + 1, dtype=float)
    for k in range(1, M_max + 1):
        kc[k] = k * f.coeff(k)
    weights = DivisorWeights(source=f.id, b=moebius_convolve(kc, sieve.mu[: M_max + 1].astype(float)))

    with _weights_lock:
        _weights_cache[f] = weights
    return weights


def identity_weights_exact(M_max: int, sieve: PrimeSieve | None = None) -> list[int]:
    """Exact integer b_n for f(x) = x, where b_n = mu(n); entry 0 is padding."""
    sieve = sieve if sieve is not None else default_sieve(max(M_max, 2))
    return [0] + [int(sieve.mu[n]) for n in range(1, M_max + 1)]

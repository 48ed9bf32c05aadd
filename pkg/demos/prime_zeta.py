"""
Sums over primes from a handful of zeta values
==============================================

Summing 1/p^2 over primes directly converges like 1/(L log L).  Rewriting the
sum through Mobius inversion turns it into a series of log zeta(2n) whose
terms shrink like 4^-n.
"""

import numpy as np

from primesums import builtin, direct_prime_sum, prime_sum

identity = builtin("identity")

# The direct route: a sieve to ten million and a rigorous tail bound.
orc = direct_prime_sum(identity, 2.0, 10**7)
print(f"sum over p <= 1e7      {orc.partial:.16f}  (+ tail <= {orc.tail_bound:.1e})")

# The accelerated route needs only a few dozen zeta values.
for M in (2, 5, 10, 20, 40):
    res = prime_sum(identity, 2.0, M)
    print(f"M = {M:2d}                 {res.value:.16f}  (bound {res.error_bound:.1e})")

# Every term is logged, so the geometric decay is visible directly.
res = prime_sum(identity, 2.0, 20)
for n, t in res.terms[:8]:
    print(f"  n = {n:2d}  term = {t: .3e}")

# The same machinery handles any analytic f with f(0) = 0.
for name in ("f1", "neg_log1m", "square"):
    print(f"{name:10s} at s = 1.5: {prime_sum(builtin(name), 1.5, 60).value:.15f}")

# Closer to s = 1 the direct sum is hopeless while the series still converges.
s = np.array([1.05, 1.1, 1.25])
print([round(prime_sum(identity, float(x), tol=1e-12).value, 12) for x in s])

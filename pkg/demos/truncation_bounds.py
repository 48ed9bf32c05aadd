"""
How many zeta values are enough?
================================

The outer series is cut after M terms.  A Cauchy estimate on the unit circle
bounds what is dropped; for the log-weighted f1 series at s = 1 a sharper
bound through zeta'(M + 1) applies.  Both are compared to the actual error.
"""

from primesums import builtin, choose_M, prime_sum, prime_sum_logweight
from primesums.bounds import prop1_bound, prop2_bound

identity = builtin("identity")
ref = prime_sum(identity, 2.0, 60).value
print(" M   actual error    bound")
for M in range(1, 16, 2):
    err = abs(ref - prime_sum(identity, 2.0, M).value)
    print(f"{M:2d}   {err:.3e}     {prop1_bound(identity, M, 2.0).bound:.3e}")

f1 = builtin("f1")
ref = prime_sum_logweight(f1, 1.0, 80).value
print("\nlog-weighted f1 at s = 1")
for M in (2, 5, 10, 20, 30):
    err = abs(ref - prime_sum_logweight(f1, 1.0, M).value)
    print(f"{M:2d}   {err:.3e}     {prop2_bound(M).bound:.3e}")

for tol in (1e-3, 1e-8, 1e-15):
    print(f"tol {tol:.0e}: M = {choose_M(f1, 1.0, tol)}")

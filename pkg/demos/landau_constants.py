"""
Landau's totient constants
==========================

A = sum mu(k)^2 / (k phi(k)) has a closed form in zeta(2) zeta(3) / zeta(6).
B needs the prime series S = sum log p / (p^2 - p + 1), which the log-weighted
zeta series delivers to full double precision from about sixty values of
zeta'/zeta at the integers.
"""

from primesums import build_sieve, builtin, direct_logweight_sum
from primesums import constants

A = constants.landau_a()
print(f"A closed form             {A.value!r}")

# The defining sum creeps towards A from below.
sieve = build_sieve(10**6)
for N in (10**3, 10**4, 10**5, 10**6):
    print(f"  partial sum to {N:>7d}   {constants.landau_a_partial(N, sieve)!r}")

S = constants.series_a()
orc = direct_logweight_sum(builtin("f1"), 1.0, 10**7)
print(f"S accelerated             {S.value!r}")
print(f"S sieve to 1e7            {orc.partial!r}  (+ tail <= {orc.tail_bound:.1e})")

# Two independent rearrangements of B must agree.
via_s, via_zeta = constants.landau_b_routes()
print(f"B = A (gamma - S)         {via_s!r}")
print(f"B via zeta'/zeta series   {via_zeta!r}")

"""
The identity for a finite list of numbers
=========================================

For any finite list a_k with |a_k| < 1, sum f(a_k) equals
-sum_n (b_n / n) log prod_k (1 - a_k^n).  Truncating the n-sum at N leaves
roughly max|a_k|^(N+1), which is why lists close to the unit circle need far
more terms than prime powers do.
"""

import numpy as np

from primesums import builtin
from primesums.series import finite_identity, finite_identity_tail_bound

rng = np.random.default_rng(7)
f1 = builtin("f1")
a = rng.uniform(-0.9, 0.9, size=6)
a[0] = 0.9
for N in (40, 120, 250, 400):
    lhs, rhs = finite_identity(a, f1, N)
    print(f"N = {N:3d}  |lhs - rhs| = {abs(lhs - rhs):.2e}"
          f"  bound {finite_identity_tail_bound(a, f1, N):.2e}")

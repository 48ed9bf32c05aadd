"""Slowly converging sums over the primes, evaluated as fast series of zeta values."""

from .arith import PrimeSieve, build_sieve, divisor_weights, divisors, mobius, totient
from .bounds import ErrorBudget, choose_M, prop1_bound, prop2_bound
from .constants import NamedConstant, landau_a, landau_b, regularized_product, series_a
from .funcs import AnalyticFunction, boundary_integral, builtin, load_coefficient_file
from .oracle import OracleResult, direct_logweight_sum, direct_prime_sum
from .series import SeriesResult, finite_identity, finite_scheme, prime_sum, prime_sum_logweight
from .zeta import log_zeta, zeta, zeta_deriv

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction", "ErrorBudget", "NamedConstant", "OracleResult", "PrimeSieve",
    "SeriesResult", "boundary_integral", "build_sieve", "builtin", "choose_M",
    "direct_logweight_sum", "direct_prime_sum", "divisor_weights", "divisors",
    "finite_identity", "finite_scheme", "landau_a", "landau_b", "load_coefficient_file",
    "log_zeta", "mobius", "prime_sum", "prime_sum_logweight", "prop1_bound", "prop2_bound",
    "regularized_product", "series_a", "totient", "zeta", "zeta_deriv",
]

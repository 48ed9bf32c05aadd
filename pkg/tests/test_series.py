import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primesums import builtin, log_zeta, oracle, series
from primesums.series import (SeriesDomainError, finite_identity, finite_identity_tail_bound,
                              finite_scheme, prime_sum, prime_sum_logweight)

P2 = 0.4522474200410655          # mpmath primezeta(2)
LOG_ZETA_2 = 0.4977003024707453  # log of directly summed zeta(2)
LW_2 = 0.49309110936876455       # sum log p / p^2, cross-checked with the 10^7 oracle


def test_prime_zeta_two():
    res = prime_sum(builtin("identity"), 2.0, M=40)
    assert res.value == pytest.approx(P2, abs=2e-16)
    assert res.budget.kind == "prop1"


def test_prime_zeta_three():
    assert prime_sum(builtin("identity"), 3.0, M=40).value == pytest.approx(0.17476263929944353,
                                                                          abs=1e-16)


def test_neg_log1m_reproduces_log_zeta():
    res = prime_sum(builtin("neg_log1m"), 2.0, M=20)
    assert [n for n, _ in res.terms] == [1]
    assert res.value == pytest.approx(LOG_ZETA_2, rel=1e-14)


def test_zero_function_series():
    assert prime_sum(builtin("zero"), 2.0, M=10).value == 0.0
    assert finite_scheme(builtin("zero"), 2.0, 5, l_max=4).value == 0.0


def test_sign_law():
    terms = dict(prime_sum(builtin("identity"), 2.0, M=10).terms)
    assert terms[1] == log_zeta(2.0)
    assert terms[1] > P2
    assert terms[2] < 0


def test_zero_weights_skipped():
    res = prime_sum(builtin("identity"), 2.0, M=30)
    assert all(n not in dict(res.terms) for n in (4, 8, 9, 12, 16, 18, 20, 24, 25, 27, 28))


def test_ledger_replay_and_order():
    for res in (prime_sum(builtin("f1"), 1.5, M=50),
                prime_sum_logweight(builtin("f1"), 1.0, M=40)):
        ns = [n for n, _ in res.terms]
        assert ns == sorted(ns)
        assert res.replay() == res.value


def test_logweight_prime_series():
    assert prime_sum_logweight(builtin("identity"), 2.0, M=60).value == pytest.approx(LW_2, abs=1e-15)


def test_logweight_is_minus_derivative():
    f, h = builtin("identity"), 1e-5
    lw = prime_sum_logweight(f, 2.0, 60).value
    fd = -(prime_sum(f, 2 + h, 60).value - prime_sum(f, 2 - h, 60).value) / (2 * h)
    assert abs(lw - fd) <= 1e-6


def test_tol_selects_M():
    res = prime_sum(builtin("identity"), 2.0, tol=1e-4)
    assert res.M == 10
    assert res.error_bound <= 1e-4


@pytest.mark.parametrize("name", ["identity", "f1", "square"])
@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
def test_geometric_decay_of_truncation(name, s):
    # envelope form: zero weights make single steps flat
    f = builtin(name)
    d = {M: abs(prime_sum(f, s, M, with_bound=False).value
                - prime_sum(f, s, M + 10, with_bound=False).value) for M in range(5, 45)}
    for M, dm in d.items():
        if dm > 1e-14:
            assert dm <= 4 * d[5] * 2.0 ** (-s * (M - 5))


def test_domain_errors():
    with pytest.raises(SeriesDomainError):
        prime_sum(builtin("identity"), 1.0, M=5)
    with pytest.raises(SeriesDomainError):
        prime_sum_logweight(builtin("identity"), 1.0, M=5)
    with pytest.raises(SeriesDomainError):
        prime_sum_logweight(builtin("f1"), 0.9, M=5)
    with pytest.raises(SeriesDomainError):
        finite_scheme(builtin("identity"), 1.0, 3)
    with pytest.raises(ValueError):
        prime_sum(builtin("identity"), 2.0, M=0)
    with pytest.raises(ValueError):
        prime_sum(builtin("identity"), 2.0, M=5, tol=1e-3)
    with pytest.raises(ValueError):
        finite_scheme(builtin("identity"), 2.0, 3, l_max=0)


def test_finite_identity_single_point():
    # f = identity, a = (x): lhs x, rhs -sum mu(n)/n log(1 - x^n)
    lhs, rhs = finite_identity([0.3], builtin("identity"), 60)
    assert lhs == 0.3
    assert rhs == pytest.approx(0.3, abs=1e-16)


def test_finite_identity_empty_and_bad_input():
    assert finite_identity([], builtin("f1"), 10) == (0.0, 0.0)
    with pytest.raises(ValueError):
        finite_identity([1.0], builtin("f1"), 10)


@given(a=st.lists(st.floats(min_value=-0.9, max_value=0.9), min_size=1, max_size=8),
       name=st.sampled_from(["identity", "square", "f1"]))
@settings(max_examples=60, deadline=None)
def test_finite_identity_within_tail_bound(a, name):
    f = builtin(name)
    lhs, rhs = finite_identity(a, f, 120)
    assert abs(lhs - rhs) <= finite_identity_tail_bound(a, f, 120) + 1e-13


def test_finite_identity_converges_with_more_terms():
    f = builtin("f1")
    a = [0.9, -0.85, 0.5]
    lhs, rhs = finite_identity(a, f, 400)
    assert abs(lhs - rhs) <= 1e-13


def test_finite_scheme_first_term_is_log_zeta(sieve_1e6):
    res = finite_scheme(builtin("identity"), 2.0, 1, sieve_1e6, l_max=40)
    assert abs(res.value - LOG_ZETA_2) <= 1e-11
    assert res.meta["sieve_limit"] == 10**6


@pytest.mark.parametrize("M", range(2, 13))
def test_finite_scheme_matches_zeta_series(M, sieve_1e6):
    ref = prime_sum(builtin("identity"), 2.0, M=60).value
    res = finite_scheme(builtin("identity"), 2.0, M, sieve_1e6)
    assert abs(res.value - ref) <= 4 * M * 2.0 ** (-2 * (M + 1))
    assert res.error_bound == 4 * M * 2.0 ** (-2 * (M + 1))


def test_transform_consistency_with_oracle():
    for name in ("identity", "f1", "neg_log1m", "square"):
        f = builtin(name)
        for s in (1.5, 2.0, 3.0):
            orc = oracle.direct_prime_sum(f, s, 10**7)
            v = prime_sum(f, s, 60, with_bound=False).value
            assert abs(v - orc.partial) <= orc.tail_bound + 1e-10, (name, s)

"""Truncated-series arithmetic against literal polynomial substitution."""

import random

import pytest

from gwgamma.series import TruncSeries, gamma_from_lambda, lambda_from_gamma
from gwgamma.symfunc import binomial


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j <= order:
                    out[i + j] += x * y
    return out


def literal_substitution(coeffs, inner, order):
    """Evaluate sum c_i * inner(t)^i with plain polynomial arithmetic."""
    out = [0] * (order + 1)
    power = [1] + [0] * order
    for i, c in enumerate(coeffs):
        if c:
            for k in range(order + 1):
                out[k] += c * power[k]
        power = poly_mul(power, inner, order)
    return out


def test_mul_inverse_geometric():
    n = 10
    s = TruncSeries((1, -1) + (0,) * (n - 1))  # 1 - t
    inv = s.inverse()
    assert inv.coeffs == (1,) * (n + 1)
    assert (s * inv).coeffs == (1,) + (0,) * n
    with pytest.raises(ValueError):
        TruncSeries((2, 1, 1)).inverse()


def test_pow_binomial_series():
    n = 12
    one_plus_t = TruncSeries((1, 1) + (0,) * (n - 1))
    for e in range(-6, 7):
        got = one_plus_t.pow(e)
        assert got.coeffs == tuple(binomial(e, k) for k in range(n + 1))


@pytest.mark.parametrize("order", [4, 8, 12])
def test_substitutions_match_literal_polynomials(order):
    rng = random.Random(order)
    geometric = [0] + [1] * order          # t/(1-t) = t + t^2 + ...
    alternating = [0] + [(-1) ** (k - 1) for k in range(1, order + 1)]
    for _ in range(25):
        coeffs = [1] + [rng.randrange(-5, 6) for _ in range(order)]
        s = TruncSeries(coeffs)
        assert (
            list(gamma_from_lambda(s).coeffs)
            == literal_substitution(coeffs, geometric, order)
        )
        assert (
            list(lambda_from_gamma(s).coeffs)
            == literal_substitution(coeffs, alternating, order)
        )


@pytest.mark.parametrize("order", [4, 8, 12])
def test_substitutions_roundtrip(order):
    rng = random.Random(100 + order)
    for _ in range(25):
        s = TruncSeries([1] + [rng.randrange(-5, 6) for _ in range(order)])
        assert lambda_from_gamma(gamma_from_lambda(s)) == s
        assert gamma_from_lambda(lambda_from_gamma(s)) == s


def test_gamma_of_integer_lambda_series():
    # lambda_t(n) = (1+t)^n, so gamma_t(n) = (1-t)^(-n)
    n = 9
    one_plus_t = TruncSeries((1, 1) + (0,) * (n - 1))
    one_minus_t = TruncSeries((1, -1) + (0,) * (n - 1))
    for e in range(-5, 6):
        lam = one_plus_t.pow(e)
        assert gamma_from_lambda(lam) == one_minus_t.pow(-e)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        TruncSeries((1, 2)) * TruncSeries((1, 2, 3))

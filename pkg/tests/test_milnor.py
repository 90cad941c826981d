"""Tests for the GF(2) polynomial engine and the top-class identities."""

import random

import pytest

from gwgamma.milnor import (
    F2Poly,
    check_identities,
    even_substitution_is_trivial,
    omega,
    top_class_product,
    top_class_sum,
    vanishing_range,
)


def test_constructor_cancels_duplicates_and_truncates():
    p = F2Poly(2, 3, [(1, 0), (1, 0), (0, 1), (4, 0)])
    assert p == F2Poly(2, 3, [(0, 1)])
    assert F2Poly(2, 3, [(1, 1), (1, 1)]).is_zero


def test_addition_is_involutive():
    p = F2Poly(3, 4, [(1, 0, 0), (0, 2, 1)])
    assert (p + p).is_zero
    assert p - p == p + p
    q = F2Poly(3, 4, [(0, 2, 1), (1, 1, 1)])
    assert p + q == F2Poly(3, 4, [(1, 0, 0), (1, 1, 1)])


def test_multiplication_and_powers():
    x1 = F2Poly.variable(0, 2, 4)
    x2 = F2Poly.variable(1, 2, 4)
    assert x1 * x2 == F2Poly(2, 4, [(1, 1)])
    assert x1**3 == F2Poly(2, 4, [(3, 0)])
    # cross terms vanish mod 2
    assert (x1 + x2) ** 2 == F2Poly(2, 4, [(2, 0), (0, 2)])
    tight = F2Poly.variable(0, 2, 1)
    assert (tight * tight).is_zero


def test_inverse_is_geometric_series():
    one = F2Poly.one(1, 5)
    p = one + F2Poly.variable(0, 1, 5)
    assert p.inverse() == F2Poly(1, 5, [(k,) for k in range(6)])
    assert p * p.inverse() == one
    with pytest.raises(ValueError):
        F2Poly.variable(0, 1, 5).inverse()


def test_inverse_on_random_series():
    rng = random.Random(31)
    one = F2Poly.one(3, 5)
    for _ in range(12):
        terms = [(0, 0, 0)]
        for _ in range(rng.randrange(1, 7)):
            t = tuple(rng.randrange(3) for _ in range(3))
            if 0 < sum(t) <= 5:
                terms.append(t)
        p = F2Poly(3, 5, terms)
        assert p.constant_term == 1
        assert p * p.inverse() == one
        assert p.inverse().inverse() == p


def test_substitution_is_multiplicative():
    rng = random.Random(32)
    pair = F2Poly.variable(0, 3, 6) + F2Poly.variable(1, 3, 6)

    def sample():
        terms = []
        for _ in range(rng.randrange(1, 6)):
            t = tuple(rng.randrange(3) for _ in range(3))
            if sum(t) <= 3:
                terms.append(t)
        return F2Poly(3, 6, terms)

    for _ in range(10):
        p, q = sample(), sample()
        left = (p * q).substitute(2, pair)
        right = p.substitute(2, pair) * q.substitute(2, pair)
        assert left == right


def test_mismatched_shapes_rejected():
    with pytest.raises(ValueError):
        F2Poly(2, 3, [(1,)])
    with pytest.raises(ValueError):
        F2Poly.one(2, 3) + F2Poly.one(2, 4)
    with pytest.raises(ValueError):
        F2Poly.one(2, 3) * F2Poly.one(3, 3)


def test_omega_single_variable_terminates():
    # the lone denominator factor is inverted back by the global exponent
    for cutoff in (1, 3, 6):
        w = omega(1, cutoff)
        assert w == F2Poly.one(1, cutoff) + F2Poly.variable(0, 1, cutoff)


def test_omega_two_variables_frozen():
    w = omega(2, 4)
    expected = {(0, 0), (1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)}
    assert w.terms == frozenset(expected)
    assert w.min_positive_degree() == 2
    assert w.homogeneous_part(2) == F2Poly(2, 4, [(1, 1)])


def test_omega_three_variables_low_degrees_vanish():
    w = omega(3, 4)
    for d in (1, 2, 3):
        assert w.homogeneous_part(d).is_zero
    assert w.homogeneous_part(4) == F2Poly(3, 4, [(2, 1, 1), (1, 2, 1), (1, 1, 2)])


def test_omega_guards():
    with pytest.raises(ValueError):
        omega(0, 4)
    with pytest.raises(ValueError):
        omega(3, 3)
    with pytest.raises(ValueError):
        vanishing_range(5)


def test_vanishing_range_doubles():
    assert [vanishing_range(n) for n in (1, 2, 3, 4)] == [1, 2, 4, 8]


def test_top_class_forms_agree():
    for n in (1, 2, 3, 4):
        top = 2 ** (n - 1)
        product_form = top_class_product(n)
        sum_form = top_class_sum(n)
        assert product_form == sum_form
        assert omega(n, top).homogeneous_part(top) == product_form


def test_top_class_small_cases_frozen():
    assert top_class_sum(1) == F2Poly(1, 1, [(1,)])
    assert top_class_sum(2) == F2Poly(2, 2, [(1, 1)])
    # exponent multisets {4,2,1,1} in 12 arrangements plus {2,2,2,2}
    assert len(top_class_sum(4).terms) == 13
    assert (2, 2, 2, 2) in top_class_sum(4).terms


def test_even_substitution_collapses_series():
    assert even_substitution_is_trivial(3, 6)
    assert even_substitution_is_trivial(4, 9)
    with pytest.raises(ValueError):
        even_substitution_is_trivial(2, 4)


def test_identity_report_lines():
    for n in (1, 2, 3, 4):
        report = check_identities(n)
        assert report.ok, report.first_failure
        assert report.lines() == [
            "PASS vanishing<%d" % 2 ** (n - 1),
            "PASS product=sum",
        ]

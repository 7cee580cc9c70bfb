from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bepoly.exact import (
    Poly,
    Series,
    binomial,
    bounded_compositions,
    compositions,
    format_rat,
    multinomial,
    parse_rat,
    poly_affine_compose,
    poly_definite_integral,
    poly_eval,
    poly_to_text,
    series_exp,
    series_log,
    series_mul,
)

rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(rats, max_size=5).map(Poly)


def series_of(order):
    return st.lists(rats, min_size=order + 1, max_size=order + 1).map(lambda c: Series(c, order))


def test_rational_text_roundtrip():
    for text in ("-3/2", "7", "0", "1/6"):
        assert format_rat(parse_rat(text)) == text
    assert parse_rat("4/6") == F(2, 3)
    assert format_rat(parse_rat("4/6")) == "2/3"
    with pytest.raises(ValueError):
        parse_rat("1.5")
    with pytest.raises(ValueError):
        parse_rat("1/0")


def test_poly_canonical_form():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).degree is None
    assert Poly([]).is_zero()
    assert Poly([3, 0, 1]).degree == 2
    assert Poly.from_json(Poly([F(1, 6), -1, 1]).to_json()) == Poly([F(1, 6), -1, 1])
    assert Poly([F(1, 6), -1, 1]).to_json() == '["1/6", "-1", "1"]'


def test_poly_eval_examples():
    assert poly_eval(Poly([F(1, 6), -1, 1]), 0) == F(1, 6)
    assert poly_eval(Poly(), F(7, 3)) == 0
    assert poly_eval(Poly([F(-1, 2), 1]), F(1, 2)) == 0


def test_affine_compose_examples():
    assert poly_affine_compose(Poly([0, 1]), 7, -2) == Poly([-2, 7])
    assert poly_affine_compose(Poly([0, 0, 1]), 1, 0) == Poly([0, 0, 1])
    assert poly_affine_compose(Poly([0, 0, 1]), 2, 1) == Poly([1, 4, 4])


def test_definite_integral_examples():
    assert poly_definite_integral(Poly([1]), 0, F(5, 2)) == F(5, 2)
    assert poly_definite_integral(Poly([0, 1]), 0, 1) == F(1, 2)
    assert poly_definite_integral(Poly([-1, 0, 3]), -1, 1) == 0


def test_series_mul_examples():
    a = Series([1, 1, 0], 2)
    b = Series([1, -1, 0], 2)
    assert series_mul(a, b) == Series([1, 0, -1], 2)
    half = Series([1, F(-1, 2), F(1, 12)], 2)
    assert series_mul(half, half) == Series([1, -1, F(5, 12)], 2)
    assert series_mul(half, Series.one(2)) == half


def test_series_mixed_order_truncates():
    assert (Series([1, 2, 3, 4], 3) * Series([1, 1], 1)).order == 1
    assert (Series([1, 2, 3, 4], 3) + Series([1, 1], 1)) == Series([2, 3], 1)


def test_series_log_exp_examples():
    assert series_log(Series.one(5)) == Series([0] * 6, 5)
    assert series_log(Series([1, 1, 0, 0], 3)) == Series([0, 1, F(-1, 2), F(1, 3)], 3)
    assert series_exp(Series([0, 1, 0, 0, 0], 4)) == Series([1, 1, F(1, 2), F(1, 6), F(1, 24)], 4)
    s = Series([0, F(1, 3), 0, 0, F(-1, 7)] + [0] * 6, 10)
    assert series_log(series_exp(s)) == s
    t = F(3, 2)
    e = series_exp(Series([0, t] + [0] * 5, 6))
    fact = 1
    for k in range(7):
        fact *= max(k, 1)
        assert e[k] == t**k / fact


def test_series_log_exp_reject_bad_constants():
    with pytest.raises(ValueError):
        series_log(Series([2, 1], 1))
    with pytest.raises(ValueError):
        series_exp(Series([1, 1], 1))


def test_poly_text():
    assert poly_to_text(Poly([F(5, 6), -2, 1])) == "x^2 - 2*x + 5/6"
    assert poly_to_text(Poly([F(-3, 2), 1])) == "x - 3/2"
    assert poly_to_text(Poly()) == "0"


def test_combinatorics():
    assert [binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]
    assert binomial(3, 5) == 0
    assert multinomial((2, 1, 1)) == 12
    comps = list(compositions(3, 2))
    assert comps == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert list(bounded_compositions(3, (1, 2))) == [(1, 2)]
    assert sum(multinomial(c) for c in compositions(4, 3)) == 3**4


@given(polys, polys, polys)
def test_poly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + Poly() == p
    assert p * Poly([1]) == p
    assert p - p == Poly()


@given(series_of(4), series_of(4), series_of(4))
def test_series_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Series.one(4) == a


@given(polys, rats, rats)
def test_integral_additivity(p, a, b):
    assert poly_definite_integral(p, 0, a) + poly_definite_integral(p, a, b) == poly_definite_integral(p, 0, b)


@given(polys, rats, rats, rats, rats)
def test_affine_composition_law(p, b1, y1, b2, y2):
    assert poly_affine_compose(p, 1, 0) == p
    lhs = poly_affine_compose(poly_affine_compose(p, b1, y1), b2, y2)
    assert lhs == poly_affine_compose(p, b1 * b2, b1 * y2 + y1)


@settings(max_examples=50)
@given(st.lists(rats, min_size=8, max_size=8))
def test_log_exp_inverse(tail):
    s = Series([0] + tail[1:], 7)
    assert series_log(series_exp(s)) == s
    a = Series([1] + tail[1:], 7)
    assert series_exp(series_log(a)) == a


@given(polys, rats)
def test_eval_matches_call_and_derivative_integral(p, x):
    assert poly_eval(p, x) == p(x)
    assert p.antiderivative().derivative() == p

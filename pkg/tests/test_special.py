from __future__ import annotations

import threading
from fractions import Fraction as F

import pytest

from bepoly.exact import Poly, binomial, poly_affine_compose
from bepoly.special import (
    B,
    E,
    Family,
    PolySpec,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    higher_order_poly,
    periodic_bernoulli,
    periodic_euler,
)

ORDERS = (F(1), F(2), F(1, 2), F(-3, 2), F(5))


def bernoulli_by_recurrence(top):
    """sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1."""
    b = [F(1)]
    for n in range(1, top + 1):
        b.append(-sum(binomial(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    return b


def euler_at_zero_by_recurrence(top):
    """E_n(0) = -(1/2) sum_{k<n} C(n, k) E_k(0), from E_n(x + 1) + E_n(x) = 2 x^n at x = 0."""
    e = [F(1)]
    for n in range(1, top + 1):
        e.append(-sum(binomial(n, k) * e[k] for k in range(n)) / 2)
    return e


def classical_bernoulli(n):
    b = bernoulli_by_recurrence(n)
    return Poly([binomial(n, n - j) * b[n - j] for j in range(n + 1)])


def classical_euler(n):
    """E_n(x) = sum_k C(n, k) E_k(0) x^(n-k)."""
    e = euler_at_zero_by_recurrence(n)
    return Poly([binomial(n, n - j) * e[n - j] for j in range(n + 1)])


def test_spec_examples():
    assert higher_order_poly(Family.BERNOULLI, 0, F(5, 2)) == Poly([1])
    assert higher_order_poly(Family.EULER, 1, 3) == Poly([F(-3, 2), 1])
    assert higher_order_poly(PolySpec(Family.BERNOULLI, 2, 2)) == Poly([F(5, 6), -2, 1])


def test_numbers():
    assert [bernoulli_number(m) for m in (0, 1, 2, 3, 4)] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    assert [euler_number(m) for m in range(9)] == [1, 0, -1, 0, 5, 0, -61, 0, 1385]
    assert bernoulli_number(30) == bernoulli_by_recurrence(30)[30]


def test_order_one_matches_classical():
    for n in range(21):
        assert bernoulli_poly(n) == classical_bernoulli(n)
        assert euler_poly(n) == classical_euler(n)


@pytest.mark.parametrize("fam", list(Family))
def test_integer_order_is_repeated_convolution(fam):
    # F^(a+b)_m(x+y) = sum C(m,k) F^(a)_k(x) F^(b)_{m-k}(y), checked at rational points
    for m in range(9):
        for x, y in ((F(0), F(0)), (F(1, 3), F(-2, 5)), (F(2), F(1, 2))):
            conv = sum(binomial(m, k) * higher_order_poly(fam, k, 1)(x) * higher_order_poly(fam, m - k, 1)(y)
                       for k in range(m + 1))
            assert conv == higher_order_poly(fam, m, 2)(x + y)


@pytest.mark.parametrize("fam", list(Family))
def test_half_order_squares_to_order_one(fam):
    for m in range(10):
        x, y = F(1, 7), F(-3, 4)
        conv = sum(binomial(m, k) * higher_order_poly(fam, k, F(1, 2))(x) * higher_order_poly(fam, m - k, F(1, 2))(y)
                   for k in range(m + 1))
        assert conv == higher_order_poly(fam, m, 1)(x + y)


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("alpha", ORDERS)
def test_derivative_reflection_midpoint(fam, alpha):
    for m in range(16):
        p = higher_order_poly(fam, m, alpha)
        assert p.degree == m
        if m:
            assert p.derivative() == higher_order_poly(fam, m - 1, alpha) * m
        reflected = poly_affine_compose(p, -1, alpha)
        assert reflected == (p if m % 2 == 0 else -p)
        if m % 2:
            assert p(alpha / 2) == 0


def test_euler_via_bernoulli():
    for n in range(21):
        b = bernoulli_poly(n + 1)
        rhs = (b - poly_affine_compose(b, F(1, 2), 0) * 2 ** (n + 1)) * F(2, n + 1)
        assert euler_poly(n) == rhs


def test_euler_polynomial_shift():
    for n in range(12):
        for x in (F(0), F(1, 3), F(-5, 2)):
            assert E(n, x + 1) + E(n, x) == 2 * x**n


def test_periodic_euler():
    assert periodic_euler(1, F(1, 2)) == 0
    assert periodic_euler(0, F(3, 2)) == -1
    for r in range(9):
        for x in (F(0), F(1, 3), F(9, 4), F(-5, 2)):
            assert periodic_euler(r, x + 1) == -periodic_euler(r, x)
            assert periodic_euler(r, x + 2) == periodic_euler(r, x)


def test_periodic_bernoulli():
    assert periodic_bernoulli(1, F(1, 2)) == 0
    assert periodic_bernoulli(2, 0) == F(1, 6)
    assert periodic_bernoulli(1, 0) == F(-1, 2)
    for r in range(7):
        for x in (F(0), F(1, 3), F(-7, 5)):
            assert periodic_bernoulli(r, x + 1) == periodic_bernoulli(r, x)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        PolySpec(Family.EULER, -1)
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        Family.parse("legendre")
    assert Family.parse("E") is Family.EULER
    assert B(-1, 0) == 0


def test_number_cache_under_threads():
    results = []

    def work():
        results.append([euler_number(m) for m in range(40, 60)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)

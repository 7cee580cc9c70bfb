from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from bepoly.integrals import (
    FactorSpec,
    ProductIntegral,
    euler_parity_special_case,
    euler_product_integral,
    euler_product_integral_closed,
    max_mu,
    mixed_product_integral_closed,
    parity_integral,
    product_integral_oracle,
)
from bepoly.special import Family
from bepoly.suites import example1_integral, example2_display, example2_integral, sample_euler_integral, sample_mixed_integral

Eu, Be = Family.EULER, Family.BERNOULLI


def test_oracle_examples():
    assert product_integral_oracle(ProductIntegral((FactorSpec(Eu, 0, 2, 5, -1),), F(3, 4))) == F(3, 4)
    assert product_integral_oracle(example1_integral()) == 0
    two = ProductIntegral((FactorSpec(Eu, 1), FactorSpec(Eu, 1)), 1)
    assert product_integral_oracle(two) == F(1, 12)


def test_example_one():
    pi = example1_integral()
    assert euler_product_integral_closed(pi) == 0
    assert euler_parity_special_case((2, 3, 10), (3, F(1, 2), 5), (-2, 1, F(1, 2))) == 0


def test_example_two():
    pi = example2_integral()
    expected = F(2575, 4100096)  # frozen from the expansion oracle
    assert product_integral_oracle(pi) == expected
    assert example2_display() == expected
    assert euler_product_integral_closed(pi) == expected
    assert euler_parity_special_case((2, 10), (3, 5), (0, 4)) == expected
    for mu in range(max_mu(pi) + 3):
        assert euler_product_integral(pi, mu) == expected


def test_single_factor_cases():
    pi = ProductIntegral((FactorSpec(Eu, 2, 1, 2, 0),), 1)
    assert euler_product_integral(pi, 0) == product_integral_oracle(pi)
    pi = ProductIntegral((FactorSpec(Eu, 3, F(1, 2), F(-3, 2), 1),), 1)
    assert euler_product_integral_closed(pi) == product_integral_oracle(pi)
    assert euler_parity_special_case((0,), (1,), (0,)) == 1


def test_mu_one_two_factor():
    pi = ProductIntegral((FactorSpec(Eu, 1), FactorSpec(Eu, 1)), 1, normalized=True)
    assert euler_product_integral(pi, 1) == F(1, 12)


def test_mixed_examples():
    pi = ProductIntegral((FactorSpec(Eu, 2, 1, 1, 0), FactorSpec(Eu, 3, 1, 2, F(1, 2))), 1)
    assert mixed_product_integral_closed(pi) == euler_product_integral_closed(pi) == product_integral_oracle(pi)
    pi = ProductIntegral((FactorSpec(Be, 1), FactorSpec(Eu, 1)), 1)
    assert mixed_product_integral_closed(pi) == F(1, 12)
    pi = ProductIntegral((FactorSpec(Be, 2, 2, 1, F(1, 3)), FactorSpec(Be, 1, 1, -2, 0),
                          FactorSpec(Eu, 3, F(1, 2), 3, -1)), F(1, 2))
    assert mixed_product_integral_closed(pi) == product_integral_oracle(pi)


def test_sampled_theorem_one():
    rng = random.Random(7)
    for _ in range(60):
        pi = sample_euler_integral(rng)
        value = product_integral_oracle(pi)
        assert euler_product_integral_closed(pi) == value
        for mu in range(max_mu(pi) + 1):
            assert euler_product_integral(pi, mu) == value


def test_sampled_theorem_two():
    rng = random.Random(11)
    for _ in range(60):
        pi = sample_mixed_integral(rng)
        assert mixed_product_integral_closed(pi) == product_integral_oracle(pi)


def test_rotation_invariance():
    rng = random.Random(3)
    for _ in range(20):
        pi = sample_euler_integral(rng)
        k = len(pi.factors)
        values = {euler_product_integral_closed(ProductIntegral(pi.factors[j:] + pi.factors[:j], pi.upper,
                                                                pi.normalized)) for j in range(k)}
        assert values == {product_integral_oracle(pi)}


def test_parity_vanishing_matches_oracle():
    rng = random.Random(5)
    for _ in range(40):
        r = rng.randint(1, 3)
        degrees = [rng.randint(0, 5) for _ in range(r)]
        orders = [rng.choice((F(1), F(2), F(1, 2), F(5))) for _ in range(r)]
        shifts = [F(rng.randint(-4, 4), 3) for _ in range(r)]
        if any(a == 2 * y for a, y in zip(orders, shifts)):
            continue
        value = euler_parity_special_case(degrees, orders, shifts)
        assert value == product_integral_oracle(parity_integral(degrees, orders, shifts))
        if (sum(degrees) + 1) % 2 == 0:
            assert value == 0


def test_errors():
    with pytest.raises(ValueError):
        euler_product_integral_closed(ProductIntegral((FactorSpec(Eu, 1), FactorSpec(Eu, 1, 1, 0)), 1))
    with pytest.raises(ValueError):
        euler_product_integral_closed(ProductIntegral((FactorSpec(Be, 1), FactorSpec(Eu, 1)), 1))
    with pytest.raises(ValueError):
        mixed_product_integral_closed(ProductIntegral((FactorSpec(Eu, 1), FactorSpec(Be, 1)), 1))
    with pytest.raises(ValueError):
        euler_parity_special_case((1,), (2,), (1,))
    with pytest.raises(ValueError):
        euler_product_integral(example1_integral(), -1)
    # the oracle accepts a zero scale
    assert product_integral_oracle(ProductIntegral((FactorSpec(Eu, 1, 1, 0, 1),), 2)) == 1


def test_json_roundtrip():
    pi = example2_integral()
    assert ProductIntegral.from_dict(pi.to_dict()) == pi

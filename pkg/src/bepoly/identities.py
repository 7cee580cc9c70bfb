"""Convolution formulas for higher-order Bernoulli and Euler polynomials.

Each function returns ``(lhs, rhs)`` exactly as the formula is printed. The
Euler-Euler and Bernoulli-Bernoulli forms only balance when ``beta + gamma = 2``;
the generating-function derivation carries a factor ``beta + gamma - 1`` on
the convolution side, which ``scaled=True`` restores.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RatLike, binomial
from .special import B, E


@dataclass(frozen=True)
class ConvolutionCase:
    m: int
    beta: Fraction
    gamma: Fraction
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be non-negative")
        for name in ("beta", "gamma", "x", "y"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


def conv_euler_euler(case: ConvolutionCase, scaled: bool = False) -> tuple[Fraction, Fraction]:
    m, beta, gamma, x, y = case.m, case.beta, case.gamma, case.x, case.y
    lhs = sum((binomial(m, k) * E(k, x, beta) * E(m - k, y, gamma) for k in range(m + 1)), Fraction(0))
    if scaled:
        lhs *= beta + gamma - 1
    z = x + y - 1
    order = beta + gamma - 1
    rhs = 2 * z * E(m, z, order) - 2 * E(m + 1, z, order)
    return lhs, rhs


def conv_bern_bern(case: ConvolutionCase, scaled: bool = False) -> tuple[Fraction, Fraction]:
    m, beta, gamma, x, y = case.m, case.beta, case.gamma, case.x, case.y
    lhs = sum((binomial(m, k) * B(k, x, beta) * B(m - k, y, gamma) for k in range(m + 1)), Fraction(0))
    if scaled:
        lhs *= beta + gamma - 1
    z = x + y - 1
    order = beta + gamma - 1
    rhs = z * m * B(m - 1, z, order) + (gamma + beta - 1 - m) * B(m, z, order)
    return lhs, rhs


def conv_bern_euler(m: int, n: RatLike, x: RatLike, y: RatLike) -> tuple[Fraction, Fraction]:
    n, x, y = Fraction(n), Fraction(x), Fraction(y)
    lhs = sum((binomial(m, k) * B(m - k, x, n) * E(k, y, n) for k in range(m + 1)), Fraction(0))
    rhs = 2**m * B(m, (x + y) / 2, n)
    return lhs, rhs

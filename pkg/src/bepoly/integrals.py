"""Integrals over ``[0, x]`` of products ``prod_s F_{n_s}^(alpha_s)(b_s z + y_s)``.

Two independent routes:

* :func:`product_integral_oracle` expands every factor, multiplies the
  polynomials and integrates term by term.
* the closed forms integrate by parts against the last factor, moving
  derivatives onto the leading product and distributing them over its
  factors with multinomial weights.

The closed-form evaluators never call the oracle, except for the explicit
remainder term of :func:`euler_product_integral` at a truncated ``mu``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    Poly,
    RatLike,
    bounded_compositions,
    factorial,
    format_rat,
    multinomial,
    parse_rat,
    poly_affine_compose,
    poly_definite_integral,
)
from .special import E, Family, family_value, higher_order_poly


@dataclass(frozen=True)
class FactorSpec:
    """One factor ``F_n^(alpha)(b z + y)``."""

    family: Family
    n: int
    alpha: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    y: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("factor degree must be non-negative")
        for name in ("alpha", "b", "y"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def poly(self) -> Poly:
        """The factor as a polynomial in z."""
        return poly_affine_compose(higher_order_poly(self.family, self.n, self.alpha), self.b, self.y)

    def shifted(self, degree: int, z: RatLike) -> Fraction:
        """``F_degree^(alpha)(b z + y)`` with this factor's family, order, scale and shift."""
        return family_value(self.family, degree, self.alpha, self.b * z + self.y)

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "alpha": format_rat(self.alpha),
            "b": format_rat(self.b),
            "y": format_rat(self.y),
        }


@dataclass(frozen=True)
class ProductIntegral:
    """``int_0^upper prod(factors) dz``, optionally divided by ``prod n_s!``."""

    factors: tuple[FactorSpec, ...]
    upper: Fraction = Fraction(1)
    normalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if not self.factors:
            raise ValueError("a product integral needs at least one factor")

    @property
    def degree_factorials(self) -> int:
        out = 1
        for f in self.factors:
            out *= factorial(f.n)
        return out

    def to_dict(self) -> dict:
        return {
            "factors": [f.to_dict() for f in self.factors],
            "upper": format_rat(self.upper),
            "normalized": self.normalized,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ProductIntegral:
        factors = []
        for item in d["factors"]:
            factors.append(
                FactorSpec(
                    Family.parse(item.get("family", "euler")),
                    int(item["n"]),
                    parse_rat(str(item.get("alpha", "1"))),
                    parse_rat(str(item.get("b", "1"))),
                    parse_rat(str(item.get("y", "0"))),
                )
            )
        return cls(tuple(factors), parse_rat(str(d.get("upper", "1"))), bool(d.get("normalized", False)))

    @classmethod
    def from_json(cls, text: str) -> ProductIntegral:
        return cls.from_dict(json.loads(text))


def _product_poly(factors: Sequence[FactorSpec]) -> Poly:
    p = Poly.constant(1)
    for f in factors:
        p = p * f.poly()
    return p


def product_integral_oracle(pi: ProductIntegral) -> Fraction:
    """Expand, multiply, integrate. Accepts ``b = 0``."""
    value = poly_definite_integral(_product_poly(pi.factors), 0, pi.upper)
    if pi.normalized:
        value /= pi.degree_factorials
    return value


def _check_last_scale(pi: ProductIntegral) -> None:
    if pi.factors[-1].b == 0:
        raise ValueError("the last factor needs a nonzero scale b")


def _boundary_sum(factors: Sequence[FactorSpec], x: Fraction, mu: int) -> Fraction:
    """Normalized integration-by-parts sum for ``a = 0..mu``.

    Derivative orders ``j_s > n_s`` annihilate their factor and are never
    enumerated.
    """
    *lead, last = factors
    bounds = [f.n for f in lead]
    inv_b = 1 / last.b
    total = Fraction(0)
    for a in range(mu + 1):
        inner = Fraction(0)
        top = last.n + a + 1
        last_x = last.shifted(top, x)
        last_0 = last.shifted(top, 0)
        for js in bounded_compositions(a, bounds):
            weight = Fraction(multinomial(js))
            at_x = last_x
            at_0 = last_0
            denom = factorial(top)
            for f, j in zip(lead, js):
                weight *= f.b**j
                k = f.n - j
                at_x *= f.shifted(k, x)
                at_0 *= f.shifted(k, 0)
                denom *= factorial(k)
            inner += weight * (at_x - at_0) / denom
        term = inner * inv_b ** (a + 1)
        total += -term if a % 2 else term
    return total


def _remainder(factors: Sequence[FactorSpec], x: Fraction, mu: int) -> Fraction:
    """Normalized remainder after ``mu + 1`` integrations by parts, by expansion.

    Carries ``b_r^(-mu-1)`` and the leading factorials, which the printed
    remainder leaves implicit.
    """
    *lead, last = factors
    lead_poly = _product_poly(lead).derivative(mu + 1)
    if lead_poly.is_zero():
        return Fraction(0)
    top = last.n + mu + 1
    tail = poly_affine_compose(higher_order_poly(last.family, top, last.alpha), last.b, last.y)
    integral = poly_definite_integral(lead_poly * tail, 0, x)
    lead_fact = 1
    for f in lead:
        lead_fact *= factorial(f.n)
    value = integral / (lead_fact * factorial(top)) / last.b ** (mu + 1)
    return -value if mu % 2 == 0 else value


def _require_family(pi: ProductIntegral, family: Family) -> None:
    for f in pi.factors:
        if f.family is not family:
            raise ValueError(f"expected only {family.value} factors")


def _denormalize(pi: ProductIntegral, value: Fraction) -> Fraction:
    return value if pi.normalized else value * pi.degree_factorials


def euler_product_integral(pi: ProductIntegral, mu: int) -> Fraction:
    """Truncated boundary sum through ``a = mu`` plus the exact remainder."""
    _require_family(pi, Family.EULER)
    _check_last_scale(pi)
    if mu < 0:
        raise ValueError("mu must be non-negative")
    value = _boundary_sum(pi.factors, pi.upper, mu) + _remainder(pi.factors, pi.upper, mu)
    return _denormalize(pi, value)


def max_mu(pi: ProductIntegral) -> int:
    """Total degree of the leading product; one more derivative kills it."""
    return sum(f.n for f in pi.factors[:-1])


def euler_product_integral_closed(pi: ProductIntegral) -> Fraction:
    """Boundary sum at ``mu = n_1 + ... + n_{r-1}``; the remainder is identically zero there."""
    _require_family(pi, Family.EULER)
    _check_last_scale(pi)
    return _denormalize(pi, _boundary_sum(pi.factors, pi.upper, max_mu(pi)))


def parity_integral(degrees: Sequence[int], orders: Sequence[RatLike], shifts: Sequence[RatLike]) -> ProductIntegral:
    """Normalized integral over ``[0, 1]`` with scales ``b_s = alpha_s - 2 y_s``."""
    factors = []
    for n, alpha, y in zip(degrees, orders, shifts, strict=True):
        alpha, y = Fraction(alpha), Fraction(y)
        factors.append(FactorSpec(Family.EULER, n, alpha, alpha - 2 * y, y))
    return ProductIntegral(tuple(factors), Fraction(1), normalized=True)


def euler_parity_special_case(
    degrees: Sequence[int], orders: Sequence[RatLike], shifts: Sequence[RatLike]
) -> Fraction:
    """Normalized integral at ``x = 1``, ``b_s = alpha_s - 2 y_s``, by reflection.

    Zero when ``sum(degrees) + 1`` is even; otherwise a double sum of values at
    the shifts only.
    """
    if not (len(degrees) == len(orders) == len(shifts)) or not degrees:
        raise ValueError("degrees, orders and shifts must be non-empty and of equal length")
    orders = [Fraction(a) for a in orders]
    shifts = [Fraction(y) for y in shifts]
    scales = [a - 2 * y for a, y in zip(orders, shifts)]
    if any(b == 0 for b in scales):
        raise ValueError("every shift must differ from half its order")
    if (sum(degrees) + 1) % 2 == 0:
        return Fraction(0)
    lead_n = degrees[:-1]
    n_r, alpha_r, y_r, b_r = degrees[-1], orders[-1], shifts[-1], scales[-1]
    total = Fraction(0)
    for a in range(sum(lead_n) + 1):
        head = b_r ** (-a - 1) / factorial(n_r + a + 1) * E(n_r + a + 1, y_r, alpha_r)
        if a % 2:
            head = -head
        inner = Fraction(0)
        for js in bounded_compositions(a, lead_n):
            term = Fraction(multinomial(js))
            for n_s, j, alpha_s, y_s, b_s in zip(lead_n, js, orders, shifts, scales):
                term *= b_s**j / factorial(n_s - j) * E(n_s - j, y_s, alpha_s)
            inner += term
        total += head * inner
    return -2 * total


def mixed_product_integral_closed(pi: ProductIntegral) -> Fraction:
    """Closed form for Bernoulli factors followed by at least one Euler factor."""
    fams = [f.family for f in pi.factors]
    seen_euler = False
    for fam in fams:
        if fam is Family.EULER:
            seen_euler = True
        elif seen_euler:
            raise ValueError("Bernoulli factors must precede all Euler factors")
    if not seen_euler:
        raise ValueError("at least one Euler factor is required")
    _check_last_scale(pi)
    if any(f.b == 0 for f in pi.factors):
        raise ValueError("all scales must be nonzero")
    return _denormalize(pi, _boundary_sum(pi.factors, pi.upper, max_mu(pi)))

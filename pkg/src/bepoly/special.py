"""Higher-order Bernoulli and Euler polynomials of rational order.

``F_m^(alpha)(x)`` is ``m!`` times the coefficient of ``u^m`` in
``G(u)**alpha * exp(u*x)``, with ``G(u) = u/(e^u - 1)`` for Bernoulli and
``G(u) = 2/(e^u + 1)`` for Euler.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Poly, RatLike, Series, binomial, factorial, poly_eval, series_inverse, series_power


class Family(enum.Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"

    @classmethod
    def parse(cls, text: str) -> Family:
        key = text.strip().lower()
        for fam in cls:
            if fam.value == key or fam.value[0] == key:
                return fam
        raise ValueError(f"unknown family {text!r}; expected 'bernoulli' or 'euler'")


@dataclass(frozen=True)
class PolySpec:
    family: Family
    m: int
    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("degree must be non-negative")
        object.__setattr__(self, "alpha", Fraction(self.alpha))


def base_series(family: Family, order: int) -> Series:
    """``u/(e^u-1)`` or ``2/(e^u+1)`` truncated at ``u^order``."""
    if family is Family.BERNOULLI:
        # (e^u - 1)/u = sum u^k/(k+1)!
        denom = Series([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)
        return series_inverse(denom)
    # (e^u + 1)/2 = 1 + sum_{k>=1} u^k/(2 k!)
    denom = Series([1] + [Fraction(1, 2 * factorial(k)) for k in range(1, order + 1)], order)
    return series_inverse(denom)


@lru_cache(maxsize=None)
def _order_coeffs(family: Family, alpha: Fraction, order: int) -> tuple[Fraction, ...]:
    return series_power(base_series(family, order), alpha).coeffs


@lru_cache(maxsize=None)
def _higher_order_poly(family: Family, m: int, alpha: Fraction) -> Poly:
    p = _order_coeffs(family, alpha, m)
    # coefficient of x^(m-k) is C(m,k) * k! * p_k
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = binomial(m, k) * factorial(k) * p[k]
    return Poly(coeffs)


def higher_order_poly(family: Family | PolySpec, m: int | None = None, alpha: RatLike = 1) -> Poly:
    """``B_m^(alpha)(x)`` or ``E_m^(alpha)(x)`` as an exact polynomial in x.

    Accepts either a :class:`PolySpec` or ``(family, m, alpha)``.
    """
    if isinstance(family, PolySpec):
        spec = family
    else:
        spec = PolySpec(family, m, Fraction(alpha))
    return _higher_order_poly(spec.family, spec.m, spec.alpha)


def bernoulli_poly(m: int, alpha: RatLike = 1) -> Poly:
    return _higher_order_poly(Family.BERNOULLI, m, Fraction(alpha))


def euler_poly(m: int, alpha: RatLike = 1) -> Poly:
    return _higher_order_poly(Family.EULER, m, Fraction(alpha))


def family_value(family: Family, m: int, alpha: RatLike, x: RatLike) -> Fraction:
    """``F_m^(alpha)(x)``; zero for negative m so derivative bookkeeping stays uniform."""
    if m < 0:
        return Fraction(0)
    return poly_eval(_higher_order_poly(family, m, Fraction(alpha)), x)


def B(m: int, x: RatLike, alpha: RatLike = 1) -> Fraction:
    return family_value(Family.BERNOULLI, m, alpha, x)


def E(m: int, x: RatLike, alpha: RatLike = 1) -> Fraction:
    return family_value(Family.EULER, m, alpha, x)


# Hot constants; reads are lock-free, inserts serialized.
_bernoulli_cache: dict[int, Fraction] = {}
_euler_cache: dict[int, int] = {}
_cache_lock = threading.Lock()


def bernoulli_number(m: int) -> Fraction:
    """Classical ``B_m = B_m(0)`` (so ``B_1 = -1/2``)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    try:
        return _bernoulli_cache[m]
    except KeyError:
        pass
    value = bernoulli_poly(m)(0)
    with _cache_lock:
        _bernoulli_cache.setdefault(m, value)
    return value


def euler_number(m: int) -> int:
    """Classical Euler number ``E_m = 2^m E_m(1/2)``, an integer."""
    if m < 0:
        raise ValueError("m must be non-negative")
    try:
        return _euler_cache[m]
    except KeyError:
        pass
    value = 2**m * euler_poly(m)(Fraction(1, 2))
    assert value.denominator == 1
    with _cache_lock:
        _euler_cache.setdefault(m, int(value))
    return int(value)


def periodic_euler(r: int, x: RatLike) -> Fraction:
    """``(-1)^p E_r(x - p)`` with ``p = floor(x)``; antiperiod 1."""
    if r < 0:
        raise ValueError("r must be non-negative")
    x = Fraction(x)
    p = math.floor(x)
    value = euler_poly(r)(x - p)
    return -value if p % 2 else value


def periodic_bernoulli(r: int, x: RatLike) -> Fraction:
    """``B_r({x})`` with ``{x}`` the fractional part; period 1.

    At integers this gives ``B_r(0)``, so ``periodic_bernoulli(1, 0) == -1/2``.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    x = Fraction(x)
    return bernoulli_poly(r)(x - math.floor(x))


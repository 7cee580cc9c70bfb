"""Exact scalars, dense polynomials and truncated power series over the rationals.

``Rat`` is :class:`fractions.Fraction`, which is always stored in lowest terms
with a positive denominator, so equality is structural.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]

_RAT_RE = re.compile(r"-?\d+(/\d+)?")


def parse_rat(text: str) -> Fraction:
    """Parse ``"-3/2"``, ``"7"`` or ``"0"``; the denominator must be positive."""
    s = text.strip()
    if not _RAT_RE.fullmatch(s):
        raise ValueError(f"not a rational: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rat(q: RatLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient by Pascal's rule; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return 1 if n < 2 else n * factorial(n - 1)


def multinomial(parts: Sequence[int]) -> int:
    """``(sum parts)! / prod(part!)`` as a product of binomials."""
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= binomial(total, p)
    return result


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` ordered non-negative parts.

    Lexicographic order. ``parts == 0`` yields ``()`` only when ``total == 0``.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def bounded_compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Weak compositions with ``part[i] <= bounds[i]``, lexicographic."""
    if not bounds:
        if total == 0:
            yield ()
        return
    tail_cap = sum(bounds[1:])
    lo = max(0, total - tail_cap)
    for first in range(lo, min(total, bounds[0]) + 1):
        for rest in bounded_compositions(total - first, bounds[1:]):
            yield (first,) + rest


def _strip(coeffs: Iterable[RatLike]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Immutable. The zero polynomial has empty ``coeffs`` and ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: RatLike) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[format_rat(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return poly_to_text(self)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: RatLike) -> Fraction:
        return poly_eval(self, x)

    def derivative(self, times: int = 1) -> Poly:
        coeffs = list(self.coeffs)
        for _ in range(times):
            coeffs = [k * coeffs[k] for k in range(1, len(coeffs))]
        return Poly(coeffs)

    def antiderivative(self) -> Poly:
        """The antiderivative with zero constant term."""
        return Poly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def to_json(self) -> str:
        return json.dumps([format_rat(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> Poly:
        items = json.loads(text)
        if not isinstance(items, list):
            raise ValueError("polynomial JSON must be an array")
        return cls(parse_rat(str(s)) for s in items)


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.constant(p)
    raise TypeError(f"cannot treat {type(p).__name__} as Poly")


def poly_to_text(p: Poly, var: str = "x") -> str:
    """Human form, highest power first: ``x^2 - x + 1/6``."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rat(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rat(mag)}*{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)


def poly_eval(p: Poly, x: RatLike) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_affine_compose(p: Poly, b: RatLike, y: RatLike) -> Poly:
    """Return ``q`` with ``q(z) = p(b*z + y)``."""
    b = Fraction(b)
    y = Fraction(y)
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    ypow = [Fraction(1)] * n
    for i in range(1, n):
        ypow[i] = ypow[i - 1] * y
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # (b z + y)^k = sum_i C(k, i) b^i y^(k-i) z^i
        bpow = Fraction(1)
        for i in range(k + 1):
            out[i] += c * binomial(k, i) * bpow * ypow[k - i]
            bpow *= b
    return Poly(out)


def poly_definite_integral(p: Poly, lo: RatLike, hi: RatLike) -> Fraction:
    anti = p.antiderivative()
    return poly_eval(anti, hi) - poly_eval(anti, lo)


class Series:
    """Truncated power series ``c0 + c1 u + ... + cN u^N`` with explicit order N.

    Binary operations truncate to the smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[RatLike], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def one(cls, order: int) -> Series:
        return cls((1,), order)

    @classmethod
    def variable(cls, order: int) -> Series:
        return cls((0, 1), order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"Series({[format_rat(c) for c in self.coeffs]}, order={self.order})"

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> Series:
        return Series(self.coeffs, min(order, self.order))

    def __add__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def derivative(self) -> Series:
        """Formal derivative; the top coefficient is unknown, so order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> Series:
        """Formal integral with zero constant term; order rises by one."""
        return Series([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)


def series_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return Series(out, n)


def series_inverse(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be nonzero."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ValueError("series with zero constant term has no inverse")
    out = [1 / c0]
    for k in range(1, a.order + 1):
        s = sum((a.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-s / c0)
    return Series(out, a.order)


def series_log(a: Series) -> Series:
    """Logarithm of a series with constant term 1, from ``L' = a'/a``.

    Solves ``a * L' = a'`` coefficient by coefficient, so no separate inverse
    is formed.
    """
    if a.coeffs[0] != 1:
        raise ValueError("series_log needs constant term 1")
    n = a.order
    ac = a.coeffs
    # k*L_k = k*a_k - sum_{i=1}^{k-1} i*L_i*a_{k-i}
    L = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        s = k * ac[k]
        for i in range(1, k):
            if L[i] and ac[k - i]:
                s -= i * L[i] * ac[k - i]
        L[k] = s / k
    return Series(L, n)


def series_exp(a: Series) -> Series:
    """Exponential of a series with zero constant term, from ``E' = a' E``."""
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs constant term 0")
    n = a.order
    ac = a.coeffs
    # k*E_k = sum_{i=1}^{k} i*a_i*E_{k-i}
    E = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            if ac[i] and E[k - i]:
                s += i * ac[i] * E[k - i]
        E[k] = s / k
    return Series(E, n)


def series_power(a: Series, alpha: RatLike) -> Series:
    """``a ** alpha`` for rational alpha; needs constant term 1."""
    return series_exp(series_log(a) * Fraction(alpha))

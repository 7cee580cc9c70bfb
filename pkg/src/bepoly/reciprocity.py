"""Reciprocity relations for sums of products, Dedekind and Hardy-Berndt sums.

The two-sum quantities ``T`` (Euler/Euler) and ``T1`` (Bernoulli/Euler) are
implemented as printed by default. As printed, the second sum attaches order
``gamma`` to the ``(b2, y2)`` argument and ``beta`` to ``(b1, y1)``, the
reverse of the first sum; with ``corrected=True`` each order stays with its
argument. The two readings coincide when ``beta == gamma``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import RatLike, binomial
from .report import VerificationReport, exact_report
from .special import (
    B,
    E,
    Family,
    bernoulli_number,
    family_value,
    periodic_bernoulli,
    periodic_euler,
)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class ReciprocityCase:
    m: int
    n: int
    beta: Fraction = Fraction(1)
    gamma: Fraction = Fraction(1)
    b1: Fraction = Fraction(1)
    b2: Fraction = Fraction(1)
    y1: Fraction = Fraction(0)
    y2: Fraction = Fraction(0)
    x: Fraction = Fraction(0)

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        for name in ("beta", "gamma", "b1", "b2", "y1", "y2", "x"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.b1 == 0 or self.b2 == 0:
            raise ValueError("scales b1, b2 must be nonzero")

    def params(self) -> dict:
        return {k: getattr(self, k) for k in ("m", "n", "beta", "gamma", "b1", "b2", "y1", "y2", "x")}


def two_sum(case: ReciprocityCase, family: Family = Family.EULER, x: RatLike | None = None,
            corrected: bool = False) -> Fraction:
    """The difference of the two finite sums at argument shift ``x``.

    ``family`` is the family of the factor taken at ``b1 x + y1``; the factor
    at ``b2 x + y2`` is always Euler.
    """
    c = case
    x = c.x if x is None else Fraction(x)
    M = c.m + c.n + 1
    u1 = c.b1 * x + c.y1
    u2 = c.b2 * x + c.y2
    first = Fraction(0)
    for a in range(c.n + 1):
        first += (_sign(a) * binomial(M, c.n - a) * c.b1**a / c.b2 ** (a + 1)
                  * family_value(family, c.n - a, c.gamma, u1) * E(c.m + a + 1, u2, c.beta))
    order2, order1 = (c.beta, c.gamma) if corrected else (c.gamma, c.beta)
    second = Fraction(0)
    for a in range(c.m + 1):
        second += (_sign(a) * binomial(M, c.m - a) * c.b2**a / c.b1 ** (a + 1)
                   * E(c.m - a, u2, order2) * family_value(family, c.n + a + 1, order1, u1))
    return first - second


def closed_sum(case: ReciprocityCase, family: Family = Family.EULER) -> Fraction:
    """Single-sum closed form of the two-sum difference; free of x."""
    c = case
    M = c.m + c.n + 1
    total = Fraction(0)
    for a in range(M + 1):
        total += (_sign(c.m + 1 - a) * binomial(M, a) * c.b1**a * c.b2 ** (M - a)
                  * family_value(family, M - a, c.gamma, c.y1) * E(a, c.y2, c.beta))
    return total / (c.b1 ** (c.m + 1) * c.b2 ** (c.n + 1))


def euler_T(case: ReciprocityCase, corrected: bool = False) -> Fraction:
    return two_sum(case, Family.EULER, 0, corrected)


def euler_T_closed(case: ReciprocityCase) -> Fraction:
    return closed_sum(case, Family.EULER)


def mixed_T1(case: ReciprocityCase, corrected: bool = False) -> Fraction:
    return two_sum(case, Family.BERNOULLI, 0, corrected)


def mixed_T1_closed(case: ReciprocityCase) -> Fraction:
    return closed_sum(case, Family.BERNOULLI)


def _vanishing_extras(case: ReciprocityCase) -> dict:
    if case.y1 == case.gamma / 2 and case.y2 == case.beta / 2 and (case.m + case.n) % 2 == 0:
        return {"vanishing": Fraction(0)}
    return {}


def check_eq45(case: ReciprocityCase, corrected: bool = False) -> VerificationReport:
    ident = "eq45-corrected" if corrected else "eq45"
    return exact_report(ident, case.params(), two_sum(case, Family.EULER, None, corrected),
                        euler_T_closed(case), _vanishing_extras(case))


def check_eq47(case: ReciprocityCase, corrected: bool = False) -> VerificationReport:
    """Definition of T against its reindexed closed form (x = 0)."""
    ident = "eq47-corrected" if corrected else "eq47"
    return exact_report(ident, case.params(), euler_T(case, corrected), euler_T_closed(case))


def check_shift_invariance(case: ReciprocityCase) -> VerificationReport:
    """The alternating single sum is the same at ``b x + y`` as at ``y``."""
    c = case
    M = c.m + c.n + 1

    def single(x: Fraction) -> Fraction:
        u1, u2 = c.b1 * x + c.y1, c.b2 * x + c.y2
        return sum((_sign(a) * binomial(M, a) * c.b1**a * c.b2 ** (M - a)
                    * E(M - a, u1, c.gamma) * E(a, u2, c.beta) for a in range(M + 1)), Fraction(0))

    return exact_report("x-invariance", c.params(), single(c.x), single(Fraction(0)))


def check_eq48(m: int, n: int, gamma: RatLike, beta: RatLike, x: RatLike, y1: RatLike, y2: RatLike,
               corrected: bool = False) -> VerificationReport:
    """``b1 = b2 = 1``. ``corrected`` fixes the order attachment and multiplies
    the left side by ``gamma + beta - 1``."""
    case = ReciprocityCase(m, n, beta, gamma, 1, 1, y1, y2, x)
    lhs = two_sum(case, Family.EULER, None, corrected)
    if corrected:
        lhs *= case.gamma + case.beta - 1
    w = case.y2 - case.y1 + case.gamma - 1
    order = case.gamma + case.beta - 1
    M = m + n + 1
    rhs = _sign(n) * (2 * w * E(M, w, order) - 2 * E(M + 1, w, order))
    return exact_report("eq48-corrected" if corrected else "eq48", case.params(), lhs, rhs)


def check_b1_1_b2_minus1(m: int, n: int, gamma: RatLike, beta: RatLike, x: RatLike, y1: RatLike,
                         y2: RatLike, corrected: bool = False) -> VerificationReport:
    gamma, beta, x, y1, y2 = map(Fraction, (gamma, beta, x, y1, y2))
    M = m + n + 1
    o2, o1 = (beta, gamma) if corrected else (gamma, beta)
    lhs = Fraction(0)
    for a in range(n + 1):
        lhs += binomial(M, n - a) * E(n - a, x + y1, gamma) * E(m + a + 1, y2 - x, beta)
    for a in range(m + 1):
        lhs += binomial(M, m - a) * E(m - a, y2 - x, o2) * E(n + a + 1, x + y1, o1)
    if corrected:
        lhs *= gamma + beta - 1
    w = y2 + y1 - 1
    order = gamma + beta - 1
    rhs = 2 * w * E(M, w, order) - 2 * E(M + 1, w, order)
    params = {"m": m, "n": n, "gamma": gamma, "beta": beta, "x": x, "y1": y1, "y2": y2}
    return exact_report("b1=1,b2=-1-corrected" if corrected else "b1=1,b2=-1", params, lhs, rhs)


def check_b1_2_b2_minus1(m: int, n: int, x: RatLike, y1: RatLike, y2: RatLike) -> VerificationReport:
    """``beta = gamma = 1``, ``b1 = 2``, ``b2 = -1``; the middle form is an extra."""
    x, y1, y2 = map(Fraction, (x, y1, y2))
    M = m + n + 1
    lhs = Fraction(0)
    for a in range(n + 1):
        lhs += binomial(M, n - a) * 2 ** (m + 1 + a) * E(n - a, 2 * x + y1) * E(m + a + 1, y2 - x)
    for a in range(m + 1):
        lhs += binomial(M, m - a) * 2 ** (m - a) * E(m - a, y2 - x) * E(n + a + 1, 2 * x + y1)
    middle = sum((binomial(M, a) * 2**a * E(a, y2) * E(M - a, y1) for a in range(M + 1)), Fraction(0))
    w = 2 * y2 + y1
    rhs = E(M, w) + 2**M * E(M, w / 2) - 2**M * E(M, (w + 1) / 2)
    params = {"m": m, "n": n, "x": x, "y1": y1, "y2": y2}
    return exact_report("b1=2,b2=-1", params, lhs, rhs, {"middle": middle})


def check_eq47ab(m: int, n: int, b1: RatLike, b2: RatLike, x: RatLike) -> VerificationReport:
    """``beta = gamma = 1``, ``y1 = y2 = 0``; the 47b re-expression is an extra."""
    case = ReciprocityCase(m, n, 1, 1, b1, b2, 0, 0, x)
    b1, b2 = case.b1, case.b2
    M = m + n + 1
    lhs = two_sum(case)
    rhs = euler_T_closed(case)
    s = sum((binomial(M, a) * b1**a * b2 ** (M - a) * E(M - a, 0) * E(a, 0) for a in range(M + 1)), Fraction(0))
    alt = _sign(m) * s / (b1 ** (m + 1) * b2 ** (n + 1)) - 2 * (-b2) ** m / b1 ** (m + 1) * E(M, 0)
    return exact_report("eq47ab", {"m": m, "n": n, "b1": b1, "b2": b2, "x": case.x}, lhs, rhs, {"eq47b": alt})


def check_T1(case: ReciprocityCase, corrected: bool = False) -> VerificationReport:
    ident = "eq30-corrected" if corrected else "eq30"
    return exact_report(ident, case.params(), two_sum(case, Family.BERNOULLI, None, corrected),
                        mixed_T1_closed(case), _vanishing_extras(case))


def check_T1_equal_scale(m: int, n: int, gamma: RatLike, y1: RatLike, y2: RatLike) -> VerificationReport:
    """``b1 = b2 = 1`` and ``beta = gamma``: T1 collapses to one Bernoulli value."""
    case = ReciprocityCase(m, n, gamma, gamma, 1, 1, y1, y2)
    M = m + n + 1
    rhs = _sign(n) * 2**M * B(M, (case.gamma - case.y1 + case.y2) / 2, case.gamma)
    params = {"m": m, "n": n, "gamma": case.gamma, "y1": case.y1, "y2": case.y2}
    return exact_report("eq30-equal-scale", params, mixed_T1(case), rhs)


def check_T1_b1_2_b2_minus1(m: int, n: int, y1: RatLike, y2: RatLike, corrected: bool = False) -> VerificationReport:
    """``beta = gamma = 1``, ``b1 = 2``, ``b2 = -1``.

    As printed the two Euler terms are subtracted; the partial fraction
    ``1/((t^2+1)(t-1)) = (1/2)/(t-1) - (1/2)(t+1)/(t^2+1)`` gives their sum,
    which ``corrected=True`` uses.
    """
    case = ReciprocityCase(m, n, 1, 1, 2, -1, y1, y2)
    M = m + n + 1
    lhs = 2 ** (m + 1) * mixed_T1(case)
    middle = -sum((binomial(M, a) * 2**a * E(a, case.y2) * B(M - a, case.y1) for a in range(M + 1)), Fraction(0))
    w = 2 * case.y2 + case.y1
    hi = E(M - 1, (w + 1) / 2)
    lo = E(M - 1, w / 2)
    euler_part = hi + lo if corrected else hi - lo
    rhs = -B(M, w) + Fraction(2) ** (M - 2) * M * euler_part
    ident = "t1-b1=2,b2=-1-corrected" if corrected else "t1-b1=2,b2=-1"
    return exact_report(ident, {"m": m, "n": n, "y1": case.y1, "y2": case.y2}, lhs, rhs, {"middle": middle})


def _eq50_lhs(m: int, n: int, b1: Fraction, b2: Fraction) -> Fraction:
    M = m + n + 1
    first = sum((_sign(a) * binomial(M, n - a) * b1**a / b2 ** (a + 1) * bernoulli_number(n - a) * E(m + a + 1, 0)
                 for a in range(n + 1)), Fraction(0))
    second = sum((_sign(a) * binomial(M, m - a) * b2**a / b1 ** (a + 1) * E(m - a, 0) * bernoulli_number(n + a + 1)
                  for a in range(m + 1)), Fraction(0))
    return first - second


def _bernoulli_convolution(r1: int, c: Fraction, d: Fraction) -> Fraction:
    """``sum_{a=1}^{r1} (-1)^a C(r1,a) c^a d^(r1-a) (1-2^a) B_{r1-a} B_a``."""
    return sum((_sign(a) * binomial(r1, a) * c**a * d ** (r1 - a) * (1 - 2**a)
                * bernoulli_number(r1 - a) * bernoulli_number(a) for a in range(1, r1 + 1)), Fraction(0))


def check_eq50(m: int, n: int, b1: RatLike, b2: RatLike) -> VerificationReport:
    b1, b2 = Fraction(b1), Fraction(b2)
    if b1 == 0 or b2 == 0:
        raise ValueError("scales must be nonzero")
    lhs = _eq50_lhs(m, n, b1, b2)
    rhs = (_sign(m) / (b1 ** (m + 2) * b2 ** (n + 1)) * Fraction(2, m + n + 2)
           * _bernoulli_convolution(m + n + 2, b1, b2))
    return exact_report("eq50", {"m": m, "n": n, "b1": b1, "b2": b2}, lhs, rhs)


@dataclass(frozen=True)
class SumParams:
    r: int
    c: int
    d: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.c == 0 or self.d == 0:
            raise ValueError("c and d must be nonzero")

    def params(self) -> dict:
        return {"r": self.r, "c": self.c, "d": self.d}


def dedekind_T(p: SumParams) -> Fraction:
    """``T_r(c, d) = sum_{j=0}^{|d|-1} (-1)^j Ebar_1(j/d) Ebar_r(cj/d)``."""
    total = Fraction(0)
    for j in range(abs(p.d)):
        term = periodic_euler(1, Fraction(j, p.d)) * periodic_euler(p.r, Fraction(p.c * j, p.d))
        total += -term if j % 2 else term
    return total


def dedekind_lhs(p: SumParams) -> Fraction:
    r, c, d = p.r, p.c, p.d
    return c * Fraction(d) ** r * dedekind_T(p) + d * Fraction(c) ** r * dedekind_T(SumParams(r, d, c))


def check_dedekind_reciprocity(p: SumParams) -> VerificationReport:
    r, c, d = p.r, Fraction(p.c), Fraction(p.d)
    rhs = Fraction(0)
    for a in range(r + 1):
        rhs += binomial(r, a) * d ** (a - 1) * c ** (r - 1 - a) * periodic_euler(a, 0) * periodic_euler(r - a, 0)
    rhs = -rhs / 2 + periodic_euler(r + 1, 0)
    return exact_report("eq47c", p.params(), dedekind_lhs(p), rhs)


def check_dedekind_observed(p: SumParams) -> VerificationReport:
    """The left side of the Dedekind reciprocity against the form it takes on
    odd coprime pairs with odd r: ``-(cd/2) E_r(0) (c^(r-1) + d^(r-1))``."""
    r, c, d = p.r, Fraction(p.c), Fraction(p.d)
    rhs = -c * d / 2 * E(r, 0) * (c ** (r - 1) + d ** (r - 1))
    return exact_report("eq47c-observed", p.params(), dedekind_lhs(p), rhs)


def hardy_s3(p: SumParams) -> Fraction:
    if p.d < 1:
        raise ValueError("d must be at least 1")
    total = Fraction(0)
    for j in range(1, p.d):
        v = periodic_bernoulli(p.r, Fraction(p.c * j, p.d))
        total += -v if j % 2 else v
    return total


def hardy_s4(p: SumParams) -> Fraction:
    if p.d < 1:
        raise ValueError("d must be at least 1")
    return -4 * sum((periodic_bernoulli(p.r, Fraction(p.c * j, 2 * p.d)) for j in range(1, p.d)), Fraction(0))


def check_hardy_reciprocity(p: SumParams) -> VerificationReport:
    r, c, d = p.r, p.c, p.d
    if d % 2 == 0 or r % 2 == 0:
        raise ValueError("d and r must be odd")
    if c < 1:
        raise ValueError("c must be positive")
    C, D = Fraction(c), Fraction(d)
    lhs = (r + 1) * (C * D**r * hardy_s3(p) - Fraction(1, 4) * D * (2 * C) ** r * hardy_s4(SumParams(r, d, c)))
    rhs = 2 * _bernoulli_convolution(r + 1, C, D)
    return exact_report("eq51", p.params(), lhs, rhs)


def _check_special_parity(m: int, n: int) -> None:
    if (m + n + 1) % 2 == 0:
        raise ValueError("m + n + 1 must be odd")


def check_s3_special(m: int, n: int, b: int) -> VerificationReport:
    _check_special_parity(m, n)
    if b % 2 == 0 or b < 1:
        raise ValueError("b must be a positive odd integer")
    B_ = Fraction(b)
    M = m + n + 1
    lhs = (sum((_sign(a) * binomial(M, n - a) * B_ ** (-a - 1) * bernoulli_number(n - a) * E(m + a + 1, 0)
                for a in range(n + 1)), Fraction(0))
           - sum((_sign(a) * binomial(M, m - a) * B_**a * E(m - a, 0) * bernoulli_number(n + a + 1)
                  for a in range(m + 1)), Fraction(0)))
    rhs = _sign(m) * B_**m * hardy_s3(SumParams(M, 1, b))
    return exact_report("s3-special", {"m": m, "n": n, "b": b}, lhs, rhs)


def check_s4_special(m: int, n: int, b: int) -> VerificationReport:
    _check_special_parity(m, n)
    if b < 1:
        raise ValueError("b must be a positive integer")
    B_ = Fraction(b)
    M = m + n + 1
    lhs = (sum((_sign(a) * binomial(M, n - a) * B_**a * bernoulli_number(n - a) * E(m + a + 1, 0)
                for a in range(n + 1)), Fraction(0))
           - sum((_sign(a) * binomial(M, m - a) * B_ ** (-a - 1) * E(m - a, 0) * bernoulli_number(n + a + 1)
                  for a in range(m + 1)), Fraction(0)))
    rhs = _sign(m + 1) * Fraction(2) ** (m + n - 1) * B_ ** (n - 1) * hardy_s4(SumParams(M, 1, b))
    return exact_report("s4-special", {"m": m, "n": n, "b": b}, lhs, rhs)


def check_s3_s4_specials(m: int, n: int, b: int) -> list[VerificationReport]:
    """Both special-value displays; the s3 one only applies to odd b."""
    out = []
    if b % 2:
        out.append(check_s3_special(m, n, b))
    out.append(check_s4_special(m, n, b))
    return out


def check_association(m: int, n: int, b1: int, b2: int) -> VerificationReport:
    """Rescaled two-sum = Hardy-Berndt combination = Bernoulli convolution.

    For odd ``r = m + n + 1`` and odd ``b2``; the Hardy-Berndt middle form is
    an extra.
    """
    r = m + n + 1
    if r % 2 == 0 or b2 % 2 == 0:
        raise ValueError("m + n + 1 and b2 must be odd")
    if b1 < 1 or b2 < 1:
        raise ValueError("b1, b2 must be positive")
    c, d = Fraction(b1), Fraction(b2)
    lhs = (sum((_sign(m - a) * binomial(r, n - a) * c ** (m + 2 + a) * d ** (n - a) * bernoulli_number(n - a)
                * E(m + a + 1, 0) for a in range(n + 1)), Fraction(0))
           - sum((_sign(m - a) * binomial(r, m - a) * d ** (n + 1 + a) * c ** (m + 1 - a) * E(m - a, 0)
                  * bernoulli_number(n + a + 1) for a in range(m + 1)), Fraction(0)))
    middle = c * d**r * hardy_s3(SumParams(r, b1, b2)) - Fraction(1, 4) * d * (2 * c) ** r * hardy_s4(SumParams(r, b2, b1))
    rhs = Fraction(2, r + 1) * _bernoulli_convolution(r + 1, c, d)
    return exact_report("assoc", {"m": m, "n": n, "b1": b1, "b2": b2}, lhs, rhs, {"middle": middle})


def coprime(c: int, d: int) -> bool:
    return gcd(c, d) == 1

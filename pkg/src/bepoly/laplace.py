"""Laplace transform of the periodic Euler function ``Ebar_n(t u)``.

Closed form::

    (1/s) sum_{a=0}^{n} (E_a(0)/a!) (t/s)^(n-a) - (t^n/s^(n+1)) * 2/(e^(s/t)+1)

and a semi-analytic numeric path: on ``u in [k/t, (k+1)/t]`` the integrand is
``(-1)^k e^(-s u) E_n(t u - k)``, a polynomial times an exponential, which is
integrated exactly per piece and summed until a rigorous tail bound drops
below ``tol``.

The closed form is a difference of two nearly equal quantities when ``s/t``
is small, so it is evaluated with mpmath at 40 significant digits and only
then rounded to a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath

from .exact import Poly, binomial, factorial
from .report import VerificationReport, float_report
from .special import E, euler_poly

_DPS = 40
MAX_PIECES = 1_000_000


class NonConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class LaplaceCase:
    n: int
    s: float
    t: float
    tol: float = 1e-10

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not self.s > 0:
            raise ValueError("s must be positive")
        if self.t == 0:
            raise ValueError("t must be nonzero")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    @property
    def in_domain(self) -> bool:
        """``|s/t| < pi``, where the series derivation of the closed form applies."""
        return abs(self.s / self.t) < math.pi

    def params(self) -> dict:
        return {"n": self.n, "s": float(self.s), "t": float(self.t), "tol": float(self.tol)}


_OUTSIDE = "outside the convergence domain |s/t| < pi; closed form evaluated anyway"


# --- closed form -------------------------------------------------------------

def _logistic_derivative_polys(order: int) -> list[Poly]:
    """``P_i`` with ``phi^(i)(w) = P_i(phi(w))`` for ``phi(w) = 2/(e^w + 1)``.

    Uses ``phi' = phi^2/2 - phi``, hence ``P_{i+1} = P_i'(phi) * (phi^2/2 - phi)``.
    """
    step = Poly([0, -1, Fraction(1, 2)])
    out = [Poly([0, 1])]
    for _ in range(order):
        out.append(out[-1].derivative() * step)
    return out


def _rising(p: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= p + i
    return out


def _closed_mp(n: int, s, t, m: int = 0):
    """m-th s-derivative of the closed form, in mpmath arithmetic."""
    s = mpmath.mpf(s)
    t = mpmath.mpf(t)
    sign = -1 if m % 2 else 1
    poly_part = mpmath.mpf(0)
    for a in range(n + 1):
        p = n - a + 1
        coef = mpmath.mpf(E(a, 0).numerator) / E(a, 0).denominator / factorial(a)
        poly_part += coef * t ** (n - a) * sign * _rising(p, m) * s ** (-p - m)
    phi = 2 / (mpmath.exp(s / t) + 1)
    derivs = _logistic_derivative_polys(m)
    tail = mpmath.mpf(0)
    for i in range(m + 1):
        k = m - i
        power_deriv = (-1 if k % 2 else 1) * _rising(n + 1, k) * s ** (-(n + 1) - k)
        h_i = sum(mpmath.mpf(c.numerator) / c.denominator * phi**j for j, c in enumerate(derivs[i].coeffs)) / t**i
        tail += binomial(m, i) * power_deriv * h_i
    return poly_part - t**n * tail


def laplace_closed(case: LaplaceCase) -> float:
    with mpmath.workdps(_DPS):
        return float(_closed_mp(case.n, case.s, case.t))


def laplace_closed_derivative(m: int, case: LaplaceCase) -> float:
    """m-th derivative in s of the closed form, by exact differentiation."""
    if m < 0:
        raise ValueError("m must be non-negative")
    with mpmath.workdps(_DPS):
        return float(_closed_mp(case.n, case.s, case.t, m))


# --- numeric path ------------------------------------------------------------

def _exp_moments(sigma: float, top: int) -> list[float]:
    """``J_i = int_0^1 v^i e^(-sigma v) dv`` for ``i = 0..top``."""
    if sigma <= 12.0:
        # alternating power series; terms peak near e^sigma, still far from overflow
        out = []
        for i in range(top + 1):
            total, term, j = 0.0, 1.0, 0
            while True:
                add = term / (i + j + 1)
                total += add
                if abs(add) < 1e-18 * max(1.0, abs(total)) and j > sigma:
                    break
                j += 1
                term *= -sigma / j
            out.append(total)
        return out
    # upward recurrence is stable once sigma exceeds the index range
    em = math.exp(-sigma)
    out = [(1 - em) / sigma]
    for i in range(1, top + 1):
        out.append((i * out[-1] - em) / sigma)
    return out


def _horner(coeffs: list[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _piece_coeffs(n: int, m: int, k: int, t: float) -> list[float]:
    """Coefficients in v of ``E_n(v) * ((v + k)/t)^m``, as floats."""
    en = [float(c) for c in euler_poly(n).coeffs] or [0.0]
    shift = [binomial(m, i) * float(k) ** (m - i) / t**m for i in range(m + 1)]
    out = [0.0] * (len(en) + m)
    for i, a in enumerate(en):
        for j, b in enumerate(shift):
            out[i + j] += a * b
    return out


def laplace_pieces(case: LaplaceCase, m: int = 0) -> Iterator[float]:
    """Unnormalized piece integrals ``int_{k/t}^{(k+1)/t} u^m e^(-su) Ebar_n(tu) du``."""
    if case.t <= 0:
        raise ValueError("the numeric path needs t > 0")
    t, sigma = float(case.t), case.s / case.t
    moments = _exp_moments(sigma, case.n + m)
    k = 0
    while True:
        coeffs = _piece_coeffs(case.n, m, k, t)
        value = sum(c * j for c, j in zip(coeffs, moments)) * math.exp(-sigma * k) / t
        yield -value if k % 2 else value
        k += 1


def _tail_bound(case: LaplaceCase, m: int, pieces: int) -> float:
    """Bound on ``int_U^inf u^m e^(-su) |Ebar_n(tu)| du`` with ``U = pieces/t``."""
    sup = sum(abs(float(c)) for c in euler_poly(case.n).coeffs)
    U = pieces / case.t
    s = case.s
    poly = sum(math.factorial(m) / math.factorial(i) * U**i / s ** (m - i + 1) for i in range(m + 1))
    return sup * math.exp(-s * U) * poly


def _numeric(case: LaplaceCase, m: int) -> float:
    total = 0.0
    compensation = 0.0
    scale = math.factorial(case.n)
    for k, piece in enumerate(laplace_pieces(case, m), start=1):
        # Kahan summation keeps the alternating tail from eroding the total
        y = piece - compensation
        nxt = total + y
        compensation = (nxt - total) - y
        total = nxt
        if _tail_bound(case, m, k) / scale < case.tol:
            return total / scale
        if k >= MAX_PIECES:
            raise NonConvergence(f"tolerance {case.tol} not reached after {k} pieces")
    raise AssertionError("unreachable")


def laplace_numeric(case: LaplaceCase) -> float:
    """``(1/n!) int_0^inf e^(-su) Ebar_n(tu) du`` by exact per-piece integration."""
    return _numeric(case, 0)


def laplace_moment_numeric(m: int, case: LaplaceCase) -> float:
    """``((-1)^m/n!) int_0^inf u^m e^(-su) Ebar_n(tu) du``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    value = _numeric(case, m)
    return -value if m % 2 else value


def check_laplace(case: LaplaceCase) -> VerificationReport:
    note = None if case.in_domain else _OUTSIDE
    return float_report("eq16", case.params(), laplace_numeric(case), laplace_closed(case), case.tol, note)


def laplace_moment_check(m: int, case: LaplaceCase) -> VerificationReport:
    if not 0 <= m <= 4:
        raise ValueError("moment order must be in 0..4")
    note = None if case.in_domain else _OUTSIDE
    params = dict(case.params(), m=m)
    return float_report("laplace-moment", params, laplace_moment_numeric(m, case),
                        laplace_closed_derivative(m, case), case.tol, note)

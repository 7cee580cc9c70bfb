"""Registry of identity suites: each id owns a fixed parameter grid.

Grids are deterministic; sampled suites draw from ``random.Random(seed)``.
Any grid axis can be pinned through ``overrides`` (``{"m": [3]}``, ...).
"""
from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction as F
from math import gcd
from typing import Callable, Iterable, Iterator

from . import identities as ids
from . import integrals as itg
from . import laplace as lp
from . import reciprocity as rc
from .exact import Poly, poly_affine_compose
from .report import VerificationReport, exact_report, poly_report
from .special import Family, bernoulli_poly, higher_order_poly

DEFAULT_SEED = 20240607
ORDERS = (F(1), F(2), F(1, 2), F(-3, 2), F(5))
CONV_ORDERS = (F(1), F(2), F(3), F(1, 2), F(-3, 2))
CONV_ARGS = (F(0), F(1), F(1, 2), F(-1, 3), F(7, 5))

Overrides = dict


@dataclass(frozen=True)
class Suite:
    id: str
    summary: str
    cases: Callable[[Overrides], Iterable[tuple]]
    check: Callable[..., VerificationReport | list[VerificationReport]]


def axis(ov: Overrides, name: str, default: Iterable):
    v = ov.get(name)
    return list(v) if v is not None else list(default)


def _seed(ov: Overrides) -> int:
    return int(ov.get("seed") or DEFAULT_SEED)


# --- special-polys -----------------------------------------------------------

def _fams():
    return (Family.BERNOULLI, Family.EULER)


def _eq1(fam, m, alpha):
    lhs = higher_order_poly(fam, m, alpha).derivative()
    rhs = higher_order_poly(fam, m - 1, alpha) * m if m else Poly()
    return poly_report("eq1", {"family": fam.value, "m": m, "alpha": alpha}, lhs, rhs)


def _eq2(fam, m, alpha):
    p = higher_order_poly(fam, m, alpha)
    lhs = poly_affine_compose(p, -1, alpha)
    rhs = p if m % 2 == 0 else -p
    return poly_report("eq2", {"family": fam.value, "m": m, "alpha": alpha}, lhs, rhs)


def _midpoint(fam, m, alpha):
    return exact_report("midpoint", {"family": fam.value, "m": m, "alpha": alpha},
                        higher_order_poly(fam, m, alpha)(alpha / 2), 0)


def _eq49(n):
    b = bernoulli_poly(n + 1)
    rhs = (b - poly_affine_compose(b, F(1, 2), 0) * 2 ** (n + 1)) * F(2, n + 1)
    return poly_report("eq49", {"n": n}, higher_order_poly(Family.EULER, n, 1), rhs)


# --- identities --------------------------------------------------------------

def _conv_cases(ov):
    return itertools.product(axis(ov, "m", range(13)), CONV_ORDERS, CONV_ORDERS,
                             axis(ov, "x", CONV_ARGS), axis(ov, "y", CONV_ARGS))


def _conv(ident, fn, scaled):
    def run(m, beta, gamma, x, y):
        lhs, rhs = fn(ids.ConvolutionCase(m, beta, gamma, x, y), scaled=scaled)
        note = None
        if not scaled and lhs != rhs and beta + gamma != 2:
            note = "balances only with beta + gamma = 2; scaled form multiplies the left side by beta + gamma - 1"
        return exact_report(ident, {"m": m, "beta": beta, "gamma": gamma, "x": x, "y": y}, lhs, rhs, note=note)
    return run


def _eq34(m, n, x, y):
    lhs, rhs = ids.conv_bern_euler(m, n, x, y)
    return exact_report("eq34", {"m": m, "n": n, "x": x, "y": y}, lhs, rhs)


# --- integrals ---------------------------------------------------------------

def _small_rat(rng: random.Random, nonzero: bool = False) -> F:
    while True:
        q = F(rng.randint(-6, 6), rng.choice((1, 2, 3)))
        if q or not nonzero:
            return q


def sample_euler_integral(rng: random.Random) -> itg.ProductIntegral:
    r = rng.randint(1, 3)
    factors = [itg.FactorSpec(Family.EULER, rng.randint(0, 6), rng.choice(ORDERS),
                              _small_rat(rng, True), _small_rat(rng)) for _ in range(r)]
    return itg.ProductIntegral(tuple(factors), rng.choice((F(1), F(1, 2), F(2), F(-1))), rng.random() < 0.5)


def sample_mixed_integral(rng: random.Random) -> itg.ProductIntegral:
    l, r = rng.randint(0, 2), rng.randint(1, 2)
    fams = [Family.BERNOULLI] * l + [Family.EULER] * r
    factors = [itg.FactorSpec(f, rng.randint(0, 5), rng.choice(ORDERS), _small_rat(rng, True), _small_rat(rng))
               for f in fams]
    return itg.ProductIntegral(tuple(factors), rng.choice((F(1), F(1, 2), F(2), F(-1))), rng.random() < 0.5)


def _sampled(sampler, default_count):
    def cases(ov):
        rng = random.Random(_seed(ov))
        count = int(ov.get("samples") or default_count)
        return [(i, _seed(ov), sampler(rng)) for i in range(count)]
    return cases


def _ip(i, seed, pi):
    return {"sample": i, "seed": seed, "integral": json.dumps(pi.to_dict(), separators=(",", ":"))}


def _eq31(i, seed, pi):
    return exact_report("eq31", _ip(i, seed, pi), itg.euler_product_integral_closed(pi), itg.product_integral_oracle(pi))


def _eq40(i, seed, pi):
    oracle = itg.product_integral_oracle(pi)
    vals = {f"mu={mu}": itg.euler_product_integral(pi, mu) for mu in range(1, itg.max_mu(pi) + 1)}
    return exact_report("eq40", _ip(i, seed, pi), itg.euler_product_integral(pi, 0), oracle, vals)


def _eq33(i, seed, pi):
    return exact_report("eq33", _ip(i, seed, pi), itg.mixed_product_integral_closed(pi), itg.product_integral_oracle(pi))


def _eq25(i, seed, pi):
    """Every rotation of the factors gives the same closed-form value."""
    base = itg.product_integral_oracle(pi)
    k = len(pi.factors)
    rots = {}
    for j in range(1, k):
        rot = itg.ProductIntegral(pi.factors[j:] + pi.factors[:j], pi.upper, pi.normalized)
        rots[f"rotation={j}"] = itg.euler_product_integral_closed(rot)
    return exact_report("eq25", _ip(i, seed, pi), itg.euler_product_integral_closed(pi), base, rots)


def _parity_cases(ov):
    rng = random.Random(_seed(ov))
    out = [((2, 3, 10), (F(3), F(1, 2), F(5)), (F(-2), F(1), F(1, 2))),
           ((2, 10), (F(3), F(5)), (F(0), F(4))),
           ((0,), (F(1),), (F(0),))]
    while len(out) < int(ov.get("samples") or 60):
        r = rng.randint(1, 3)
        orders = tuple(rng.choice(ORDERS) for _ in range(r))
        shifts = tuple(_small_rat(rng) for _ in range(r))
        if any(a == 2 * y for a, y in zip(orders, shifts)):
            continue
        out.append((tuple(rng.randint(0, 5) for _ in range(r)), orders, shifts))
    return out


def _parity(degrees, orders, shifts):
    pi = itg.parity_integral(degrees, orders, shifts)
    params = {"degrees": list(degrees), "orders": [str(a) for a in orders], "shifts": [str(y) for y in shifts]}
    return exact_report("parity", params, itg.euler_parity_special_case(degrees, orders, shifts),
                        itg.product_integral_oracle(pi), {"closed": itg.euler_product_integral_closed(pi)})


def example1_integral() -> itg.ProductIntegral:
    return itg.ProductIntegral((
        itg.FactorSpec(Family.EULER, 2, 3, 7, -2),
        itg.FactorSpec(Family.EULER, 3, F(1, 2), F(-3, 2), 1),
        itg.FactorSpec(Family.EULER, 10, 5, 4, F(1, 2)),
    ), 1)


def example2_integral() -> itg.ProductIntegral:
    return itg.ProductIntegral((
        itg.FactorSpec(Family.EULER, 2, 3, 3, 0),
        itg.FactorSpec(Family.EULER, 10, 5, -3, 4),
    ), 1, normalized=True)


def _example1():
    pi = example1_integral()
    return exact_report("example1", {}, itg.product_integral_oracle(pi), 0, {
        "parity": itg.euler_parity_special_case((2, 3, 10), (3, F(1, 2), 5), (-2, 1, F(1, 2))),
        "closed": itg.euler_product_integral_closed(pi),
    })


def example2_display() -> F:
    from .exact import factorial
    from .special import E
    return F(2, 3) * sum((E(2 - a, 0, 3) / factorial(2 - a) * E(11 + a, 4, 5) / factorial(11 + a)
                          for a in range(3)), F(0))


def _example2():
    pi = example2_integral()
    return exact_report("example2", {}, itg.product_integral_oracle(pi), example2_display(), {
        "parity": itg.euler_parity_special_case((2, 10), (3, 5), (0, 4)),
        "closed": itg.euler_product_integral_closed(pi),
    })


# --- reciprocity -------------------------------------------------------------

RC_ORDERS = (F(1), F(2), F(1, 2))
RC_SCALES = (F(1), F(-1), F(2), F(-3, 2))
RC_SHIFTS = (F(0), F(1, 2), F(-1, 3))
RC_X = (F(0), F(1), F(2, 5))


def _rc_cases(ov):
    """m, n <= 5, all order and scale pairs; the (y1, y2, x) triple cycles
    through the 27 combinations so every one of them is hit many times."""
    triples = list(itertools.product(RC_SHIFTS, RC_SHIFTS, RC_X))
    out = []
    grid = itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6)),
                             RC_ORDERS, RC_ORDERS, RC_SCALES, RC_SCALES)
    for i, (m, n, beta, gamma, b1, b2) in enumerate(grid):
        y1, y2, x = triples[i % len(triples)]
        if ov.get("x") is not None:
            x = ov["x"][0]
        out.append((rc.ReciprocityCase(m, n, beta, gamma, b1, b2, y1, y2, x),))
    # vanishing points: y1 = gamma/2, y2 = beta/2, m + n even
    for m, n in itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6))):
        if (m + n) % 2:
            continue
        for beta, gamma in itertools.product(RC_ORDERS, RC_ORDERS):
            out.append((rc.ReciprocityCase(m, n, beta, gamma, 2, F(-3, 2), gamma / 2, beta / 2, F(2, 5)),))
    return out


def _bullet_cases(ov):
    vals = (F(0), F(1, 2), F(-1))
    return itertools.product(axis(ov, "m", range(5)), axis(ov, "n", range(5)), (F(1), F(2), F(3, 2)),
                             (F(1), F(2), F(3, 2)), axis(ov, "x", vals), vals, vals)


def _mn_xyy(ov, top=5):
    vals = (F(0), F(1, 2), F(-1, 3))
    return itertools.product(axis(ov, "m", range(top)), axis(ov, "n", range(top)), axis(ov, "x", vals), vals, vals)


def _t1b_cases(ov):
    vals = (F(0), F(1, 2), F(-1, 3))
    return itertools.product(axis(ov, "m", range(5)), axis(ov, "n", range(5)), vals, vals)


def _eq47ab_cases(ov):
    bs = (F(1), F(-1), F(2), F(3), F(-3, 2))
    return itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6)), axis(ov, "b", bs), bs,
                             axis(ov, "x", (F(0), F(1, 2))))


def _equal_scale_cases(ov):
    vals = (F(0), F(1, 2), F(-1, 3))
    return itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6)), ORDERS, vals, vals)


def _eq50_cases(ov):
    bs = (1, -1, 2, 3, 5)
    return itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6)), axis(ov, "b", bs), bs)


def _s3s4_cases(ov):
    return [(m, n, b) for m, n, b in itertools.product(axis(ov, "m", range(6)), axis(ov, "n", range(6)),
                                                        axis(ov, "b", range(1, 8))) if (m + n) % 2 == 0]


def _assoc_cases(ov):
    return [(m, n, b1, b2) for m, n, b1, b2 in itertools.product(
        axis(ov, "m", range(6)), axis(ov, "n", range(6)), axis(ov, "c", range(1, 8)), axis(ov, "d", range(1, 10, 2)))
        if (m + n) % 2 == 0 and gcd(b1, b2) == 1]


def dedekind_grid(ov: Overrides) -> list[tuple]:
    """Odd coprime pairs c, d <= 15 and r in {1, 3, 5}."""
    return [(rc.SumParams(r, c, d),) for r, c, d in itertools.product(
        axis(ov, "r", (1, 3, 5)), axis(ov, "c", range(1, 16, 2)), axis(ov, "d", range(1, 16, 2))) if gcd(c, d) == 1]


def hardy_grid(ov: Overrides) -> list[tuple]:
    return [(rc.SumParams(r, c, d),) for r, c, d in itertools.product(
        axis(ov, "r", (1, 3, 5)), axis(ov, "c", range(1, 11)), axis(ov, "d", range(1, 16, 2))) if gcd(c, d) == 1]


def _s_empty_cases(ov):
    return itertools.product(axis(ov, "r", (1, 2, 3, 4, 5)), axis(ov, "d", range(1, 16)))


def _s_empty(r, d):
    p = rc.SumParams(r, d, 1)
    return exact_report("s-empty", {"r": r, "d": d}, rc.hardy_s3(p), 0, {"s4": rc.hardy_s4(p)})


def _dedekind_period_cases(ov):
    return [(r, c, d) for r, c, d in itertools.product(
        axis(ov, "r", range(1, 7)), axis(ov, "c", range(-7, 8)), axis(ov, "d", range(1, 10))) if c and c + 2 * d]


def _dedekind_period(r, c, d):
    p = rc.SumParams(r, c, d)
    return exact_report("dedekind-period", p.params(), rc.dedekind_T(rc.SumParams(r, c + 2 * d, d)), rc.dedekind_T(p))


# --- laplace -----------------------------------------------------------------

def _eq16_cases(ov):
    return itertools.product(axis(ov, "n", range(7)), (0.1, 0.5, 1.0, 2.0, 3.0), (1.0, 2.0))


def _eq16(n, ratio, t):
    return lp.check_laplace(lp.LaplaceCase(n, ratio * t, t, 1e-9))


def _moment_cases(ov):
    return itertools.product(axis(ov, "m", range(3)), axis(ov, "n", range(4)), (0.1, 0.5, 1.0, 2.0, 3.0), (1.0, 2.0))


def _moment(m, n, ratio, t):
    return lp.laplace_moment_check(m, lp.LaplaceCase(n, ratio * t, t, 1e-8))


def _registry() -> dict[str, Suite]:
    S = Suite
    one = lambda ov: [()]  # noqa: E731
    suites = [
        S("eq1", "derivative property", lambda ov: itertools.product(_fams(), axis(ov, "m", range(16)), ORDERS), _eq1),
        S("eq2", "reflection F(alpha - x) = (-1)^m F(x)",
          lambda ov: itertools.product(_fams(), axis(ov, "m", range(16)), ORDERS), _eq2),
        S("midpoint", "odd-degree vanishing at alpha/2",
          lambda ov: itertools.product(_fams(), axis(ov, "m", range(1, 16, 2)), ORDERS), _midpoint),
        S("eq49", "Euler via Bernoulli", lambda ov: [(n,) for n in axis(ov, "n", range(21))], _eq49),
        S("eq41", "Euler-Euler convolution as printed", _conv_cases, _conv("eq41", ids.conv_euler_euler, False)),
        S("eq41-scaled", "Euler-Euler convolution with (beta+gamma-1) on the left", _conv_cases,
          _conv("eq41-scaled", ids.conv_euler_euler, True)),
        S("bern-conv", "Bernoulli-Bernoulli convolution as printed", _conv_cases,
          _conv("bern-conv", ids.conv_bern_bern, False)),
        S("bern-conv-scaled", "Bernoulli-Bernoulli convolution with (beta+gamma-1) on the left", _conv_cases,
          _conv("bern-conv-scaled", ids.conv_bern_bern, True)),
        S("eq34", "Bernoulli-Euler convolution",
          lambda ov: itertools.product(axis(ov, "m", range(13)), CONV_ORDERS, axis(ov, "x", CONV_ARGS), CONV_ARGS),
          _eq34),
        S("example1", "first worked integral is zero", one, _example1),
        S("example2", "second worked integral", one, _example2),
        S("eq31", "Euler product integral closed form vs oracle", _sampled(sample_euler_integral, 200), _eq31),
        S("eq40", "mu-independence of the truncated form", _sampled(sample_euler_integral, 50), _eq40),
        S("eq25", "closed form invariant under rotating the factors", _sampled(sample_euler_integral, 50), _eq25),
        S("parity", "x = 1, b = alpha - 2y special case", _parity_cases, _parity),
        S("eq33", "mixed Bernoulli/Euler product integral vs oracle", _sampled(sample_mixed_integral, 100), _eq33),
        S("eq45", "T two-sum with x equals closed form", _rc_cases, rc.check_eq45),
        S("eq45-corrected", "eq45 with each order kept on its own argument", _rc_cases,
          lambda c: rc.check_eq45(c, True)),
        S("eq47", "T at x = 0 equals closed form", _rc_cases, rc.check_eq47),
        S("eq47-corrected", "eq47 with each order kept on its own argument", _rc_cases,
          lambda c: rc.check_eq47(c, True)),
        S("x-invariance", "alternating single sum is x-invariant", _rc_cases, rc.check_shift_invariance),
        S("eq48", "b1 = b2 = 1 specialization", _bullet_cases, rc.check_eq48),
        S("eq48-corrected", "eq48 with consistent orders and (gamma+beta-1) on the left", _bullet_cases,
          lambda *a: rc.check_eq48(*a, corrected=True)),
        S("b1=1,b2=-1", "b1 = 1, b2 = -1 specialization", _bullet_cases, rc.check_b1_1_b2_minus1),
        S("b1=1,b2=-1-corrected", "b1 = 1, b2 = -1 with consistent orders and (gamma+beta-1)", _bullet_cases,
          lambda *a: rc.check_b1_1_b2_minus1(*a, corrected=True)),
        S("b1=2,b2=-1", "b1 = 2, b2 = -1 specialization", _mn_xyy, rc.check_b1_2_b2_minus1),
        S("eq47ab", "beta = gamma = 1, y = 0", _eq47ab_cases, rc.check_eq47ab),
        S("eq30", "T1 two-sum with x equals closed form", _rc_cases, rc.check_T1),
        S("eq30-corrected", "eq30 with each order kept on its own argument", _rc_cases,
          lambda c: rc.check_T1(c, True)),
        S("eq30-equal-scale", "T1 at b1 = b2 = 1, beta = gamma", _equal_scale_cases, rc.check_T1_equal_scale),
        S("t1-b1=2,b2=-1", "T1 at b1 = 2, b2 = -1 as printed", _t1b_cases, rc.check_T1_b1_2_b2_minus1),
        S("t1-b1=2,b2=-1-corrected", "T1 at b1 = 2, b2 = -1 with the Euler terms added", _t1b_cases,
          lambda *a: rc.check_T1_b1_2_b2_minus1(*a, corrected=True)),
        S("eq50", "Bernoulli numbers and Euler values at zero", _eq50_cases, rc.check_eq50),
        S("s3s4", "special s3 and s4 displays", _s3s4_cases, rc.check_s3_s4_specials),
        S("assoc", "two-sum, Hardy-Berndt and Bernoulli forms agree", _assoc_cases, rc.check_association),
        S("eq47c", "generalized Dedekind reciprocity", dedekind_grid, rc.check_dedekind_reciprocity),
        S("eq47c-observed", "observed closed form of the Dedekind left side", dedekind_grid,
          rc.check_dedekind_observed),
        S("dedekind-period", "T_r(c + 2d, d) = T_r(c, d)", _dedekind_period_cases, _dedekind_period),
        S("eq51", "Hardy-Berndt reciprocity", hardy_grid, rc.check_hardy_reciprocity),
        S("s-empty", "s3(d, 1) = s4(d, 1) = 0", _s_empty_cases, _s_empty),
        S("eq16", "Laplace transform closed vs piecewise numeric", _eq16_cases, _eq16),
        S("laplace-moment", "differentiated Laplace transform vs moments", _moment_cases, _moment),
    ]
    return {s.id: s for s in suites}


SUITES = _registry()
ALIASES = {"thm1-closed": "eq31", "thm2-closed": "eq33"}


def resolve(ident: str) -> list[Suite]:
    if ident == "all":
        return list(SUITES.values())
    ident = ALIASES.get(ident, ident)
    if ident not in SUITES:
        raise KeyError(ident)
    return [SUITES[ident]]


def threads() -> int:
    try:
        return max(1, int(os.environ.get("BEPOLY_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(suite: Suite, overrides: Overrides | None = None) -> Iterator[VerificationReport]:
    """Reports in grid order; cases may be evaluated on a thread pool."""
    ov = overrides or {}
    cases = list(suite.cases(ov))
    n = threads()

    def one(args):
        out = suite.check(*args)
        return out if isinstance(out, list) else [out]

    if n > 1:
        with ThreadPoolExecutor(n) as pool:
            for batch in pool.map(one, cases):
                yield from batch
    else:
        for args in cases:
            yield from one(args)

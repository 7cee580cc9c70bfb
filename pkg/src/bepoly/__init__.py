"""Exact higher-order Bernoulli and Euler polynomials and identity checks."""
from __future__ import annotations

from .exact import Poly, Series, format_rat, parse_rat
from .report import VerificationReport
from .special import B, E, Family, PolySpec, bernoulli_number, euler_number, higher_order_poly

__all__ = [
    "B", "E", "Family", "Poly", "PolySpec", "Series", "VerificationReport",
    "bernoulli_number", "euler_number", "format_rat", "higher_order_poly", "parse_rat",
]
__version__ = "0.1.0"

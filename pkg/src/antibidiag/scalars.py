"""Scalar backends and tolerance policy.

Two interchangeable backends: hardware float64 and exact rationals
(``fractions.Fraction``, normalized gcd-reduced by construction).  A backend is
chosen once per pipeline; mixing backends inside one solve is an error caught
by the conversion helpers.  Square roots exist only in the floating backend;
the rational backend defers them to reporting time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BackendUnsupported


@dataclass(frozen=True)
class TolerancePolicy:
    """Comparison and root-bracketing tolerances (floating backend only)."""

    eq_abs: float = 1e-10
    eq_rel: float = 1e-10
    root_tol: float = 1e-13

    def __post_init__(self):
        if self.eq_abs <= 0 or self.eq_rel <= 0 or self.root_tol <= 0:
            raise ValueError("all tolerances must be strictly positive")


@dataclass(frozen=True)
class Backend:
    """A scalar field with a conversion rule and a comparison policy."""

    name: str
    exact: bool
    policy: TolerancePolicy = field(default_factory=TolerancePolicy)

    def convert(self, x):
        """Coerce a number (or numeric string) into this backend's scalar type."""
        if self.exact:
            if isinstance(x, float) or isinstance(x, str):
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, Fraction):
            return float(x)
        return float(x)

    def approx_equal(self, x, y) -> bool:
        """Exact equality (rational) or mixed abs/rel band (floating)."""
        if self.exact:
            return x == y
        return abs(x - y) <= self.policy.eq_abs + self.policy.eq_rel * max(abs(x), abs(y))

    def is_zero(self, x, scale=1) -> bool:
        if self.exact:
            return x == 0
        return abs(x) <= self.policy.eq_abs * max(1.0, abs(scale))

    def sqrt(self, x):
        if self.exact:
            raise BackendUnsupported("rational backend has no square root")
        if x < 0:
            raise ValueError("sqrt of negative value")
        return math.sqrt(x)

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0


def float64(policy: TolerancePolicy | None = None) -> Backend:
    return Backend("float64", exact=False, policy=policy or TolerancePolicy())


def rational(policy: TolerancePolicy | None = None) -> Backend:
    # Tolerances are carried but ignored: comparisons are exact.
    return Backend("rational", exact=True, policy=policy or TolerancePolicy())


def approx_equal(x, y, policy: TolerancePolicy) -> bool:
    """Standalone comparison; exact when both operands are exact rationals."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    return abs(x - y) <= policy.eq_abs + policy.eq_rel * max(abs(x), abs(y))

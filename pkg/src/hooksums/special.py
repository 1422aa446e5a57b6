"""Real log-gamma, gamma, and logarithms of big integers.

log_gamma uses the Lanczos approximation with g = 7 and the nine
coefficients published by P. Godfrey (the set reproduced in Numerical
Recipes, 3rd ed., and in most open-source gamma routines). Over (0, 50]
its absolute error in log space stays below 1e-13.
"""
from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["log_gamma", "gamma", "log_big", "log_factorial", "LOG_SQRT_2PI"]

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LN2 = math.log(2.0)


def _lanczos_log(x: float) -> float:
    # valid for x >= 0.5
    y = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (y + i)
    t = y + _LANCZOS_G + 0.5
    return LOG_SQRT_2PI + (y + 0.5) * math.log(t) - t + math.log(acc)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for real x > 0."""
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"log_gamma needs a finite x > 0, got {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if x < 0.5:
        # Gamma(x) = Gamma(x + 1) / x keeps us off the reflection formula
        return _lanczos_log(x + 1.0) - math.log(x)
    return _lanczos_log(x)


def gamma(x: float) -> float:
    """Gamma(x) for real x > 0; OverflowError past the float range (x > ~171.6)."""
    return math.exp(log_gamma(x))


def log_factorial(m: int) -> float:
    if m < 0:
        raise DomainError(f"factorial of negative number {m}")
    return log_gamma(m + 1.0)


def log_big(b: int) -> float:
    """ln(b) for a positive integer of any size.

    Uses the bit length plus the leading 64 bits, so the relative error is that
    of one float log (about 1e-16) however large ``b`` is.
    """
    b = int(b)
    if b <= 0:
        raise DomainError(f"log_big needs b >= 1, got {b}")
    shift = b.bit_length() - 64
    if shift <= 0:
        return math.log(b)
    lead = b >> shift
    return math.log(lead) + shift * _LN2

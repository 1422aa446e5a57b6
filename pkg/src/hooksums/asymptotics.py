"""Closed-form asymptotics of hook sums and of single SYT counts.

Everything is assembled in log space. A growth law a * n**(-g) * b**n is an
:class:`AsymptoticForm` holding (ln a, g, ln b); it is exponentiated only
when a caller evaluates it.

Notation: ``k``, ``l`` are the hook bounds and ``z`` is half the power, so
the hook sum of (f^lambda)**(2z) grows like (k + l)**(2 z n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateShape, DomainError
from .partitions import HookDecomposition
from .special import LOG_SQRT_2PI, log_factorial, log_gamma

__all__ = [
    "AsymptoticForm",
    "ScaledCoordinates",
    "g_hook",
    "log_a_hook",
    "log_a_hook_half",
    "strip_asymptotics",
    "c_theta",
    "psi_selberg",
    "selberg_I",
    "scaled_I_k",
    "full_I",
    "full_I_product",
    "full_I_closed",
    "gaussian_J",
    "hook_asymptotic",
    "coords_from_decomposition",
    "strip_coords",
    "single_f_hook_estimate",
    "single_f_strip_estimate",
    "log_vandermonde",
    "ConsistencyError",
]

LOG_PI = math.log(math.pi)
SELF_CHECK_TOL = 1e-12


class ConsistencyError(AssertionError):
    """Two assembly routes for the same constant disagree."""


@dataclass(frozen=True)
class AsymptoticForm:
    """a * n**(-g) * exp(n * log_base), stored as (log_a, g, log_base)."""

    log_a: float
    g: float
    log_base: float

    @property
    def a(self) -> float:
        return math.exp(self.log_a)

    @property
    def base(self) -> float:
        return math.exp(self.log_base)

    def log_eval(self, n: float) -> float:
        return self.log_a - self.g * math.log(n) + n * self.log_base

    def evaluate(self, n: float) -> float:
        """Linear-scale value; raises OverflowError if it leaves the float range."""
        return math.exp(self.log_eval(n))


@dataclass(frozen=True)
class ScaledCoordinates:
    """Centred, sqrt(n_bar)-scaled row lengths of nu (alpha) and mu (beta).

    ``a`` and ``b`` are the per-strip coordinates obtained from alpha and beta
    through the large-n limit maps, for use with the strip estimator.
    """

    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    alpha_sum: float
    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()


def _check_hook(k, l, z=None, *, strip_ok=False):
    lo_l = 0 if strip_ok else 1
    if int(k) != k or int(l) != l or k < 1 or l < lo_l:
        raise DomainError(f"need integers k >= 1, l >= {lo_l}; got k={k}, l={l}")
    if z is not None and not z > 0:
        raise DomainError(f"z must be positive, got {z}")


def _log_gamma_products(k: int, l: int, z: float) -> float:
    # ln[ Gamma(1+z)^(-k-l) * prod_i Gamma(1 + z i) * prod_j Gamma(1 + z j) ]
    total = -(k + l) * log_gamma(1.0 + z)
    total += sum(log_gamma(1.0 + z * i) for i in range(1, k + 1))
    total += sum(log_gamma(1.0 + z * j) for j in range(1, l + 1))
    return total


def g_hook(k: int, l: int, z: float, *, strip_ok: bool = False) -> float:
    """Exponent g with S ~ a n^(-g) (k+l)^(2zn).

    ``strip_ok`` admits l = 0, where the expression reduces to the strip law.
    """
    _check_hook(k, l, z, strip_ok=strip_ok)
    return 0.5 * (z * (k * (k + 1) + l * (l + 1) - 2) - (k + l - 1))


def log_a_hook(k: int, l: int, z: float, *, strip_ok: bool = False) -> float:
    """ln a(k, l, 2z), evaluated factor by factor from the expanded product."""
    _check_hook(k, l, z, strip_ok=strip_ok)
    k, l = max(k, l), min(k, l)  # fixed summation order makes (k, l) <-> (l, k) bit-exact
    m = k + l
    log_m = math.log(m)
    quad = k * (k - 1) + l * (l - 1)
    # [c(k,l)]^(2z)
    bracket = -(m - 1) * LOG_SQRT_2PI - k * l * math.log(2.0) + 0.5 * (k * k + l * l) * log_m
    total = 2.0 * z * bracket
    total -= 0.5 * (z * quad + m) * log_m
    total -= log_factorial(k) + log_factorial(l)
    total += 0.5 * (math.log(z) - LOG_PI)
    total += m * LOG_SQRT_2PI
    total -= 0.5 * (z * quad + m) * math.log(2.0 * z)
    total += _log_gamma_products(k, l, z)
    return total


def log_a_hook_half(k: int, l: int) -> float:
    """ln a(k, l, 1): the 2z = 1 product with Gamma(1 + i/2) factors."""
    _check_hook(k, l)
    m = k + l
    total = -(k * l - m) * math.log(2.0)
    total -= 0.5 * m * LOG_PI
    total += 0.25 * (k * (k - 1) + l * (l - 1)) * math.log(m)
    total -= log_factorial(k) + log_factorial(l)
    total += sum(log_gamma(1.0 + i / 2.0) for i in range(1, k + 1))
    total += sum(log_gamma(1.0 + j / 2.0) for j in range(1, l + 1))
    return total


def strip_asymptotics(k: int, z: float) -> AsymptoticForm:
    """Growth law of the strip sum over H(k, 0; n): a(k, 2z) n^(-g(k, z)) k^(2zn)."""
    if int(k) != k or k < 1:
        raise DomainError(f"need an integer k >= 1, got {k}")
    if not z > 0:
        raise DomainError(f"z must be positive, got {z}")
    log_k = math.log(k)
    g = 0.5 * (z * (k * k + k - 2) - (k - 1))
    log_a = 2.0 * z * (-(k - 1) * LOG_SQRT_2PI + 0.5 * k * k * log_k)
    log_a -= 0.5 * (z * k * (k - 1) + k) * log_k
    log_a -= log_factorial(k)
    log_a += 0.5 * (math.log(z) - LOG_PI)
    log_a += 0.5 * k * math.log(2.0 * math.pi)
    log_a -= 0.5 * (z * k * (k - 1) + k) * math.log(2.0 * z)
    log_a -= k * log_gamma(1.0 + z)
    log_a += sum(log_gamma(1.0 + z * j) for j in range(1, k + 1))
    return AsymptoticForm(log_a, g, 2.0 * z * log_k)


def c_theta(k: int, l: int) -> tuple[float, float]:
    """(ln c(k, l), theta(k, l)) of the single-shape law f ~ c D D e^(...) n^(-theta) (k+l)^n."""
    _check_hook(k, l)
    m = k + l
    log_c = -(m - 1) * LOG_SQRT_2PI - k * l * math.log(2.0) + 0.5 * (k * k + l * l) * math.log(m)
    theta = (k * (k + 1) + l * (l + 1) - 2) / 4.0
    return log_c, theta


def psi_selberg(s: int, beta: float) -> float:
    """ln Psi_s(beta) = ln of the Gaussian |Vandermonde|^beta integral over R^s (Mehta)."""
    if int(s) != s or s < 1:
        raise DomainError(f"need an integer s >= 1, got {s}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    total = s * LOG_SQRT_2PI
    total -= (s / 2.0 + beta * s * (s - 1) / 4.0) * math.log(beta)
    total -= s * log_gamma(1.0 + beta / 2.0)
    total += sum(log_gamma(1.0 + beta * j / 2.0) for j in range(1, s + 1))
    return total


def selberg_I(s: int, beta: float) -> float:
    """ln of the zero-sum, ordered-chamber integral of [|D_s(x)| e^(-|x|^2/2)]^beta.

    The measure is dx_1 ... dx_{s-1} (the last coordinate is eliminated by
    the zero-sum constraint).
    """
    log_psi = psi_selberg(s, beta)
    return (
        -log_factorial(s)
        - 0.5 * math.log(s)
        + 0.5 * (math.log(beta) - math.log(2.0 * math.pi))
        + log_psi
    )


def scaled_I_k(k: int, l: int, z: float) -> float:
    """ln I_k^(2z): the k-block integral with Gaussian weight e^(-(k+l)/2 |x|^2).

    Evaluated from its expanded product; it equals
    (1/(k+l))^((k(k-1)z + k - 1)/2) * exp(selberg_I(k, 2z)).
    """
    _check_hook(k, l, z)
    m = k + l
    total = -0.5 * (k * (k - 1) * z + k - 1) * math.log(m)
    total -= log_factorial(k)
    total -= 0.5 * math.log(k)
    total += 0.5 * (math.log(z) - LOG_PI)
    total += k * LOG_SQRT_2PI
    total -= (k / 2.0 + z * k * (k - 1) / 2.0) * math.log(2.0 * z)
    total -= k * log_gamma(1.0 + z)
    total += sum(log_gamma(1.0 + z * j) for j in range(1, k + 1))
    return total


def gaussian_J(k: int, l: int, z: float) -> float:
    """J = integral of exp(-z (k+l)^2 u^2 / (k l)) du = sqrt(k l pi / (z (k+l)^2))."""
    _check_hook(k, l, z)
    return math.sqrt(k * l * math.pi / (z * (k + l) ** 2))


def full_I_product(k: int, l: int, z: float) -> float:
    """ln I(k, l, 2z) as ln J + ln I_k + ln I_l."""
    return math.log(gaussian_J(k, l, z)) + scaled_I_k(k, l, z) + scaled_I_k(l, k, z)


def full_I_closed(k: int, l: int, z: float, *, strip_ok: bool = False) -> float:
    """ln I(k, l, 2z) from the fully cancelled closed form."""
    _check_hook(k, l, z, strip_ok=strip_ok)
    k, l = max(k, l), min(k, l)
    m = k + l
    quad = k * (k - 1) + l * (l - 1)
    total = -0.5 * (z * quad + m) * math.log(m)
    total -= log_factorial(k) + log_factorial(l)
    total += 0.5 * (math.log(z) - LOG_PI)
    total += m * LOG_SQRT_2PI
    total -= 0.5 * (z * quad + m) * math.log(2.0 * z)
    total += _log_gamma_products(k, l, z)
    return total


def full_I(k: int, l: int, z: float) -> float:
    """ln I(k, l, 2z); the product and cancelled forms must agree to 1e-12."""
    product = full_I_product(k, l, z)
    closed = full_I_closed(k, l, z)
    if abs(product - closed) > SELF_CHECK_TOL:
        raise ConsistencyError(
            f"I({k},{l},{2 * z}): product form {product!r} != closed form {closed!r}"
        )
    return closed


def hook_asymptotic(k: int, l: int, z: float) -> AsymptoticForm:
    """Growth law of the hook sum of (f^lambda)^(2z) over H(k, l; n).

    Cross-checks the expanded (a, g) against a = c^(2z) I and
    g = 2z theta - (k + l - 1)/2 when assertions are enabled.
    """
    log_a = log_a_hook(k, l, z)
    g = g_hook(k, l, z)
    if __debug__:
        log_c, theta = c_theta(k, l)
        assembled_a = 2.0 * z * log_c + full_I(k, l, z)
        assembled_g = 2.0 * z * theta - (k + l - 1) / 2.0
        if abs(log_a - assembled_a) > SELF_CHECK_TOL or abs(g - assembled_g) > SELF_CHECK_TOL:
            raise ConsistencyError(
                f"({k},{l},z={z}): expanded (ln a, g) = ({log_a!r}, {g!r}), "
                f"assembled = ({assembled_a!r}, {assembled_g!r})"
            )
    return AsymptoticForm(log_a, g, 2.0 * z * math.log(k + l))


def log_vandermonde(x: Sequence[float]) -> float:
    """ln prod_{i<j} (x_i - x_j) for strictly decreasing x; 0 for fewer than two entries."""
    total = 0.0
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            d = x[i] - x[j]
            if d == 0:
                raise DegenerateShape(f"coordinates {i} and {j} coincide ({x[i]!r})")
            if d < 0:
                raise DomainError(f"coordinates must be decreasing, got {tuple(x)}")
            total += math.log(d)
    return total


def coords_from_decomposition(d: HookDecomposition) -> ScaledCoordinates:
    """alpha_i = (nu_i - n_bar/(k+l)) / sqrt(n_bar), beta_j likewise for mu."""
    k, l = d.k, d.l
    n_bar = d.n_bar
    if n_bar < 1:
        raise DomainError("coordinates need n_bar >= 1")
    m = k + l
    root = math.sqrt(n_bar)
    centre = n_bar / m
    alpha = tuple((d.nu.part(i) - centre) / root for i in range(1, k + 1))
    beta = tuple((d.mu.part(j) - centre) / root for j in range(1, l + 1))
    alpha_sum = math.fsum(alpha)
    a = tuple((x - alpha_sum / k) * math.sqrt(m / k) for x in alpha) if k else ()
    b = tuple((y + alpha_sum / l) * math.sqrt(m / l) for y in beta) if l else ()
    return ScaledCoordinates(alpha, beta, alpha_sum, a, b)


def strip_coords(parts: Sequence[int], k: int) -> tuple[float, ...]:
    """a_i = (nu_i - n/k) / sqrt(n) for a partition with at most k rows."""
    n = sum(parts)
    if len(parts) > k:
        raise DomainError(f"{tuple(parts)} has more than {k} rows")
    root = math.sqrt(n)
    padded = list(parts) + [0] * (k - len(parts))
    return tuple((x - n / k) / root for x in padded)


def single_f_hook_estimate(
    d: HookDecomposition, coords: ScaledCoordinates | None = None, n: int | None = None
) -> float:
    """ln of c D_k(alpha) D_l(beta) exp(-(k+l)/2 (|alpha|^2 + |beta|^2)) n^(-theta) (k+l)^n."""
    k, l = d.k, d.l
    log_c, theta = c_theta(k, l)
    if coords is None:
        coords = coords_from_decomposition(d)
    if n is None:
        n = d.n
    sq = math.fsum(x * x for x in coords.alpha) + math.fsum(y * y for y in coords.beta)
    return (
        log_c
        + log_vandermonde(coords.alpha)
        + log_vandermonde(coords.beta)
        - 0.5 * (k + l) * sq
        - theta * math.log(n)
        + n * math.log(k + l)
    )


def single_f_strip_estimate(k: int, a_coords: Sequence[float], n: int) -> float:
    """ln of gamma_k D_k(a) exp(-(k/2)|a|^2) n^(-(k-1)(k+2)/4) k^n for nu in H(k, 0; n)."""
    if int(k) != k or k < 1 or len(a_coords) != k:
        raise DomainError(f"need k >= 1 and k coordinates, got k={k}, {tuple(a_coords)}")
    log_gamma_k = -(k - 1) * LOG_SQRT_2PI + 0.5 * k * k * math.log(k)
    sq = math.fsum(x * x for x in a_coords)
    return (
        log_gamma_k
        + log_vandermonde(a_coords)
        - 0.5 * k * sq
        - (k - 1) * (k + 2) / 4.0 * math.log(n)
        + n * math.log(k)
    )

"""Independent numerical checks of the closed forms.

Monte Carlo integration of the Vandermonde-Gaussian integrals, convergence
tables of exact hook sums against their growth laws, and single-shape
convergence of f^lambda against its estimate.

Monte Carlo measure convention. On the zero-sum hyperplane of R^s the
integrals use dx_1 ... dx_{s-1}, i.e. the surface measure divided by
sqrt(s). Points are sampled as x = (g - mean(g)) * scale with g standard
normal, which has density (2 pi scale^2)^(-(s-1)/2) exp(-|x|^2 / (2 scale^2))
with respect to surface measure. The ordered chamber is handled by
integrating |D|^beta over the whole hyperplane and dividing by the
chamber count (s! or k! l!).
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .asymptotics import (
    coords_from_decomposition,
    full_I,
    gaussian_J,
    hook_asymptotic,
    selberg_I,
    single_f_hook_estimate,
    single_f_strip_estimate,
    strip_coords,
)
from .errors import DomainError, UnsupportedClosedForm
from .exact import binomial_sum_s21, f_lambda, hook_sum_exact, s11_closed, s21_closed
from .partitions import HookDecomposition, HookShape, Partition, decompose, reassemble
from .special import log_big, log_factorial

__all__ = [
    "McEstimate",
    "RatioRow",
    "CHUNK_SIZE",
    "mc_selberg",
    "mc_full_I",
    "gaussian_J",
    "ratio_table",
    "lhs_221",
    "balanced_hook_partition",
    "balanced_strip_partition",
    "single_f_convergence",
    "CLOSED_FORMS",
    "DEFAULT_WORK_LIMIT",
]

CHUNK_SIZE = 1 << 16
DEFAULT_WORK_LIMIT = 10**7
CLOSED_FORMS = {(1, 1, 1), (1, 1, 2), (2, 1, 1)}


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int

    def z_score(self, target: float) -> float:
        """(mean - target) / std_error; 0 or inf when the estimator has no spread."""
        diff = self.mean - target
        if self.std_error > 0:
            return diff / self.std_error
        # zero-variance estimator: only float rounding separates mean from target
        return 0.0 if abs(diff) <= 1e-12 * abs(target) else math.inf


@dataclass(frozen=True)
class RatioRow:
    n: int
    exact_log: float
    asym_log: float
    ratio: float
    lhs: float | None = None


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("HOOKSUM_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _mc_weights(
    dim: int, split: int, beta: float, scale: float, samples: int,
    seed: np.random.SeedSequence, workers: int | None,
) -> tuple[float, float]:
    """Mean and standard error of (|D_split| |D_rest|)^beta at zero-sum Gaussian points.

    Chunk boundaries and per-chunk seeds depend only on ``samples`` and
    ``seed``; chunk sums are combined in chunk order, so the result is the
    same for any worker count.
    """
    n_chunks = -(-samples // CHUNK_SIZE)
    child = seed.spawn(n_chunks)

    def run(i: int) -> tuple[float, float]:
        rng = np.random.default_rng(child[i])
        m = min(CHUNK_SIZE, samples - i * CHUNK_SIZE)
        g = rng.standard_normal((m, dim))
        x = (g - g.mean(axis=1, keepdims=True)) * scale
        return kernels.vandermonde_power_sums(x, split, beta)

    nw = _workers(workers)
    if nw == 1:
        parts = [run(i) for i in range(n_chunks)]
    else:
        with ThreadPoolExecutor(max_workers=nw) as pool:
            parts = list(pool.map(run, range(n_chunks)))
    total = total_sq = 0.0
    for s1, s2 in parts:
        total += s1
        total_sq += s2
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return mean, math.sqrt(var / samples)


def _seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed))


def _selberg_mc(s: int, beta: float, samples: int, seed, workers) -> tuple[float, float]:
    scale = 1.0 / math.sqrt(beta)
    mean, se = _mc_weights(s, s, beta, scale, samples, _seed_sequence(seed), workers)
    const = math.exp(
        0.5 * (s - 1) * math.log(2.0 * math.pi / beta) - 0.5 * math.log(s) - log_factorial(s)
    )
    return mean * const, se * const


def mc_selberg(
    s: int, beta: float, samples: int = 10**6, seed: int = 0, *, workers: int | None = None
) -> McEstimate:
    """Monte Carlo estimate of exp(selberg_I(s, beta)).

    Samples the zero-sum hyperplane with a Gaussian of variance 1/beta, which
    leaves |D_s(x)|^beta as the importance weight.
    """
    if int(s) != s or not 2 <= s <= 5:
        raise DomainError(f"mc_selberg supports 2 <= s <= 5, got {s}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if samples < 10_000:
        raise DomainError(f"need at least 1e4 samples, got {samples}")
    mean, se = _selberg_mc(int(s), float(beta), int(samples), seed, workers)
    return McEstimate(mean, se, int(samples), int(seed))


def mc_full_I(
    k: int, l: int, z: float, samples: int = 10**6, seed: int = 0, *,
    method: str = "direct", workers: int | None = None,
) -> McEstimate:
    """Monte Carlo estimate of I(k, l, 2z) = exp(full_I(k, l, z)).

    ``method="direct"`` samples the (k+l-1)-dimensional domain at once.
    ``method="factorized"`` integrates out the block-sum coordinate exactly
    (the Gaussian J) and estimates the two block integrals separately.
    """
    if int(k) != k or int(l) != l or k < 1 or l < 1 or k + l > 6:
        raise DomainError(f"need k, l >= 1 and k + l <= 6, got ({k}, {l})")
    if not z > 0:
        raise DomainError(f"z must be positive, got {z}")
    if samples < 10_000:
        raise DomainError(f"need at least 1e4 samples, got {samples}")
    k, l, samples = int(k), int(l), int(samples)
    m = k + l
    ss = _seed_sequence(seed)
    if method == "direct":
        scale = 1.0 / math.sqrt(2.0 * z * m)
        mean, se = _mc_weights(m, k, 2.0 * z, scale, samples, ss, workers)
        const = math.exp(
            0.5 * (m - 1) * math.log(math.pi / (z * m))
            - 0.5 * math.log(m)
            - log_factorial(k)
            - log_factorial(l)
        )
        return McEstimate(mean * const, se * const, samples, int(seed))
    if method != "factorized":
        raise DomainError(f"unknown method {method!r}")
    value = gaussian_J(k, l, z)
    rel_var = 0.0
    for block, seed_block in zip((k, l), ss.spawn(2)):
        if block == 1:
            continue  # a single point: the block integral is exactly 1
        est, est_se = _selberg_mc(block, 2.0 * z, samples, seed_block, workers)
        value *= math.exp(-0.5 * (block * (block - 1) * z + block - 1) * math.log(m)) * est
        rel_var += (est_se / est) ** 2
    return McEstimate(value, abs(value) * math.sqrt(rel_var), samples, int(seed))


def lhs_221(n: int) -> float:
    """2 sqrt(n) / 3^n * sum_{j>=1} C(n, j) C(n-j, j); tends to sqrt(3/pi)."""
    if n < 2:
        raise DomainError(f"lhs_221 needs n >= 2, got {n}")
    # int / int true division is correctly rounded for any size
    return 2.0 * math.sqrt(n) * (binomial_sum_s21(n) / 3**n)


def _exact_closed(k: int, l: int, p: int, n: int) -> int:
    if (k, l) == (1, 1):
        return s11_closed(p, n)
    return s21_closed(n)


def ratio_table(
    k: int, l: int, p: int, n_list: Iterable[int], mode: str = "enumerate",
    *, work_limit: int = DEFAULT_WORK_LIMIT, workers: int | None = None,
) -> list[RatioRow]:
    """Exact hook sum over its growth law, for each n (rows sorted by n).

    ``mode="closed_form"`` takes the exact value from a known formula
    (only for (k, l, p) in CLOSED_FORMS); ``mode="enumerate"`` sums over the
    hook and raises WorkLimitExceeded past ``work_limit`` partitions.
    For (2, 1, 1) each row also carries lhs_221(n).
    """
    if mode not in ("enumerate", "closed_form"):
        raise DomainError(f"unknown mode {mode!r}")
    if mode == "closed_form" and (k, l, p) not in CLOSED_FORMS:
        raise UnsupportedClosedForm(f"no closed form for (k, l, p) = ({k}, {l}, {p})")
    form = hook_asymptotic(k, l, p / 2.0)
    shape = HookShape(k, l)
    rows = []
    for n in sorted(set(int(x) for x in n_list)):
        if n < 1:
            raise DomainError(f"n must be positive, got {n}")
        if mode == "closed_form":
            exact = _exact_closed(k, l, p, n)
        else:
            exact = hook_sum_exact(shape, p, n, work_limit=work_limit, workers=workers)
        exact_log = log_big(exact)
        asym_log = form.log_eval(n)
        # exact / (k+l)^(pn) is a correctly rounded big-int quotient
        scaled = exact / (k + l) ** (p * n)
        if 0.0 < scaled < math.inf:
            ratio = scaled * math.exp(form.g * math.log(n) - form.log_a)
        else:
            ratio = math.exp(exact_log - asym_log)
        lhs = lhs_221(n) if (k, l, p) == (2, 1, 1) and n >= 2 else None
        rows.append(RatioRow(n, exact_log, asym_log, ratio, lhs))
    return rows


def _round_preserving_sum(ideal: Sequence[float], total: int) -> list[int]:
    # floor everything, hand leftover units to the largest fractional parts;
    # ties go to the earlier entry
    floors = [math.floor(x) for x in ideal]
    left = total - sum(floors)
    order = sorted(range(len(ideal)), key=lambda i: (-(ideal[i] - floors[i]), i))
    for i in order[:left]:
        floors[i] += 1
    return floors


def _spread(count: int, spread: float) -> list[float]:
    return [spread * ((count - 1) / 2.0 - i) for i in range(count)]


def balanced_hook_partition(k: int, l: int, n: int, spread: float = 1.0) -> Partition:
    """Hook partition with nu, mu rows at n_bar/(k+l) + spread * offset * sqrt(n_bar).

    Offsets are centred and equally spaced within each block, so the scaled
    coordinates sit near ``spread`` times (i-th offset) and the Vandermonde
    factors stay away from zero. For k = l = 1 the shape is the balanced hook.
    """
    n_bar = n - k * l
    if n_bar < 1:
        raise DomainError(f"n = {n} does not exceed the {k}x{l} rectangle")
    root = math.sqrt(n_bar)
    centre = n_bar / (k + l)
    ideal = [centre + a * root for a in _spread(k, spread) + _spread(l, spread)]
    if min(ideal) < 0:
        raise DomainError(f"n = {n} too small for spread {spread}")
    rows = _round_preserving_sum(ideal, n_bar)
    nu, mu = rows[:k], rows[k:]
    if nu != sorted(nu, reverse=True) or mu != sorted(mu, reverse=True):
        raise DomainError(f"n = {n} too small for spread {spread}")
    d = HookDecomposition(
        Partition([x for x in nu if x]), Partition([x for x in mu if x]), k, l
    )
    return reassemble(d)


def balanced_strip_partition(k: int, n: int, spread: float = 1.0) -> Partition:
    """At most k rows, nu_i = n/k + spread * offset_i * sqrt(n), rounded to sum n."""
    ideal = [n / k + a * math.sqrt(n) for a in _spread(k, spread)]
    if min(ideal) < 0:
        raise DomainError(f"n = {n} too small for spread {spread}")
    rows = _round_preserving_sum(ideal, n)
    return Partition([x for x in rows if x])


def single_f_convergence(
    k: int, l: int, n_list: Iterable[int], spread: float = 1.0
) -> list[tuple[int, float]]:
    """(n, f^lambda / estimate) along the shapes built by the balanced constructors.

    l = 0 selects the strip estimator on H(k, 0; n).
    """
    out = []
    for n in n_list:
        if l == 0:
            lam = balanced_strip_partition(k, n, spread)
            est = single_f_strip_estimate(k, strip_coords(lam, k), n)
        else:
            lam = balanced_hook_partition(k, l, n, spread)
            d = decompose(lam, HookShape(k, l))
            est = single_f_hook_estimate(d, coords_from_decomposition(d), n)
        out.append((n, math.exp(log_big(f_lambda(lam)) - est)))
    return out


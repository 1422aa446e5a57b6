"""Exact SYT counts and exact hook sums with Python big integers.

``f_lambda`` counts standard Young tableaux through the hook-length formula;
``f_lambda_oracle`` recomputes the same number by corner removal so the two
can be checked against each other.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from ._backend import kernels
from .errors import BoundExceeded, DomainError, UnsupportedPower, WorkLimitExceeded
from .partitions import HookShape, Partition, count_hook, enumerate_hook, first_parts

__all__ = [
    "hook_lengths",
    "f_lambda",
    "f_lambda_oracle",
    "hook_sum_exact",
    "s11_closed",
    "s21_closed",
    "binomial_sum_s21",
    "motzkin_identity_check",
    "IdentityCheck",
    "ORACLE_BOUND",
]

ORACLE_BOUND = 30


def hook_lengths(p) -> tuple[tuple[int, ...], ...]:
    """Hook length of every cell, row by row."""
    return tuple(tuple(row) for row in kernels.hook_lengths(tuple(p)))


def f_lambda(p) -> int:
    """Number of standard Young tableaux of shape ``p``.

    n!/prod(h) is evaluated on prime exponents (Legendre's formula minus the
    factorised hook lengths), so neither n! nor the hook product is ever
    formed. A negative exponent means the division was not exact and raises
    ArithmeticError.
    """
    return kernels.f_lambda(tuple(p))


@lru_cache(maxsize=None)
def _corner_recursion(parts: tuple) -> int:
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, x in enumerate(parts):
        # removable corner: last row, or strictly longer than the row below
        if i == len(parts) - 1 or parts[i + 1] < x:
            shorter = parts[:i] + ((x - 1,) if x > 1 else ()) + parts[i + 1:]
            total += _corner_recursion(shorter)
    return total


def f_lambda_oracle(p, bound: int = ORACLE_BOUND) -> int:
    """f^lambda from f^lambda = sum over corners c of f^(lambda - c), memoised."""
    parts = tuple(Partition(p))
    if sum(parts) > bound:
        raise BoundExceeded(f"oracle bound is n <= {bound}, got n = {sum(parts)}")
    return _corner_recursion(parts)


def _chunk_sum(args) -> int:
    k, l, n, power, first = args
    shape = HookShape(k, l)
    f = kernels.f_lambda
    if power == 1:
        return sum(f(lam) for lam in enumerate_hook(shape, n, first))
    return sum(f(lam) ** power for lam in enumerate_hook(shape, n, first))


def _default_workers() -> int:
    env = os.environ.get("HOOKSUM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def hook_sum_exact(
    shape: HookShape,
    p: int,
    n: int,
    *,
    workers: int | None = None,
    work_limit: int | None = None,
) -> int:
    """S_{k,l}^{(p)}(n): the sum of (f^lambda)**p over H(k, l; n).

    The enumeration is split into chunks by largest part; chunk sums are
    added in stream order, so the value is independent of ``workers``.
    ``workers`` defaults to ``HOOKSUM_THREADS`` (or 1) and uses processes,
    since big-integer arithmetic holds the GIL.
    """
    if p < 1 or int(p) != p:
        raise DomainError(f"power must be a positive integer, got {p}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if work_limit is not None:
        needed = count_hook(shape, n)
        if needed > work_limit:
            raise WorkLimitExceeded(needed, work_limit)
    jobs = [(shape.k, shape.l, n, int(p), first) for first in first_parts(shape, n)]
    workers = _default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(jobs) < 2:
        partials = [_chunk_sum(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_chunk_sum, jobs))
    total = 0
    for part in partials:
        total += part
    return total


def s11_closed(p: int, n: int) -> int:
    """Closed forms of S_{1,1}: 2^(n-1) for p = 1, C(2(n-1), n-1) for p = 2."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if p == 1:
        return 2 ** (n - 1)
    if p == 2:
        return math.comb(2 * (n - 1), n - 1)
    raise UnsupportedPower(f"closed form of S_(1,1) known only for p in (1, 2), got {p}")


def _motzkin_rhs(n: int) -> Fraction:
    # both sums of the two-sum expression; empty when the upper bound < lower
    first = sum(math.comb(n - r, (n - r) // 2) * math.comb(n, r) for r in range(n))
    whole, frac = 0, Fraction(0)
    for j in range(1, n // 2):
        # n!/(j!(j+1)!(n-2j-2)!) = C(n, j) C(n-j, j+1) (n-2j-1)
        num = math.comb(n, j) * math.comb(n - j, j + 1) * (n - 2 * j - 1)
        q, r = divmod(num, (n - j - 1) * (n - j))
        if r:
            frac += Fraction(num, (n - j - 1) * (n - j))
        else:
            whole += q
    return first + whole + frac


def s21_closed(n: int) -> int:
    """S_{2,1}^{(1)}(n) from the four-term binomial formula.

    Terms are accumulated as exact fractions; the final value must be an
    integer and ArithmeticError is raised otherwise.
    """
    if n < 2:
        raise DomainError(f"s21_closed needs n >= 2, got {n}")
    value = _motzkin_rhs(n) / 4 + 1
    if value.denominator != 1:
        raise ArithmeticError(f"s21 formula is not integral at n={n}: {value}")
    return value.numerator


def binomial_sum_s21(n: int) -> int:
    """sum_{j >= 1} C(n, j) C(n - j, j), the central trinomial coefficient minus 1.

    Consecutive terms n!/(j! j! (n-2j)!) differ by (n-2j)(n-2j-1)/(j+1)^2,
    and every term is an integer, so the integer division is exact.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    term, total = 1, 0
    for j in range(n // 2):
        term = term * (n - 2 * j) * (n - 2 * j - 1) // ((j + 1) * (j + 1))
        total += term
    return total


class IdentityCheck(NamedTuple):
    holds: bool
    lhs: int
    rhs: Fraction


def motzkin_identity_check(n: int) -> IdentityCheck:
    """Both sides of 2 sum_j C(n,j)C(n-j,j) = (two-sum expression), exactly."""
    if n < 2:
        raise DomainError(f"identity stated for n >= 2, got {n}")
    lhs = 2 * sum(math.comb(n, j) * math.comb(n - j, j) for j in range(1, n // 2 + 1))
    rhs = _motzkin_rhs(n)
    return IdentityCheck(lhs == rhs, lhs, rhs)

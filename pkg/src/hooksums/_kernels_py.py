"""Pure-Python kernels; same algorithms and signatures as ``_kernels.pyx``."""
from __future__ import annotations

import numpy as np

BACKEND = "python"

_spf: list[int] = [0, 1]


def _smallest_prime_factors(n: int) -> list[int]:
    global _spf
    if len(_spf) > n:
        return _spf
    size = max(n + 1, 2 * len(_spf))
    spf = list(range(size))
    i = 2
    while i * i < size:
        if spf[i] == i:
            for j in range(i * i, size, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    _spf = spf
    return spf


def hook_lengths(parts) -> list[list[int]]:
    if not parts:
        return []
    rows = len(parts)
    # col_len[j] = number of rows with length > j
    col_len = [0] * parts[0]
    for p in parts:
        for j in range(p):
            col_len[j] += 1
    return [
        [parts[i] - j + col_len[j] - i - 1 for j in range(parts[i])]
        for i in range(rows)
    ]


def f_lambda_exponents(parts) -> list[int]:
    """Prime exponent vector of n! / prod(hooks), indexed by prime."""
    n = sum(parts)
    spf = _smallest_prime_factors(n)
    exps = [0] * (n + 1)
    for p in range(2, n + 1):
        if spf[p] == p:
            q, e = p, 0
            while q <= n:
                e += n // q
                q *= p
            exps[p] = e
    for row in hook_lengths(parts):
        for h in row:
            while h > 1:
                p = spf[h]
                exps[p] -= 1
                h //= p
    return exps


def f_lambda(parts) -> int:
    exps = f_lambda_exponents(parts)
    out = 1
    for p, e in enumerate(exps):
        if e < 0:
            raise ArithmeticError(f"hook product does not divide n! for {tuple(parts)}")
        if e:
            out *= p**e
    return out


def vandermonde_power_sums(x: np.ndarray, split: int, beta: float) -> tuple[float, float]:
    """Sum and sum of squares over rows of (|D(x[:split])| * |D(x[split:])|)**beta."""
    x = np.asarray(x, dtype=np.float64)
    m, s = x.shape
    prod = np.ones(m)
    for lo, hi in ((0, split), (split, s)):
        for i in range(lo, hi):
            for j in range(i + 1, hi):
                prod *= np.abs(x[:, i] - x[:, j])
    vals = np.power(prod, beta)
    return float(vals.sum()), float(np.dot(vals, vals))

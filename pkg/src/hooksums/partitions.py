"""Integer partitions and the (k, l)-hook sets H(k, l; n).

A partition is stored as a weakly decreasing tuple of positive parts. The
hook set H(k, l; n) holds every partition of n whose (k+1)-th part is at
most l, i.e. at most k rows may stick out past column l.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, RectangleNotContained

__all__ = [
    "Partition",
    "HookShape",
    "HookDecomposition",
    "conjugate",
    "in_hook",
    "enumerate_hook",
    "first_parts",
    "count_hook",
    "partitions",
    "decompose",
    "reassemble",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Compares equal to the plain tuple of its parts, so ``Partition((3, 1)) ==
    (3, 1)`` holds and partitions can be used directly as dict keys.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise DomainError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # skips validation; callers guarantee the invariants
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lookup returning 0 past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class HookShape:
    """Arm/leg bounds of the hook: at most ``k`` rows longer than ``l``."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise DomainError(f"hook bounds must be nonnegative, got ({self.k}, {self.l})")
        if self.k + self.l < 1:
            raise DomainError("at least one of k, l must be positive")

    def contains(self, p) -> bool:
        return in_hook(p, self)

    def transpose(self) -> "HookShape":
        return HookShape(self.l, self.k)


@dataclass(frozen=True)
class HookDecomposition:
    """Split of a hook partition into nu (arm), the k x l rectangle, and mu' (leg).

    ``nu`` has at most ``k`` parts and records the row overhang past column
    ``l``; ``mu`` has at most ``l`` parts and is the conjugate of the rows
    below row ``k``.
    """

    nu: Partition
    mu: Partition
    k: int
    l: int

    @property
    def n_k(self) -> int:
        return self.nu.n

    @property
    def n_l(self) -> int:
        return self.mu.n

    @property
    def n_bar(self) -> int:
        return self.n_k + self.n_l

    @property
    def n(self) -> int:
        return self.n_bar + self.k * self.l


def conjugate(p) -> Partition:
    """Transpose the Young diagram of ``p``."""
    if not p:
        return Partition._trusted(())
    cols = []
    rows = len(p)
    for j in range(1, p[0] + 1):
        while rows and p[rows - 1] < j:
            rows -= 1
        cols.append(rows)
    return Partition._trusted(cols)


def in_hook(p, shape: HookShape) -> bool:
    return (p[shape.k] if len(p) > shape.k else 0) <= shape.l


def _tail(remaining: int, max_part: int, prefix: list) -> Iterator[tuple]:
    """Partitions of ``remaining`` with parts <= ``max_part``, appended to prefix.

    Recurses over the distinct part values (depth <= max_part) rather than over
    rows, so long columns do not hit the recursion limit. Order is
    lexicographically decreasing.
    """
    if remaining == 0:
        yield tuple(prefix)
        return
    if max_part == 1:
        yield tuple(prefix) + (1,) * remaining
        return
    for mult in range(remaining // max_part, -1, -1):
        prefix.extend([max_part] * mult)
        yield from _tail(remaining - mult * max_part, max_part - 1, prefix)
        del prefix[len(prefix) - mult:]


def _head(remaining: int, max_part: int, row: int, k: int, l: int, prefix: list):
    # rows 0..k-1 are free; everything after is a tail with parts <= l
    if remaining == 0:
        yield tuple(prefix)
        return
    if row == k:
        if l == 0:
            return
        yield from _tail(remaining, min(l, max_part), prefix)
        return
    top = min(max_part, remaining)
    if l == 0:
        # all mass must fit into the remaining k - row rows
        rows_left = k - row
        if top * rows_left < remaining:
            return
        low = -(-remaining // rows_left)
    else:
        low = 1
    for part in range(top, low - 1, -1):
        prefix.append(part)
        yield from _head(remaining - part, part, row + 1, k, l, prefix)
        prefix.pop()


def enumerate_hook(shape: HookShape, n: int, first_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` in the hook ``shape``, each exactly once.

    Order is lexicographically decreasing by parts. If ``first_part`` is given,
    only partitions with that largest part are produced; iterating
    :func:`first_parts` and concatenating reproduces the full stream, which is
    how the exact sums are split into chunks.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    k, l = shape.k, shape.l
    if n == 0:
        if first_part in (None, 0):
            yield Partition._trusted(())
        return
    make = Partition._trusted
    if first_part is None:
        for parts in _head(n, n, 0, k, l, []):
            yield make(parts)
        return
    if first_part < 1 or first_part > n:
        return
    if k == 0:
        if first_part > l:
            return
        for parts in _tail(n - first_part, first_part, [first_part]):
            yield make(parts)
        return
    for parts in _head(n - first_part, first_part, 1, k, l, [first_part]):
        yield make(parts)


def first_parts(shape: HookShape, n: int) -> list[int]:
    """Candidate largest parts for ``n`` in ``shape``, in stream order."""
    if n == 0:
        return [0]
    top = n if shape.k > 0 else min(n, shape.l)
    return list(range(top, 0, -1))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    return enumerate_hook(HookShape(max(n, 1), 0), n)


def _bounded_part_table(n: int, max_part: int) -> list[list[int]]:
    # q[j][m]: partitions of m with all parts <= j
    q = [[1] + [0] * n]
    for j in range(1, max_part + 1):
        prev = q[-1]
        row = prev[:]
        for m in range(j, n + 1):
            row[m] += row[m - j]
        q.append(row)
    return q


def count_hook(shape: HookShape, n: int) -> int:
    """|H(k, l; n)| by a dynamic program independent of :func:`enumerate_hook`.

    Splits on ``a = lambda_{k+1}``: the first k rows are k parts >= a (after
    removing a k x a block, a partition into at most k parts), and the rest is
    a partition with largest part exactly a.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    k, l = shape.k, shape.l
    q = _bounded_part_table(n, max(k, l, 1))

    def at_most_k_parts(m: int) -> int:
        # conjugation: at most k parts <-> parts <= k
        return q[k][m] if m >= 0 else 0

    total = at_most_k_parts(n)  # a = 0
    for a in range(1, min(l, n) + 1):
        for tail in range(a, n - k * a + 1):
            head = n - tail
            # largest part exactly a: remove one a, rest has parts <= a
            total += at_most_k_parts(head - k * a) * q[a][tail - a]
    return total


def decompose(p, shape: HookShape) -> HookDecomposition:
    """Split ``p`` into (nu, mu) around the k x l rectangle.

    Raises RectangleNotContained when p_k < l or p_{k+1} > l.
    """
    p = p if isinstance(p, Partition) else Partition(p)
    k, l = shape.k, shape.l
    if p.part(k + 1) > l:
        raise RectangleNotContained(f"{tuple(p)} has more than {k} rows longer than {l}")
    if k >= 1 and p.part(k) < l:
        raise RectangleNotContained(
            f"{tuple(p)} does not contain the {k}x{l} rectangle (p_{k} = {p.part(k)})"
        )
    nu = Partition._trusted(tuple(x - l for x in p[:k] if x > l))
    mu = conjugate(p[k:])
    return HookDecomposition(nu=nu, mu=mu, k=k, l=l)


def reassemble(d: HookDecomposition) -> Partition:
    """Inverse of :func:`decompose`."""
    head = [d.l + d.nu.part(i) for i in range(1, d.k + 1)]
    parts = [x for x in head if x > 0] + list(conjugate(d.mu))
    return Partition(parts)

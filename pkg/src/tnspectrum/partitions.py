"""Integer partitions: enumeration, conjugation, hook lengths, character degrees.

Partitions of n index the irreducible representations of the symmetric group
on n symbols; the degree attached to a partition is n! divided by the product
of the hook lengths of its Young diagram.
"""

from __future__ import annotations

import math
from typing import Iterator

#: Enumeration resource guard; p(80) is already ~1.6e7 partitions.
DEFAULT_MAX_N = 80

#: Ragged grid of hook lengths, one tuple per row of the Young diagram.
HookGrid = tuple[tuple[int, ...], ...]


class Partition:
    """Nonincreasing positive integer parts; ``n`` is their sum.

    Immutable value object. The empty partition (n = 0) is permitted but
    plays no role in the spectrum pipeline.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(parts)
        for left, right in zip(parts, parts[1:]):
            if left < right:
                raise ValueError(f"parts must be nonincreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive integers: {parts}")
        self.parts = parts
        self.n = sum(parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]


def enumerate_partitions(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Partition]:
    """Yield every partition of ``n`` exactly once, in reverse-lexicographic order.

    The stream starts at (n,), ends at (1,)*n and has exactly
    ``partition_count(n)`` items.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the enumeration guard max_n = {max_n}")
    return _descending_partitions(n)


def _descending_partitions(n):
    parts = [n]
    while True:
        yield Partition(parts)
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        # Move one unit out of the rightmost part > 1, then repack the freed
        # units greedily; greedy repacking is what keeps the order reverse-lex.
        spare = len(parts) - i
        parts[i] -= 1
        del parts[i + 1:]
        cap = parts[i]
        while spare > 0:
            take = min(cap, spare)
            parts.append(take)
            spare -= take


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; an involution preserving n."""
    if not p.parts:
        return Partition()
    counts = [0] * p.parts[0]
    for part in p.parts:
        for j in range(part):
            counts[j] += 1
    return Partition(counts)


def hook_lengths(p: Partition) -> HookGrid:
    """Hook length of every box (arm + leg + 1), in the ragged shape of ``p``."""
    conj = conjugate(p).parts
    return tuple(
        tuple(row_len - j + conj[j] - t - 1 for j in range(row_len))
        for t, row_len in enumerate(p.parts)
    )


def degree(p: Partition) -> int:
    """Character degree for ``p``: n! divided by the product of all hook lengths.

    The division is exact for every valid partition; an inexact division can
    only mean a corrupted hook grid, so it raises instead of rounding.
    """
    if not p.parts:
        return 1
    conj = conjugate(p).parts
    hook_product = 1
    for t, row_len in enumerate(p.parts):
        for j in range(row_len):
            hook_product *= row_len - j + conj[j] - t - 1
    quotient, remainder = divmod(math.factorial(p.n), hook_product)
    if remainder:
        raise ArithmeticError(f"hook product {hook_product} does not divide {p.n}! for {p}")
    return quotient


_COUNTS = [1]  # p(0)


def partition_count(n: int) -> int:
    """Number of partitions of ``n``, by Euler's pentagonal-number recurrence.

    Independent of ``enumerate_partitions``; used to cross-check stream lengths.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    while len(_COUNTS) <= n:
        m = len(_COUNTS)
        total = 0
        k = 1
        while True:
            pent = k * (3 * k - 1) // 2
            if pent > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _COUNTS[m - pent]
            pent += k  # second pentagonal number, k(3k+1)/2
            if pent <= m:
                total += sign * _COUNTS[m - pent]
            k += 1
        _COUNTS.append(total)
    return _COUNTS[n]

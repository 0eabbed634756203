"""Brute-force check: build the transposition graph explicitly and diagonalize it.

Deliberately independent of the partition pipeline: vertices are the n!
permutations ranked lexicographically, edges join permutations differing by
one transposition, and the spectrum comes out of a dense symmetric
eigensolver. Agreement with the exact route is the end-to-end test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .spectrum import Spectrum

ORACLE_MIN_N = 2
ORACLE_MAX_N = 6  # 720 vertices; dense diagonalization beyond this is a time sink


@dataclass(frozen=True)
class CayleyGraph:
    n: int
    order: int
    adjacency: np.ndarray  # symmetric 0/1, zero diagonal, indexed by permutation rank


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]  # descending, one per vertex


@dataclass(frozen=True)
class ComparisonReport:
    agreement: bool
    max_deviation: float
    discrepancies: tuple[tuple[int, int, int], ...]  # (eigenvalue, exact mult, numeric mult)


def build_graph(n: int) -> CayleyGraph:
    """Adjacency matrix of the transposition graph, vertices in lexicographic rank order."""
    if not ORACLE_MIN_N <= n <= ORACLE_MAX_N:
        raise ValueError(
            f"oracle graph limited to {ORACLE_MIN_N} <= n <= {ORACLE_MAX_N} (n! vertices), got {n}"
        )
    perms = list(itertools.permutations(range(n)))
    rank = {perm: i for i, perm in enumerate(perms)}
    order = len(perms)
    adjacency = np.zeros((order, order), dtype=np.uint8)
    for u, perm in enumerate(perms):
        for i, j in itertools.combinations(range(n), 2):
            swapped = list(perm)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            adjacency[u, rank[tuple(swapped)]] = 1
    return CayleyGraph(n=n, order=order, adjacency=adjacency)


def numeric_spectrum(g: CayleyGraph, integer_tolerance: float = 1e-6) -> NumericSpectrum:
    """Eigenvalues of the adjacency matrix, descending; each must sit near an integer.

    Raises on eigensolver non-convergence and on any eigenvalue farther than
    ``integer_tolerance`` from the nearest integer (which would falsify the
    integrality of the graph, or expose a broken build).
    """
    values = np.linalg.eigvalsh(g.adjacency.astype(np.float64))[::-1]
    deviations = np.abs(values - np.rint(values))
    worst = float(deviations.max())
    if worst > integer_tolerance:
        culprit = float(values[int(deviations.argmax())])
        raise ArithmeticError(
            f"eigenvalue {culprit!r} is {worst:.3e} away from an integer "
            f"(tolerance {integer_tolerance:g})"
        )
    return NumericSpectrum(values=tuple(float(v) for v in values))


def _round_half_away_from_zero(x: float) -> int:
    magnitude = int(math.floor(abs(x) + 0.5))
    return magnitude if x >= 0 else -magnitude


def compare(exact: Spectrum, numeric: NumericSpectrum, tolerance: float = 1e-6) -> ComparisonReport:
    """Round the numeric eigenvalues and compare multiset-for-multiset with the exact ones.

    Size mismatch (different n) is a usage error and raises; multiplicity
    mismatches are collected into the report instead of thrown. Any numeric
    value farther than ``tolerance`` from an integer aborts the comparison.
    """
    total = sum(m for _, m in exact.entries)
    if total != len(numeric.values):
        raise ValueError(
            f"size mismatch: exact spectrum carries {total} eigenvalues, "
            f"numeric carries {len(numeric.values)}"
        )
    counts: dict[int, int] = {}
    max_deviation = 0.0
    for value in numeric.values:
        rounded = _round_half_away_from_zero(value)
        deviation = abs(value - rounded)
        if deviation > tolerance:
            raise ArithmeticError(
                f"numeric eigenvalue {value!r} is {deviation:.3e} from the nearest integer "
                f"(tolerance {tolerance:g})"
            )
        max_deviation = max(max_deviation, deviation)
        counts[rounded] = counts.get(rounded, 0) + 1
    discrepancies = []
    for value in sorted(set(counts) | {v for v, _ in exact.entries}, reverse=True):
        exact_mult = exact.multiplicity(value)
        numeric_mult = counts.get(value, 0)
        if exact_mult != numeric_mult:
            discrepancies.append((value, exact_mult, numeric_mult))
    return ComparisonReport(
        agreement=not discrepancies,
        max_deviation=max_deviation,
        discrepancies=tuple(discrepancies),
    )


def edge_list(g: CayleyGraph) -> list[tuple[int, int]]:
    """Edges as (u, v) rank pairs with u < v, sorted; for external verification."""
    rows, cols = np.nonzero(np.triu(g.adjacency, k=1))
    return [(int(u), int(v)) for u, v in zip(rows, cols)]


def permutation_parity(perm) -> int:
    """+1 for even permutations, -1 for odd, via cycle decomposition."""
    seen = [False] * len(perm)
    parity = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity

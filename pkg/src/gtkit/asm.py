"""Monotone triangles and the alternating-sign-matrix observation.

Monotone triangles are enumerated through the generalized-pattern enumerator
with an added strict-row filter.  The module checks the refined counting
formula against brute force and the observation that the (n-1,n,n-1) count at
k-1 divided by the refined count is the totally-symmetric-plane-partition
number, independently of k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .closedforms import tsspp_product
from .counting import TopRowKey, enumerate_patterns, f_bruteforce
from .patterns import MonotoneTriangle


def _strictly_increasing(row: tuple[int, ...]) -> bool:
    return all(row[t] < row[t + 1] for t in range(len(row) - 1))


def enumerate_monotone_triangles(n: int, k: int) -> Iterator[MonotoneTriangle]:
    """All monotone triangles of size n whose single top entry equals k."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    key = TopRowKey(n - 1, n, n + 1, (k,))
    for p in enumerate_patterns(key, row_filter=_strictly_increasing):
        yield MonotoneTriangle(p)


def count_monotone_triangles(n: int, k: int) -> int:
    """Number of monotone triangles of size n with top entry k; zero outside
    1 <= k <= n."""
    return sum(1 for _ in enumerate_monotone_triangles(n, k))


def verify_ratio_independence(n: int) -> tuple[bool, Fraction]:
    """The (n-1,n,n-1)-pattern count at top entry k-1, divided by the number
    of monotone triangles of size n with top entry k, is the same for every
    k in 1..n and equals the totally symmetric plane partition product.

    Returns (verdict, common ratio).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    ratios = []
    for k in range(1, n + 1):
        triangles = count_monotone_triangles(n, k)
        patterns = f_bruteforce(TopRowKey(n - 1, n, n - 1, (k - 1,)))
        ratios.append(Fraction(patterns, triangles))
    common = ratios[0]
    verdict = all(r == common for r in ratios) and common == tsspp_product(n)
    return verdict, common

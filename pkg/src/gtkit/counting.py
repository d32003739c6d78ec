"""Signed enumeration engines.

Two independent routes to the signed pattern count F(r,n,c;k_1..k_{n-r}) and
its q-analog F_q: an exhaustive backtracking enumerator (the ground truth)
and the memoized extended-summation recursion (the fast path).  Equality of
the two on documented sweeps is the central oracle of the whole package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .exact import LaurentPolyQ, ext_sum
from .patterns import GenPattern, norm_of, sign_of


@dataclass(frozen=True)
class TopRowKey:
    """Parameters (r, n, c) plus the interior top-row entries k_1..k_{n-r}."""

    r: int
    n: int
    c: int
    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        if self.r < 0 or self.n < 1 or self.r > self.n:
            raise ValueError(f"bad parameters r={self.r}, n={self.n}")
        if len(self.ks) != self.n - self.r:
            raise ValueError(
                f"top row needs {self.n - self.r} entries, got {len(self.ks)}"
            )


@dataclass(frozen=True)
class CountResult:
    """Plain signed count together with its q-weighted refinement."""

    plain: Fraction
    q_weighted: LaurentPolyQ

    def consistent(self) -> bool:
        """The q-polynomial evaluated at q = 1 must reproduce the plain count."""
        return self.q_weighted.at_one() == self.plain


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def _cell_range(w: int, e: int) -> range:
    # admissible values weakly between ordered neighbours, strictly between
    # inverted ones
    return range(w, e + 1) if w <= e else range(e + 1, w)


def enumerate_patterns(
    key: TopRowKey,
    row_filter: Callable[[tuple[int, ...]], bool] | None = None,
) -> Iterator[GenPattern]:
    """Yield every (r,n,c)-pattern with the given top row exactly once.

    Rows are filled top-down; each cell ranges over the interval determined
    by its two upper neighbours, so the stream is finite.  An optional
    row_filter prunes rows (borders included) as they are generated.
    """
    top = (0,) + key.ks + (key.c,)
    if row_filter is not None and not row_filter(top):
        return

    def descend(rows: tuple[tuple[int, ...], ...]) -> Iterator[GenPattern]:
        if len(rows) == key.r + 1:
            yield GenPattern(key.r, key.n, key.c, rows)
            return
        above = rows[-1]
        ranges = [_cell_range(above[t], above[t + 1]) for t in range(len(above) - 1)]
        for combo in itertools.product(*ranges):
            row = (0,) + combo + (key.c,)
            if row_filter is not None and not row_filter(row):
                continue
            yield from descend(rows + (row,))

    yield from descend((top,))


def f_bruteforce(key: TopRowKey) -> Fraction:
    """Signed count of all (r,n,c)-patterns with the given top row."""
    return Fraction(sum(sign_of(p) for p in enumerate_patterns(key)))


def fq_bruteforce(key: TopRowKey) -> LaurentPolyQ:
    """Signed q-weighted count, normalized by q^(k_1 + ... + k_{n-r}).

    Each pattern contributes sign * q^(norm - sum(ks)).
    """
    offset = sum(key.ks)
    coeffs: dict[int, int] = {}
    for p in enumerate_patterns(key):
        e = norm_of(p) - offset
        s = coeffs.get(e, 0) + sign_of(p)
        if s:
            coeffs[e] = s
        else:
            coeffs.pop(e, None)
    return LaurentPolyQ(coeffs)


def bruteforce_count(key: TopRowKey) -> CountResult:
    """Plain and q-weighted brute-force counts from a single enumeration pass."""
    offset = sum(key.ks)
    total = 0
    coeffs: dict[int, int] = {}
    for p in enumerate_patterns(key):
        sgn = sign_of(p)
        total += sgn
        e = norm_of(p) - offset
        s = coeffs.get(e, 0) + sgn
        if s:
            coeffs[e] = s
        else:
            coeffs.pop(e, None)
    return CountResult(Fraction(total), LaurentPolyQ(coeffs))


# ---------------------------------------------------------------------------
# The extended-summation recursion
# ---------------------------------------------------------------------------

_F_MEMO: dict = {}
_FQ_MEMO: dict = {}

_ONE_Q = LaurentPolyQ.constant(1)


def clear_memos() -> None:
    """Drop both global memo tables (useful for benchmarks and tests)."""
    _F_MEMO.clear()
    _FQ_MEMO.clear()


def f_recursive(key: TopRowKey, memo: dict | None = None) -> Fraction:
    """Evaluate F(r,n,c;ks) by the fundamental recursion.

    Each recursion level sums F(r-1,n,c;l_1..l_{n-r+1}) over the chained
    extended ranges l_1 in [0,k_1], l_2 in [k_1,k_2], ..., l_{n-r+1} in
    [k_{n-r},c], down to the base case F(0,n,c;.) = 1.  Memoized on the full
    key.
    """
    if memo is None:
        memo = _F_MEMO
    return Fraction(_f_rec(key.r, key.n, key.c, key.ks, memo))


def _f_rec(r: int, n: int, c: int, ks: tuple[int, ...], memo: dict) -> int:
    if r == 0:
        return 1
    full_key = (r, n, c, ks)
    cached = memo.get(full_key)
    if cached is not None:
        return cached
    bounds = (0,) + ks + (c,)
    depth = n - r + 1  # number of nested summations

    def level(j: int, prefix: tuple[int, ...]):
        if j > depth:
            return _f_rec(r - 1, n, c, prefix, memo)
        return ext_sum(lambda l: level(j + 1, prefix + (l,)), bounds[j - 1], bounds[j])

    value = level(1, ())
    memo[full_key] = value
    return value


def fq_recursive(key: TopRowKey, memo: dict | None = None) -> LaurentPolyQ:
    """Evaluate F_q(r,n,c;ks) by the q-weighted recursion.

    Identical nesting to f_recursive, with every innermost term weighted by
    q^(l_1 + ... + l_{n-r+1}).
    """
    if memo is None:
        memo = _FQ_MEMO
    return _fq_rec(key.r, key.n, key.c, key.ks, memo)


def _fq_rec(
    r: int, n: int, c: int, ks: tuple[int, ...], memo: dict
) -> LaurentPolyQ:
    if r == 0:
        return _ONE_Q
    full_key = (r, n, c, ks)
    cached = memo.get(full_key)
    if cached is not None:
        return cached
    bounds = (0,) + ks + (c,)
    depth = n - r + 1

    def level(j: int, prefix: tuple[int, ...]):
        if j > depth:
            return _fq_rec(r - 1, n, c, prefix, memo).shift(sum(prefix))
        return ext_sum(lambda l: level(j + 1, prefix + (l,)), bounds[j - 1], bounds[j])

    value = level(1, ())
    if not isinstance(value, LaurentPolyQ):  # empty extended sums yield int 0
        value = LaurentPolyQ.constant(value)
    memo[full_key] = value
    return value


def recursive_count(key: TopRowKey, plain_memo: dict | None = None,
                    q_memo: dict | None = None) -> CountResult:
    """Plain and q-weighted counts via the recursion engines."""
    return CountResult(f_recursive(key, plain_memo), fq_recursive(key, q_memo))


# ---------------------------------------------------------------------------
# Bounded partitions (the introductory one-row count)
# ---------------------------------------------------------------------------


def count_bounded_partitions(r: int, k: int) -> int:
    """Number of weakly decreasing r-tuples with parts in {0..k}, extended to
    k < 0 as (-1)^r times the number of strictly increasing r-tuples between
    k and 0 (exclusive).  Always equals binomial(k+r, r)."""
    if r < 0:
        raise ValueError(f"length must be nonnegative, got {r}")
    if r == 0:
        return 1
    if k >= 0:
        return sum(1 for _ in itertools.combinations_with_replacement(range(k + 1), r))
    count = sum(1 for _ in itertools.combinations(range(k + 1, 0), r))
    return -count if r & 1 else count


# ---------------------------------------------------------------------------
# Independent generating-function oracle over strict plane partitions
# ---------------------------------------------------------------------------


def spp_generating_function(
    max_part: int, max_cols: int, parts_equal_to_max: int | None = None
) -> LaurentPolyQ:
    """Sum of q^norm over strict plane partitions with parts in {1..max_part}
    and at most max_cols columns, optionally restricted to those with the
    given number of parts equal to max_part.  Enumerates directly; used as an
    oracle against the pattern engines and the closed forms."""
    from .patterns import enumerate_spps

    coeffs: dict[int, int] = {}
    for spp in enumerate_spps(max_part, max_cols):
        if (
            parts_equal_to_max is not None
            and spp.count_parts_equal(max_part) != parts_equal_to_max
        ):
            continue
        e = spp.norm
        coeffs[e] = coeffs.get(e, 0) + 1
    return LaurentPolyQ(coeffs)

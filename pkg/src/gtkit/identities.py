"""Operator calculus and instance-level identity verification.

Implements the swap operator D_i and the summation operators acting on
integer functions, verifies each lemma-level identity at sample points by
evaluating both sides independently, and reconstructs the one-variable count
as an exact polynomial by Newton interpolation to witness its degree bound
and integer zeros.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .counting import TopRowKey, enumerate_patterns, f_bruteforce, f_recursive, fq_recursive
from .exact import LaurentPolyQ, ext_sum, pochhammer, q_bracket, q_poch


class DegreeExceeded(ArithmeticError):
    """Interpolation nodes beyond the stated degree bound do not match."""


@dataclass(frozen=True)
class IntFunction:
    """Total function from integer vectors of fixed arity to exact values."""

    arity: int
    fn: Callable[..., object]

    def __call__(self, *args):
        if len(args) != self.arity:
            raise TypeError(f"expected {self.arity} arguments, got {len(args)}")
        return self.fn(*args)


def _as_q(value, weight_exp: int) -> LaurentPolyQ:
    # value * q^weight_exp, coercing scalars
    if isinstance(value, LaurentPolyQ):
        return value.shift(weight_exp)
    return LaurentPolyQ.monomial(weight_exp, value)


def apply_D(i: int, g: IntFunction) -> IntFunction:
    """The swap operator: (D_i g)(k) = g(k) + g(..., k_{i+1}+1, k_i-1, ...)."""
    if not 1 <= i <= g.arity - 1:
        raise IndexError(f"D_{i} undefined on arity-{g.arity} functions")

    def fn(*k):
        swapped = k[: i - 1] + (k[i] + 1, k[i - 1] - 1) + k[i + 1 :]
        return g(*k) + g(*swapped)

    return IntFunction(g.arity, fn)


def _chained_sum(bounds: Sequence[tuple[int, int]], summand: Callable[..., object]):
    # nested extended sums l_1, ..., l_m over the given (lower, upper) bounds
    m = len(bounds)

    def level(j: int, prefix: tuple[int, ...]):
        if j == m:
            return summand(*prefix)
        a, b = bounds[j]
        return ext_sum(lambda l: level(j + 1, prefix + (l,)), a, b)

    return level(0, ())


def apply_phi(g: IntFunction) -> IntFunction:
    """Summation operator: arity m -> m+1, summing g over the chained ranges
    l_1 in [k_1,k_2], ..., l_m in [k_m,k_{m+1}]."""
    m = g.arity

    def fn(*k):
        bounds = [(k[j], k[j + 1]) for j in range(m)]
        return _chained_sum(bounds, g)

    return IntFunction(m + 1, fn)


def apply_phi_q(g: IntFunction) -> IntFunction:
    """q-weighted summation operator: each term carries q^(l_1+...+l_m)."""
    m = g.arity

    def fn(*k):
        bounds = [(k[j], k[j + 1]) for j in range(m)]
        return _chained_sum(bounds, lambda *l: _as_q(g(*l), sum(l)))

    return IntFunction(m + 1, fn)


# ---------------------------------------------------------------------------
# The fundamental commutation identity for D_i and the summation operator
# ---------------------------------------------------------------------------


def _fund_rhs_bounds(m: int, i: int, k: Sequence[int], first_term: bool):
    # bounds of l_1..l_m; the standard range of l_j is [k_j, k_{j+1}]
    bounds = [(k[j - 1], k[j]) for j in range(1, m + 1)]
    if first_term:
        bounds[i - 2] = (k[i - 1] + 1, k[i] + 1)  # l_{i-1} in [k_i+1, k_{i+1}+1]
        if i + 1 <= m:
            bounds[i] = (k[i - 1] - 1, k[i + 1])  # l_{i+1} in [k_i-1, k_{i+2}]
    else:
        bounds[i] = (k[i - 1] - 1, k[i] - 1)  # l_{i+1} in [k_i-1, k_{i+1}-1]
    return bounds


def _verify_fund(m: int, i: int, g: IntFunction, sample: Sequence[int], q: bool) -> bool:
    if g.arity != m:
        raise ValueError(f"function arity {g.arity} does not match m={m}")
    if not 1 <= i <= m:
        raise ValueError(f"index i={i} out of range 1..{m}")
    if len(sample) != m + 1:
        raise ValueError(f"sample must have {m + 1} entries")
    phi = apply_phi_q(g) if q else apply_phi(g)
    lhs = apply_D(i, phi)(*sample)

    def weighted(summand):
        if not q:
            return summand
        return lambda *l: _as_q(summand(*l), sum(l))

    terms = 0
    if i >= 2:  # D_0 g = 0 kills this term for i = 1
        terms = terms + _chained_sum(
            _fund_rhs_bounds(m, i, sample, True), weighted(apply_D(i - 1, g))
        )
    if i <= m - 1:  # D_m g = 0 kills this term for i = m
        terms = terms + _chained_sum(
            _fund_rhs_bounds(m, i, sample, False), weighted(apply_D(i, g))
        )
    rhs = Fraction(-1, 2) * terms
    return lhs == rhs


def verify_lemma_fund(m: int, i: int, g: IntFunction, sample: Sequence[int]) -> bool:
    """Check D_i applied to the summed function against its two-sum expansion
    at one sample point, both sides evaluated independently."""
    return _verify_fund(m, i, g, sample, q=False)


def verify_lemma_fund_q(m: int, i: int, g: IntFunction, sample: Sequence[int]) -> bool:
    """q-weighted version of verify_lemma_fund."""
    return _verify_fund(m, i, g, sample, q=True)


def random_int_functions(
    count: int, arity: int, seed: int, box: int = 5, value_bound: int = 5
) -> Iterator[IntFunction]:
    """Seeded stream of total integer functions: random values on the box
    [-box, box]^arity and zero outside it."""
    rng = random.Random(seed)
    points = list(itertools.product(range(-box, box + 1), repeat=arity))
    for _ in range(count):
        table = {pt: rng.randint(-value_bound, value_bound) for pt in points}
        yield IntFunction(arity, lambda *args, _t=table: _t.get(args, 0))


# ---------------------------------------------------------------------------
# The double-sum evaluation lemma and the product decomposition of D_i F
# ---------------------------------------------------------------------------


def verify_lemma_2(r: int, d: int, x: int, y: int) -> bool:
    """Double extended sum of (y'-x'-r+3)_{2r-3} (y'-x'+1) over the shifted
    box against its closed form (y-x-r+2)_{2r-1} (y-x+1) / (r(2r-1))."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")

    def inner(xp: int):
        return ext_sum(
            lambda yp: pochhammer(yp - xp - r + 3, 2 * r - 3) * (yp - xp + 1),
            x - 1 + d,
            y - 1 + d,
        )

    lhs = ext_sum(inner, x + d, y + d)
    rhs = (
        Fraction(1, r * (2 * r - 1))
        * pochhammer(y - x - r + 2, 2 * r - 1)
        * (y - x + 1)
    )
    return lhs == rhs


def verify_lemma_2q(r: int, d: int, x: int, y: int) -> bool:
    """q-analog of verify_lemma_2, checked by cross-multiplication with the
    denominator [2r-1;q][2r;q]."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    lift = LaurentPolyQ({0: 1, r - 1: 1})  # 1 + q^(r-1)

    def term(xp: int, yp: int) -> LaurentPolyQ:
        base = q_poch(yp - xp - r + 3, 2 * r - 3) * q_bracket(yp - xp + 1) * lift
        return base.shift((2 * r - 2) * xp + xp + yp)

    def inner(xp: int):
        return ext_sum(lambda yp: term(xp, yp), x - 1 + d, y - 1 + d)

    lhs = ext_sum(inner, x + d, y + d)
    rhs_num = (
        2
        * q_poch(y - x - r + 2, 2 * r - 1)
        * q_bracket(y - x + 1)
        * LaurentPolyQ({0: 1, r: 1})  # 1 + q^r
    ).shift(2 * r * x + 2 * d * r + r - 2)
    return lhs * q_bracket(2 * r - 1) * q_bracket(2 * r) == rhs_num


def _decomp_rhs_args(ks: tuple[int, ...], i: int) -> tuple[int, ...]:
    # drop k_i, k_{i+1}; shift the later entries by 2
    return ks[: i - 1] + tuple(v + 2 for v in ks[i + 1 :])


def verify_decomp(r: int, n: int, c: int, i: int, ks: Sequence[int]) -> bool:
    """D_i F(r,n,c;.) at ks against the explicit product times the smaller
    count F(r,n-2,c+2;...), both sides through the recursion engine."""
    ks = tuple(ks)
    if not 1 <= i <= n - r - 1:
        raise ValueError(f"index i={i} out of range 1..{n - r - 1}")
    if r == 0:
        return True  # both sides are the constant 2
    swapped = ks[: i - 1] + (ks[i] + 1, ks[i - 1] - 1) + ks[i + 1 :]
    lhs = f_recursive(TopRowKey(r, n, c, ks)) + f_recursive(TopRowKey(r, n, c, swapped))
    diff = ks[i] - ks[i - 1]
    sign = -1 if r & 1 else 1
    rhs = (
        sign
        * Fraction(2, math.factorial(2 * r))
        * pochhammer(diff - r + 2, 2 * r - 1)
        * (diff + 1)
        * f_recursive(TopRowKey(r, n - 2, c + 2, _decomp_rhs_args(ks, i)))
    )
    return lhs == rhs


def decomp_q_exponent(r: int, n: int, i: int) -> int:
    """The constant q-exponent r(1+4i-4n+5r)/2; always an integer."""
    num = r * (1 + 4 * i - 4 * n + 5 * r)
    if num % 2:
        raise ArithmeticError(f"half-integer exponent at r={r}, n={n}, i={i}")
    return num // 2


def verify_decomp_q(r: int, n: int, c: int, i: int, ks: Sequence[int]) -> bool:
    """q-analog of verify_decomp, cross-multiplied with [1;q]_{2r}."""
    ks = tuple(ks)
    if not 1 <= i <= n - r - 1:
        raise ValueError(f"index i={i} out of range 1..{n - r - 1}")
    if r == 0:
        return True
    swapped = ks[: i - 1] + (ks[i] + 1, ks[i - 1] - 1) + ks[i + 1 :]
    lhs = fq_recursive(TopRowKey(r, n, c, ks)) + fq_recursive(
        TopRowKey(r, n, c, swapped)
    )
    diff = ks[i] - ks[i - 1]
    sign = -1 if r & 1 else 1
    shift = 2 * r * ks[i - 1] + decomp_q_exponent(r, n, i)
    rhs_num = (
        sign
        * LaurentPolyQ({0: 1, r: 1})  # 1 + q^r
        * q_poch(diff - r + 2, 2 * r - 1)
        * q_bracket(diff + 1)
        * fq_recursive(TopRowKey(r, n - 2, c + 2, _decomp_rhs_args(ks, i)))
    ).shift(shift)
    return lhs * q_poch(1, 2 * r) == rhs_num


# ---------------------------------------------------------------------------
# Hypergeometric summation identities
# ---------------------------------------------------------------------------


def hyper_middle_expression(m: int, c: int) -> Fraction:
    """(1)_{m-1}^2 binomial(c+2m-1, 2m-1), the Chu-Vandermonde evaluation."""
    return pochhammer(1, m - 1) ** 2 * math.comb(c + 2 * m - 1, 2 * m - 1)


def hyper_final_expression(m: int, c: int) -> Fraction:
    """(1)_{m-1}^2 (c+1)_{2m-2} / (1)_{2m-2}, as displayed; disagrees with the
    middle expression already at m = 2, c = 2 (6 versus 10), so the middle
    form is the one verified."""
    return pochhammer(1, m - 1) ** 2 * pochhammer(c + 1, 2 * m - 2) / pochhammer(1, 2 * m - 2)


def verify_hyper(m: int, c: int) -> bool:
    """sum_{k=0}^{c} (1+k)_{m-1} (1+c-k)_{m-1} against the binomial form."""
    if m < 1 or c < 0:
        raise ValueError(f"need m >= 1 and c >= 0, got m={m}, c={c}")
    lhs = ext_sum(
        lambda k: pochhammer(1 + k, m - 1) * pochhammer(1 + c - k, m - 1), 0, c
    )
    return lhs == hyper_middle_expression(m, c)


def verify_qvand(m: int, c: int) -> bool:
    """sum_{k=0}^{c} [k+1;q]_{m-1} [k-c-m+1;q]_{m-1} q^k against its closed
    form, cross-multiplied with [1;q]_{2m-1}."""
    if m < 1 or c < 0:
        raise ValueError(f"need m >= 1 and c >= 0, got m={m}, c={c}")
    lhs = ext_sum(
        lambda k: (q_poch(k + 1, m - 1) * q_poch(k - c - m + 1, m - 1)).shift(k),
        0,
        c,
    )
    num = (1 - m) * (2 * c + m)
    if num % 2:
        raise ArithmeticError(f"half-integer exponent at m={m}, c={c}")
    sign = -1 if (m - 1) & 1 else 1
    rhs_num = (
        sign * q_poch(1, m - 1) ** 2 * q_poch(c + 1, 2 * m - 1)
    ).shift(num // 2)
    return lhs * q_poch(1, 2 * m - 1) == rhs_num


def verify_qpoch_sum(n: int, y: int) -> bool:
    """sum_{x=1}^{y} [x;q]_n q^x == q [y;q]_{n+1} / [n+1;q] for any integer y,
    cross-multiplied with [n+1;q]."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    lhs = ext_sum(lambda x: q_poch(x, n).shift(x), 1, y)
    return lhs * q_bracket(n + 1) == q_poch(y, n + 1).shift(1)


# ---------------------------------------------------------------------------
# Degree and zero structure of the one-variable count
# ---------------------------------------------------------------------------


class PolyUni:
    """Exact univariate polynomial over the rationals.

    Coefficients are stored ascending by degree with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def __call__(self, x: int | Fraction) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyUni):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyUni({list(self.coeffs)!r})"

    @classmethod
    def interpolate(
        cls, xs: Sequence[int], ys: Sequence[Fraction | int]
    ) -> "PolyUni":
        """Unique polynomial through the given points, by Newton's divided
        differences in exact rational arithmetic."""
        if len(xs) != len(ys) or not xs:
            raise ValueError("need equally many nodes and values, at least one")
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        dd = [Fraction(y) for y in ys]
        m = len(xs)
        for order in range(1, m):
            for t in range(m - 1, order - 1, -1):
                dd[t] = (dd[t] - dd[t - 1]) / Fraction(xs[t] - xs[t - order])
        # expand the Newton form into monomial coefficients
        poly = [Fraction(0)] * m
        basis = [Fraction(1)]  # product of (X - x_t) for t < order
        for order in range(m):
            for t, b in enumerate(basis):
                poly[t] += dd[order] * b
            new_basis = [Fraction(0)] * (len(basis) + 1)
            for t, b in enumerate(basis):
                new_basis[t] -= b * xs[order]
                new_basis[t + 1] += b
            basis = new_basis
        return cls(poly)

    def divide_linear(self, a: int | Fraction) -> tuple["PolyUni", Fraction]:
        """Synthetic division by (X - a): returns (quotient, remainder)."""
        if self.is_zero:
            return PolyUni(()), Fraction(0)
        quotient = [Fraction(0)] * (len(self.coeffs) - 1)
        carry = Fraction(0)
        for t in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[t] + carry * a
            quotient[t - 1] = carry
        remainder = self.coeffs[0] + carry * a
        return PolyUni(quotient), remainder


def interpolate_f(n: int, c: int) -> PolyUni:
    """The polynomial of degree at most 2n-2 through the brute-force counts
    F(n-1,n,c;k) at k = 0..2n-2.

    As a degree-bound witness the polynomial is also checked against the
    counts at k = 2n-1, 2n, -1 and -2; a mismatch raises DegreeExceeded.
    """
    if n < 1 or c < 0:
        raise ValueError(f"need n >= 1 and c >= 0, got n={n}, c={c}")
    nodes = list(range(2 * n - 1))
    ys = [f_bruteforce(TopRowKey(n - 1, n, c, (k,))) for k in nodes]
    poly = PolyUni.interpolate(nodes, ys)
    for extra in (2 * n - 1, 2 * n, -1, -2):
        expected = f_bruteforce(TopRowKey(n - 1, n, c, (extra,)))
        if poly(extra) != expected:
            raise DegreeExceeded(
                f"count at k={extra} is {expected}, polynomial gives {poly(extra)}"
            )
    return poly


def expected_zeros(n: int, c: int) -> list[int]:
    """The 2n-2 predicted integer zeros of the one-variable count."""
    return list(range(-1, -n, -1)) + list(range(c + 1, c + n))


def verify_zeros(n: int, c: int) -> bool:
    """No patterns exist at the predicted zeros, and the interpolated
    polynomial has exactly those integer roots with degree exactly 2n-2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    for k in expected_zeros(n, c):
        key = TopRowKey(n - 1, n, c, (k,))
        if next(enumerate_patterns(key), None) is not None:
            return False  # objects exist, not even a signed cancellation
        if f_bruteforce(key) != 0:
            return False
    poly = interpolate_f(n, c)
    if poly.is_zero:
        return False
    for k in expected_zeros(n, c):
        poly, remainder = poly.divide_linear(k)
        if remainder != 0:
            return False
    return poly.degree == 0


def verify_extra(n: int, c: int) -> bool:
    """F(n-1,n,c;c) == sum_{k=0}^{c} F(n-2,n-1,c;k), by the recursion engine."""
    if n < 2 or c < 0:
        raise ValueError(f"need n >= 2 and c >= 0, got n={n}, c={c}")
    lhs = f_recursive(TopRowKey(n - 1, n, c, (c,)))
    rhs = ext_sum(lambda k: f_recursive(TopRowKey(n - 2, n - 1, c, (k,))), 0, c)
    return lhs == rhs


def verify_extra_q(n: int, c: int) -> bool:
    """F_q(n-1,n,c;c) == q^{cn-c} sum_{k=0}^{c} F_q(n-2,n-1,c;k) q^k."""
    if n < 2 or c < 0:
        raise ValueError(f"need n >= 2 and c >= 0, got n={n}, c={c}")
    lhs = fq_recursive(TopRowKey(n - 1, n, c, (c,)))
    rhs = ext_sum(
        lambda k: fq_recursive(TopRowKey(n - 2, n - 1, c, (k,))).shift(k), 0, c
    )
    if not isinstance(rhs, LaurentPolyQ):
        rhs = LaurentPolyQ.constant(rhs)
    return lhs == rhs.shift(c * n - c)

"""Closed-form product evaluators.

Every product formula is assembled verbatim from Pochhammer or q-Pochhammer
factors and evaluated exactly, with no algebraic shortcuts, so that any
transcription drift is caught loudly by the oracle tests.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .exact import LaurentPolyQ, QFraction, pochhammer, q_poch, qfrac_exact_div
from .patterns import Partition


class FormulaId(Enum):
    """Dispatch tags for the closed forms exposed through the CLI."""

    INTRO_BINOMIAL = "intro_binomial"
    THEOREM_SPECIAL = "theorem_special"
    THEOREM_MAIN_Q = "theorem_main_q"
    BENDER_KNUTH_COUNT = "bender_knuth_count"
    BENDER_KNUTH_GF = "bender_knuth_gf"
    SSYT_PRODUCT = "ssyt_product"
    REFINED_ASM = "refined_asm"
    TSSPP = "tsspp"


def intro_binomial(r: int, k: int) -> Fraction:
    """binomial(k+r, r) = (k+1)_r / r!, extended to arbitrary integer k."""
    if r < 0:
        raise ValueError(f"length must be nonnegative, got {r}")
    return pochhammer(k + 1, r) / Fraction(math.factorial(r))


def theorem_special(n: int, c: int, k: int) -> Fraction:
    """Number of strict plane partitions with parts in {1..n}, at most c
    columns and k parts equal to n:

        (1+k)_{n-1} (1+c-k)_{n-1} / (1)_{n-1}
            * prod_{i=1}^{n-1} (c+i+1)_{i-1} / (i)_i
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = pochhammer(1 + k, n - 1) * pochhammer(1 + c - k, n - 1) / pochhammer(1, n - 1)
    for i in range(1, n):
        value *= pochhammer(c + i + 1, i - 1) / pochhammer(i, i)
    return value


def theorem_main_q_fraction(n: int, c: int, k: int) -> QFraction:
    """Norm generating function of the same objects in raw quotient form:

        q^{kn} [k+1;q]_{n-1} [1+c-k;q]_{n-1} / [1;q]_{n-1}
            * prod_{i=1}^{n-1} [c+i+1;q]_{i-1} / [i;q]_i
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    num = LaurentPolyQ.monomial(k * n)
    num = num * q_poch(k + 1, n - 1) * q_poch(1 + c - k, n - 1)
    den = q_poch(1, n - 1)
    for i in range(1, n):
        num = num * q_poch(c + i + 1, i - 1)
        den = den * q_poch(i, i)
    return QFraction(num, den)


def theorem_main_q(n: int, c: int, k: int) -> LaurentPolyQ:
    """The generating function of theorem_main_q_fraction reduced to an exact
    Laurent polynomial.  Raises NonExactDivision if the quotient is not
    polynomial, which would indicate a transcription bug."""
    return qfrac_exact_div(theorem_main_q_fraction(n, c, k))


def bender_knuth_count(n: int, c: int) -> Fraction:
    """Number of strict plane partitions with parts in {1..n} and at most c
    columns: prod_{i=1}^{n} (c+i)_i / (i)_i."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= pochhammer(c + i, i) / pochhammer(i, i)
    return value


def bender_knuth_gf(n: int, c: int) -> LaurentPolyQ:
    """Norm generating function of the same objects:
    prod_{i=1}^{n} [c+i;q]_i / [i;q]_i, reduced to an exact polynomial."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    num = LaurentPolyQ.constant(1)
    den = LaurentPolyQ.constant(1)
    for i in range(1, n + 1):
        num = num * q_poch(c + i, i)
        den = den * q_poch(i, i)
    return qfrac_exact_div(QFraction(num, den))


def ssyt_product(shape: Partition | Sequence[int], k: int) -> Fraction:
    """Number of semistandard tableaux of the given shape with entries in
    {1..k}: prod_{1<=i<j<=k} (lam_i - lam_j + j - i) / (j - i), the shape
    padded with zeros to k parts."""
    if k < 1:
        raise ValueError(f"entry bound must be positive, got {k}")
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    lam = Partition(parts).padded(k)
    value = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return value


def refined_asm(n: int, k: int) -> Fraction:
    """Number of alternating sign matrices of order n whose unique 1 in the
    first row sits in column k:

        (k)_{n-1} (1+n-k)_{n-1} / (1)_{n-1}
            * prod_{i=1}^{n-1} (1)_{3i-2} / (1)_{n+i-1}
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = pochhammer(k, n - 1) * pochhammer(1 + n - k, n - 1) / pochhammer(1, n - 1)
    for i in range(1, n):
        value *= pochhammer(1, 3 * i - 2) / pochhammer(1, n + i - 1)
    return value


def tsspp_product(n: int) -> Fraction:
    """Number of (n-1) x (n-1) x (n-1) totally symmetric plane partitions:
    prod_{1<=i<=j<=n-1} (i+j+n-2) / (i+2j-2)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    value = Fraction(1)
    for i in range(1, n):
        for j in range(i, n):
            value *= Fraction(i + j + n - 2, i + 2 * j - 2)
    return value


#: Evaluator behind each formula tag, for CLI dispatch.
FORMULAS = {
    FormulaId.INTRO_BINOMIAL: intro_binomial,
    FormulaId.THEOREM_SPECIAL: theorem_special,
    FormulaId.THEOREM_MAIN_Q: theorem_main_q,
    FormulaId.BENDER_KNUTH_COUNT: bender_knuth_count,
    FormulaId.BENDER_KNUTH_GF: bender_knuth_gf,
    FormulaId.SSYT_PRODUCT: ssyt_product,
    FormulaId.REFINED_ASM: refined_asm,
    FormulaId.TSSPP: tsspp_product,
}

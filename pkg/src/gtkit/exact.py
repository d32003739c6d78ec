"""Exact scalar and q-polynomial arithmetic.

Rationals are plain ``fractions.Fraction`` (re-exported as ``BigRational``),
Laurent polynomials in the formal variable q are sparse exponent -> coefficient
maps, and quotients of Laurent polynomials are compared by cross-multiplication.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Union

#: Arbitrary-precision exact rational scalar.  Plain ints are accepted
#: everywhere a BigRational is, since Python ints are already exact.
BigRational = Fraction

Scalar = Union[int, Fraction]


class NonExactDivision(ArithmeticError):
    """A Laurent-polynomial division left a nonzero remainder."""


def ext_sum(f: Callable[[int], object], a: int, b: int):
    """Sum f(a) + ... + f(b) under the extended summation convention.

    For b >= a this is the ordinary sum, for b == a - 1 it is zero, and for
    b <= a - 2 it is -(f(b+1) + f(b+2) + ... + f(a-1)).  The convention makes
    the telescoping rule ext_sum(f, a, b) + ext_sum(f, b+1, c) == ext_sum(f, a, c)
    hold for all integers a, b, c.
    """
    if b >= a:
        return sum(f(i) for i in range(a, b + 1))
    if b == a - 1:
        return 0
    return -sum(f(i) for i in range(b + 1, a))


def pochhammer(a: int, n: int) -> Fraction:
    """Rising product (a)_n = a (a+1) ... (a+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError(f"pochhammer index must be nonnegative, got {n}")
    out = 1
    for i in range(n):
        out *= a + i
    return Fraction(out)


class LaurentPolyQ:
    """Sparse Laurent polynomial in q with exact rational coefficients.

    Stored as a map from integer exponent to nonzero coefficient (int or
    Fraction).  Instances are immutable by convention and hashable; all
    arithmetic is exact and equality is coefficient-wise.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        cleaned: dict[int, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    cleaned[e] = c
        self._terms = cleaned

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPolyQ":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPolyQ":
        return cls({exponent: coeff})

    @classmethod
    def _raw(cls, terms: dict[int, Scalar]) -> "LaurentPolyQ":
        # internal: takes ownership of an already-normalized dict
        p = cls.__new__(cls)
        p._terms = terms
        return p

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> tuple[tuple[int, Scalar], ...]:
        """Terms as (exponent, coefficient) pairs, ascending by exponent."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> Scalar:
        return self._terms.get(exponent, 0)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def at_one(self) -> Fraction:
        """Value at q = 1, i.e. the sum of all coefficients."""
        return Fraction(sum(self._terms.values()))

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPolyQ | None":
        if isinstance(value, LaurentPolyQ):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentPolyQ({0: value})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolyQ._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolyQ._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolyQ._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPolyQ({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponent: int) -> "LaurentPolyQ":
        """Multiply by the monomial q**exponent."""
        if exponent == 0:
            return self
        return LaurentPolyQ._raw({e + exponent: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self._terms) != len(o._terms):
            return False
        for e, c in self._terms.items():
            if o._terms.get(e, 0) != c:
                return False
        return True

    def __hash__(self):
        return hash(frozenset((e, Fraction(c)) for e, c in self._terms.items()))

    # -- division -----------------------------------------------------------

    def exact_div(self, den: "LaurentPolyQ") -> "LaurentPolyQ":
        """Exact quotient self / den in the Laurent ring.

        Raises NonExactDivision if den does not divide self exactly.
        """
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPolyQ()
        noff = self.min_exp
        doff = den.min_exp
        rem = {e - noff: c for e, c in self._terms.items()}
        div = {e - doff: c for e, c in den._terms.items()}
        ddeg = max(div)
        dlead = div[ddeg]
        quot: dict[int, Scalar] = {}
        while rem:
            rdeg = max(rem)
            if rdeg < ddeg:
                raise NonExactDivision(
                    f"{self} is not divisible by {den}: remainder of degree {rdeg}"
                )
            c = Fraction(rem[rdeg]) / Fraction(dlead)
            quot[rdeg - ddeg] = c
            for e, dc in div.items():
                t = rdeg - ddeg + e
                s = rem.get(t, 0) - c * dc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        shift = noff - doff
        return LaurentPolyQ({e + shift: c for e, c in quot.items()})

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(self.terms()):
            coeff = Fraction(c)
            magnitude = abs(coeff)
            if e == 0:
                body = _fmt_scalar(magnitude)
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                body = qpow if magnitude == 1 else f"{_fmt_scalar(magnitude)}*{qpow}"
            if idx == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolyQ({dict(self.terms())!r})"


def _fmt_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


#: The formal variable q itself.
Q = LaurentPolyQ.monomial(1)

_ONE = LaurentPolyQ.constant(1)


def q_bracket(x: int) -> LaurentPolyQ:
    """The q-analog [x;q] = (1 - q^x)/(1 - q) as an exact Laurent polynomial.

    For x >= 0 this is 1 + q + ... + q^(x-1); for x < 0 it is
    -(q^x + q^(x+1) + ... + q^(-1)).
    """
    if x >= 0:
        return LaurentPolyQ._raw(dict.fromkeys(range(x), 1))
    return LaurentPolyQ._raw(dict.fromkeys(range(x, 0), -1))


def q_poch(x: int, n: int) -> LaurentPolyQ:
    """Rising q-product [x;q]_n = [x;q] [x+1;q] ... [x+n-1;q]."""
    if n < 0:
        raise ValueError(f"q_poch index must be nonnegative, got {n}")
    out = _ONE
    for i in range(n):
        out = out * q_bracket(x + i)
        if out.is_zero:
            return out
    return out


class QFraction:
    """Formal quotient of two Laurent polynomials in q.

    Equality of a/b and c/d is decided exactly via a*d == c*b; no reduction
    or approximation is performed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolyQ, den: LaurentPolyQ):
        if den.is_zero:
            raise ZeroDivisionError("QFraction denominator must be nonzero")
        self.num = num
        self.den = den

    def __eq__(self, other) -> bool:
        if isinstance(other, QFraction):
            return self.num * other.den == other.num * self.den
        o = LaurentPolyQ._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o * self.den

    __hash__ = None  # cross-multiplied equality is incompatible with hashing

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"QFraction({self.num!r}, {self.den!r})"


def qfrac_exact_div(f: QFraction) -> LaurentPolyQ:
    """Reduce a QFraction whose denominator divides its numerator exactly.

    Raises NonExactDivision otherwise (which indicates a transcription bug in
    a closed-form product).
    """
    return f.num.exact_div(f.den)

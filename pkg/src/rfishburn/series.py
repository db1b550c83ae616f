"""Exact truncated power series and dense polynomials.

Coefficients are Python ints or fractions.Fraction; mixed arithmetic
promotes through the numeric tower, and no floats appear anywhere.

A TruncatedSeries carries its truncation order explicitly: a value of
order N represents a series known exactly through q**N and says nothing
about higher coefficients.  Binary operations truncate to the smaller
operand order.  An operation that can only guarantee a shorter reliable
prefix (composition with a short outer series) shrinks the order field
instead of padding the tail with wrong values.

ExactPoly is the companion dense polynomial type (no truncation, no
trailing zeros).  Passing an ExactPoly as the outer argument of
series_compose marks the composition as polynomial substitution, which
is legal even when the inner series has a nonzero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]

__all__ = [
    "Coeff",
    "ExactPoly",
    "IllFormedComposition",
    "NonUnitConstantTerm",
    "TruncatedSeries",
    "generalized_binomial",
    "one_minus_q_pow",
    "rational_binom",
    "series_compose",
    "series_int_pow",
    "series_mul",
    "series_reciprocal",
]


class NonUnitConstantTerm(ArithmeticError):
    """Reciprocal of a series whose constant term is not invertible.

    Over integer coefficients only +1 and -1 are units; once any
    coefficient is a Fraction the series lives over the rationals and
    every nonzero constant term is invertible.
    """


class IllFormedComposition(ValueError):
    """series_compose needs inner(0) = 0 or a polynomial outer."""


def generalized_binomial(m: int, k: int) -> int:
    """Binomial coefficient binom(m, k) for any integer m, k >= 0.

    For negative m this is (-1)**k * comb(k - m - 1, k), always an
    integer.  comb already returns 0 when 0 <= m < k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if m >= 0:
        return comb(m, k)
    value = comb(k - m - 1, k)
    return -value if k % 2 else value


def rational_binom(a: Coeff, k: int) -> Fraction:
    """Binomial coefficient a(a-1)...(a-k+1)/k! for rational a."""
    if k < 0:
        raise ValueError("k must be >= 0")
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(a) - i
    return num / factorial(k)


def _nonzero_count(coeffs: Sequence[Coeff]) -> int:
    return sum(1 for c in coeffs if c)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly through q**order."""

    coeffs: tuple
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coeff], order: int) -> "TruncatedSeries":
        """Build from any prefix, padding with zeros or cutting at order."""
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        return cls(tuple(cs), order)

    @classmethod
    def constant(cls, value: Coeff, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @property
    def constant_term(self) -> Coeff:
        return self.coeffs[0]

    def coefficient(self, n: int) -> Coeff:
        """Coefficient of q**n; n must not exceed the truncation order."""
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs), self.order)

    def __add__(self, other: "TruncatedSeries | Coeff") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return TruncatedSeries(tuple(cs), self.order)
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), order
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "TruncatedSeries | Coeff") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: "TruncatedSeries | Coeff") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller operand order.

    The sparser operand drives the outer loop, so multiplying by a
    binomial like 1 - q**n costs two passes over the dense operand
    rather than a full quadratic pass.
    """
    order = min(a.order, b.order)
    if _nonzero_count(a.coeffs) > _nonzero_count(b.coeffs):
        a, b = b, a
    out = [0] * (order + 1)
    bc = b.coeffs
    blen = len(bc)
    for i in range(min(len(a.coeffs), order + 1)):
        av = a.coeffs[i]
        if not av:
            continue
        jmax = min(blen - 1, order - i)
        for j in range(jmax + 1):
            bv = bc[j]
            if bv:
                out[i + j] += av * bv
    return TruncatedSeries(tuple(out), order)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse in the truncated ring.

    Raises NonUnitConstantTerm unless the constant term is +-1 over
    integer coefficients or nonzero over rational coefficients.
    """
    c0 = a.coeffs[0]
    rational = any(isinstance(c, Fraction) for c in a.coeffs)
    if c0 == 0:
        raise NonUnitConstantTerm("constant term is zero")
    if rational:
        inv = Fraction(1) / Fraction(c0)
    elif c0 in (1, -1):
        inv = c0
    else:
        raise NonUnitConstantTerm(
            f"constant term {c0} is not a unit over integer coefficients"
        )
    out: list[Coeff] = [inv]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak:
                acc += ak * out[n - k]
        out.append(-inv * acc)
    return TruncatedSeries(tuple(out), a.order)


def series_int_pow(base: TruncatedSeries, e: int) -> TruncatedSeries:
    """Integer power of a series; negative e goes reciprocal-then-power."""
    if e < 0:
        base = series_reciprocal(base)
        e = -e
    result = TruncatedSeries.constant(1, base.order)
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def one_minus_q_pow(m: int, order: int) -> TruncatedSeries:
    """(1 - q)**m for any integer m via the generalized binomial series.

    Agrees with series_int_pow(1 - q, m) but costs O(order) coefficient
    evaluations instead of a chain of series products.
    """
    return TruncatedSeries(
        tuple(
            -generalized_binomial(m, k) if k % 2 else generalized_binomial(m, k)
            for k in range(order + 1)
        ),
        order,
    )


def series_compose(
    outer: "TruncatedSeries | ExactPoly", inner: TruncatedSeries
) -> TruncatedSeries:
    """Substitute inner into outer.

    Legal when inner has zero constant term (true series composition)
    or when outer is an ExactPoly (finite substitution, any inner).
    The result order is inner.order, shrunk to the reliable prefix
    v*(len(outer)) - 1 when a truncated outer is too short to pin down
    every requested coefficient (v = valuation of inner).
    """
    if isinstance(outer, ExactPoly):
        acc = TruncatedSeries.constant(0, inner.order)
        for c in reversed(outer.coeffs):
            acc = acc * inner + c
        return acc
    if inner.coeffs[0] != 0:
        raise IllFormedComposition(
            "inner constant term must be 0 unless outer is a polynomial"
        )
    v = inner.valuation()
    if v is None:
        return TruncatedSeries.constant(outer.coeffs[0], inner.order)
    reliable = min(inner.order, v * (outer.order + 1) - 1)
    acc = TruncatedSeries.constant(0, inner.order)
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc.truncate(reliable)


@dataclass(frozen=True)
class ExactPoly:
    """Dense polynomial, ascending powers, no trailing zeros."""

    coeffs: tuple

    def __post_init__(self) -> None:
        if self.coeffs and not self.coeffs[-1]:
            raise ValueError("trailing zero coefficient; use from_coeffs")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coeff]) -> "ExactPoly":
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls(())

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Coeff:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return 0

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly.from_coeffs(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other: "ExactPoly | Coeff") -> "ExactPoly":
        if isinstance(other, (int, Fraction)):
            return ExactPoly.from_coeffs(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ExactPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, av in enumerate(self.coeffs):
            if not av:
                continue
            for j, bv in enumerate(other.coeffs):
                if bv:
                    out[i + j] += av * bv
        return ExactPoly.from_coeffs(out)

    __rmul__ = __mul__

    def evaluate(self, x: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "ExactPoly":
        return ExactPoly.from_coeffs(
            k * c for k, c in enumerate(self.coeffs) if k
        )

    def compose(self, other: "ExactPoly") -> "ExactPoly":
        acc = ExactPoly(())
        for c in reversed(self.coeffs):
            acc = acc * other + ExactPoly.from_coeffs([c])
        return acc

    def taylor_shift(self, t: Coeff) -> "ExactPoly":
        """Coefficients of self(x + t), by repeated synthetic substitution."""
        cs = list(self.coeffs)
        d = len(cs) - 1
        for i in range(d):
            for j in range(d - 1, i - 1, -1):
                cs[j] += t * cs[j + 1]
        return ExactPoly.from_coeffs(cs)

    def at_one_minus_q(self) -> "ExactPoly":
        """Coefficients of self(1 - q): shift to 1, then negate odd powers."""
        shifted = self.taylor_shift(1)
        return ExactPoly.from_coeffs(
            -c if k % 2 else c for k, c in enumerate(shifted.coeffs)
        )

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self.coeffs, order)

"""Exact special sequences and characters.

Bernoulli numbers and polynomials, the Glaisher T-numbers, generalized
Stirling numbers of the first kind with an integer shift, the companion
f-polynomials, the C recursion array, the quadratic character mod 12,
and the Legendre symbol.

Caches are grow-only module state; every cached value is a pure
function of its arguments, so a concurrent duplicate fill is harmless
and external behavior matches uncached evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .series import Coeff, ExactPoly

__all__ = [
    "CArray",
    "NonIntegralResult",
    "StirlingTable",
    "bernoulli_number",
    "bernoulli_poly",
    "c_array",
    "c_rows",
    "chi12",
    "f_poly",
    "f_poly_by_recursion",
    "gen_stirling1",
    "glaisher_T",
    "is_prime",
    "legendre",
    "stirling_table",
]


class NonIntegralResult(ArithmeticError):
    """A quantity that must be an integer came out with a denominator."""


_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B_n in the convention with B_1 = -1/2.

    Computed by the recurrence sum(comb(m+1, k) * B_k, k = 0..m) = 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        acc = Fraction(0)
        for k in range(m):
            acc += comb(m + 1, k) * _bernoulli[k]
        _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> ExactPoly:
    """Bernoulli polynomial B_n(x) = sum(comb(n, k) B_k x**(n-k))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return ExactPoly.from_coeffs(
        comb(n, n - j) * bernoulli_number(n - j) for j in range(n + 1)
    )


@lru_cache(maxsize=None)
def glaisher_T(n: int) -> int:
    """Glaisher T-number, T_0 = 1, T_1 = 23, always an integer.

    T_n = 6 * (-144)**n / (n+1) * (B_{2n+2}(1/12) - B_{2n+2}(5/12)).
    Raises NonIntegralResult if the closed form fails to clear its
    denominator, which would mean the arithmetic upstream is broken.
    """
    poly = bernoulli_poly(2 * n + 2)
    diff = poly.evaluate(Fraction(1, 12)) - poly.evaluate(Fraction(5, 12))
    value = Fraction(6) * Fraction(-144) ** n / (n + 1) * diff
    if value.denominator != 1:
        raise NonIntegralResult(f"T_{n} = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class StirlingTable:
    """Coefficients of (x - m)(x - m + 1)...(x - m + n - 1) by power of x."""

    n: int
    m: int
    coeffs: tuple


_stirling_rows: dict[int, list[tuple]] = {}


def _stirling_row(n: int, m: int) -> tuple:
    rows = _stirling_rows.setdefault(m, [(1,)])
    while len(rows) <= n:
        k = len(rows)  # extending with factor (x + (k - 1 - m))
        prev = rows[-1]
        shift = k - 1 - m
        nxt = [0] * (k + 1)
        for j, c in enumerate(prev):
            nxt[j] += c * shift
            nxt[j + 1] += c
        rows.append(tuple(nxt))
    return rows[n]


def stirling_table(n: int, m: int) -> StirlingTable:
    if n < 0:
        raise ValueError("n must be >= 0")
    return StirlingTable(n, m, _stirling_row(n, m))


def gen_stirling1(n: int, j: int, m: int) -> int:
    """Shifted Stirling number of the first kind: coefficient of x**j
    in (x - m)(x - m + 1)...(x - m + n - 1); zero outside 0 <= j <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if j < 0 or j > n:
        return 0
    return _stirling_row(n, m)[j]


def f_poly(n: int, k: int, m: int) -> ExactPoly:
    """f(x, n, k, m) = (-1)**n sum(comb(j, k) s1(n, j, m) x**j, j = k..n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return ExactPoly(())
    row = _stirling_row(n, m)
    sign = -1 if n % 2 else 1
    coeffs = [0] * (n + 1)
    for j in range(k, n + 1):
        coeffs[j] = sign * comb(j, k) * row[j]
    return ExactPoly.from_coeffs(coeffs)


def f_poly_by_recursion(n: int, k: int, m: int) -> ExactPoly:
    """Same family by its two-term recursion.

    f(x, n+1, k, m) = -((x + n - m) f(x, n, k, m) + x f(x, n, k-1, m)),
    starting from f(x, 0, 0, m) = 1.  Kept as an independent route so
    the closed form above has something to disagree with.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return ExactPoly(())
    # table[kk] = f(x, nn, kk, m) for the current nn
    table: list[ExactPoly] = [ExactPoly((1,))]
    x = ExactPoly((0, 1))
    for nn in range(n):
        nxt: list[ExactPoly] = []
        for kk in range(len(table) + 1):
            cur = table[kk] if kk < len(table) else ExactPoly(())
            low = table[kk - 1] if kk >= 1 else ExactPoly(())
            nxt.append(-((x + ExactPoly.from_coeffs([nn - m])) * cur + x * low))
        table = nxt
    return table[k]


def c_rows(nmax: int, i: Coeff, p: int) -> tuple[tuple, ...]:
    """Rows 0..nmax of the C recursion for an arbitrary exact i.

    C(0, i, 0, p) = 1; C(n+1, i, j, p) = (i + j p) C(n, i, j, p)
    + p C(n, i, j-1, p); entries outside 0 <= j <= n are zero.
    The recursion never divides, so i may be an int or a Fraction.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    rows: list[tuple] = [(1,)]
    for n in range(nmax):
        prev = rows[-1]
        nxt = []
        for j in range(n + 2):
            acc = 0
            if j <= n:
                acc = (i + j * p) * prev[j]
            if j >= 1:
                acc += p * prev[j - 1]
            nxt.append(acc)
        rows.append(tuple(nxt))
    return tuple(rows)


@dataclass(frozen=True)
class CArray:
    """Triangular C recursion table for a residue i mod p."""

    p: int
    i: int
    rows: tuple[tuple, ...]

    def value(self, n: int, j: int) -> Coeff:
        if n < 0 or n >= len(self.rows):
            raise IndexError(f"row {n} not computed")
        if j < 0 or j > n:
            return 0
        return self.rows[n][j]


def c_array(nmax: int, i: int, p: int) -> CArray:
    if not 0 <= i < p:
        raise ValueError("i must be a residue in [0, p-1]")
    return CArray(p, i, c_rows(nmax, i, p))


def chi12(n: int) -> int:
    """Quadratic character mod 12: +1 at +-1, -1 at +-5, else 0."""
    r = n % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, by Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def is_prime(n: int) -> bool:
    """Trial-division primality, adequate for CLI-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True

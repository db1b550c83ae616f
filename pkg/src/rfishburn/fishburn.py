"""Coefficient sequences from partial sums of the Pochhammer series.

F(q, N) = sum((q; q)_n, n = 0..N) with (q; q)_n = prod(1 - q**j).
Substituting q -> 1 - (1 - q)**r turns each factor into
1 - (1 - q)**(r n), which has q-valuation exactly 1 for r n != 0, so
the n-th summand has valuation >= n.  The partial sum through n = N
therefore pins down coefficients 0..N exactly; those coefficients are
the xi_r sequence.  All arithmetic is exact integer work.

The module keeps one table per r, grown on demand, because the tables
are the expensive shared state every congruence check reuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import TruncatedSeries, one_minus_q_pow, rational_binom
from .special import NonIntegralResult, gen_stirling1, glaisher_T

__all__ = [
    "XiBarSequence",
    "XiSequence",
    "ZeroR",
    "partial_sum_F",
    "xi_bar_p",
    "xi_r",
    "xi_via_glaisher",
]


class ZeroR(ValueError):
    """r = 0 collapses the substitution; the sequence is undefined."""


@dataclass(frozen=True)
class XiSequence:
    """xi_r(0..N); indexing below 0 returns 0 (empty sums stay empty)."""

    r: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("xi_r(0) must be 1")

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class XiBarSequence:
    """Adjusted sequence: coefficients of (1-q)**floor(p/24) * F(1-(1-q)**p)."""

    p: int
    values: tuple[int, ...]

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def partial_sum_F(N: int, order: int) -> TruncatedSeries:
    """F(q, N) as a series truncated at the given order.

    With order >= N(N+1)/2 the result is the exact polynomial.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    one = TruncatedSeries.constant(1, order)
    total = one
    poch = one
    for n in range(1, N + 1):
        if n <= order:
            factor = TruncatedSeries.from_coeffs(
                [1] + [0] * (n - 1) + [-1], order
            )
            poch = poch * factor
        # for n > order the factor is 1 mod q**(order+1): poch is unchanged
        total = total + poch
    return total


_xi_cache: dict[int, XiSequence] = {}


def _compute_xi(r: int, N: int) -> XiSequence:
    order = N
    total = list(TruncatedSeries.constant(1, order).coeffs)
    poch = TruncatedSeries.constant(1, order)
    for n in range(1, N + 1):
        factor = 1 - one_minus_q_pow(r * n, order)
        poch = poch * factor  # valuation grows to >= n
        for k in range(n, order + 1):
            total[k] += poch.coeffs[k]
    return XiSequence(r, tuple(total))


def xi_r(r: int, N: int) -> XiSequence:
    """xi_r(0..N): coefficients of F at x = (1 - q)**r.

    Each factor 1 - (1 - q)**(r n) is expanded by the closed binomial
    form, which agrees with series_int_pow on (1 - q) for every integer
    exponent (property-tested) and avoids a quadratic power chain.
    """
    if r == 0:
        raise ZeroR("r must be a nonzero integer")
    if N < 0:
        raise ValueError("N must be >= 0")
    have = _xi_cache.get(r)
    if have is None or have.truncation < N:
        have = _compute_xi(r, N)
        _xi_cache[r] = have
    if have.truncation == N:
        return have
    return XiSequence(r, have.values[: N + 1])


def xi_via_glaisher(N: int) -> XiSequence:
    """xi_1(0..N) by the Glaisher T-number route.

    Substituting t = log(1 - q) into the exponential identity behind
    the T-numbers and expanding (-log(1 - q))**k by unsigned Stirling
    numbers gives
        xi(n) = sum over 0 <= k <= m <= n of
            (-1)**(n-m) binom(-1/24, n-m) s1(m, k, 0) T_k / (m! 24**k):
    the parity sits on the binomial-series index n - m, coming from
    (1 - q)**(-1/24) = sum((-1)**a binom(-1/24, a) q**a).
    Every partial result is a Fraction; the total must clear to an
    integer, else NonIntegralResult.  Quadratic in N with fat rational
    arithmetic, so intended for cross-checks at modest N.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    values = []
    for n in range(N + 1):
        total = Fraction(0)
        for m in range(n + 1):
            rb = rational_binom(Fraction(-1, 24), n - m)
            if (n - m) % 2:
                rb = -rb
            fac = factorial(m)
            inner = Fraction(0)
            for k in range(m + 1):
                s1 = gen_stirling1(m, k, 0)
                if not s1:
                    continue
                inner += Fraction(s1 * glaisher_T(k), fac * 24**k)
            total += rb * inner
        if total.denominator != 1:
            raise NonIntegralResult(f"xi({n}) came out as {total}")
        values.append(int(total))
    return XiSequence(1, tuple(values))


def xi_bar_p(p: int, N: int) -> XiBarSequence:
    """Adjusted p-sequence: (1 - q)**floor(p/24) times the xi_p series.

    For 5 <= p <= 23 the prefactor is 1 and this equals xi_p.
    """
    if p <= 0:
        raise ValueError("p must be a positive integer")
    base = xi_r(p, N)
    e = p // 24
    if e == 0:
        return XiBarSequence(p, base.values)
    pref = one_minus_q_pow(e, N)
    adjusted = pref * TruncatedSeries(base.values, N)
    return XiBarSequence(p, adjusted.coeffs)

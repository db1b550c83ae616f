"""p-dissection of the partial sums and the identities tied to it.

dissect splits the exact polynomial F(q, N) into residue components:
F(q, N) = sum(q**i * A_p(N, i, q**p), i = 0..p-1).  The alpha table
holds coefficients of A_p(p n - 1, i, 1 - q), extracted by exact
synthetic substitution.  gamma packages the Bernoulli-polynomial sums
that the derivative identity equates to dissection data.

Everything here is exact; verification routines return a
VerificationReport instead of asserting, so callers decide severity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .fishburn import partial_sum_F, xi_bar_p
from .reports import VerificationReport
from .series import Coeff, ExactPoly
from .special import bernoulli_poly, c_array, c_rows, chi12, gen_stirling1, is_prime

__all__ = [
    "AlphaTable",
    "Dissection",
    "GammaValue",
    "I0Residue",
    "InconsistentI0",
    "alpha",
    "dissect",
    "gamma",
    "gamma_support",
    "i0_of",
    "verify_alpha_i0",
    "verify_alpha_stability",
    "verify_alpha_vanishing",
    "verify_gamma_identity",
    "verify_triangular_inversion",
]


class InconsistentI0(ArithmeticError):
    """The distinguished residue failed its defining congruence."""


@dataclass(frozen=True)
class Dissection:
    """Residue split of F(q, N): component i collects exponents = i mod p."""

    p: int
    N: int
    degree: int
    components: tuple[ExactPoly, ...]

    def reconstruct_coeffs(self) -> tuple:
        """Coefficients 0..degree of sum(q**i * A_i(q**p)); exact inverse
        of the split, used to check the dissection against F(q, N)."""
        out = [0] * (self.degree + 1)
        for i, comp in enumerate(self.components):
            for k, c in enumerate(comp.coeffs):
                pos = i + k * self.p
                if pos <= self.degree:
                    out[pos] = c
        return tuple(out)


@dataclass(frozen=True)
class AlphaTable:
    """Coefficients k = 0..kmax of A_p(p n - 1, i, 1 - q)."""

    p: int
    n: int
    i: int
    coeffs: tuple

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k]


@dataclass(frozen=True)
class GammaValue:
    j: int
    i: int
    p: int
    value: Fraction


@dataclass(frozen=True)
class I0Residue:
    p: int
    i0: int


@lru_cache(maxsize=32)
def _partial_poly(N: int, degree_cap: int | None) -> ExactPoly:
    full = N * (N + 1) // 2
    deg = full if degree_cap is None else min(degree_cap, full)
    return ExactPoly.from_coeffs(partial_sum_F(N, deg).coeffs)


@lru_cache(maxsize=64)
def dissect(p: int, N: int, degree_cap: int | None = None) -> Dissection:
    """Split F(q, N) by exponent residue mod p.

    degree_cap truncates the expansion for cheap reconstruction-style
    uses; identity checks need the exact polynomial and pass no cap.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    full = N * (N + 1) // 2
    deg = full if degree_cap is None else min(degree_cap, full)
    poly = _partial_poly(N, degree_cap)
    comps = tuple(
        ExactPoly.from_coeffs(poly.coeffs[i::p] if i <= poly.degree else ())
        for i in range(p)
    )
    return Dissection(p, N, deg, comps)


def i0_of(p: int) -> I0Residue:
    """The residue i0 = (p**2 - 1)/24 - floor(p/24) p, the unique
    i in [0, p-1] with 24 i = -1 mod p.  Checked at construction."""
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    i0 = (p * p - 1) // 24 - (p // 24) * p
    if not 0 <= i0 < p or (24 * i0 + 1) % p != 0:
        raise InconsistentI0(f"i0 = {i0} fails its congruence for p = {p}")
    return I0Residue(p, i0)


def alpha(p: int, n: int, i: int, kmax: int) -> AlphaTable:
    """Coefficients 0..kmax of A_p(p n - 1, i, 1 - q), exact integers."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= i < p:
        raise ValueError("i must be a residue in [0, p-1]")
    comp = dissect(p, p * n - 1).components[i]
    shifted = comp.at_one_minus_q()
    coeffs = tuple(shifted.coefficient(k) for k in range(kmax + 1))
    return AlphaTable(p, n, i, coeffs)


def gamma_support(i: int, p: int) -> tuple[int, ...]:
    """The m in [1, 6p] with chi12(m) != 0 and (m**2 - 1)/24 = i mod p.

    chi12(m) != 0 forces gcd(m, 12) = 1, so m**2 - 1 is divisible by 24
    and the residue classification is exact integer work.  Over all i
    the classes partition the 2p admissible m.
    """
    out = []
    for m in range(1, 6 * p + 1):
        if chi12(m) == 0:
            continue
        if ((m * m - 1) // 24) % p == i:
            out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def gamma(j: int, i: int, p: int) -> GammaValue:
    """gamma(j, i) = (-1)**j (12 p)**(2j+1) / (2j+2) *
    sum(chi12(m) B_{2j+2}(m / (12 p))) over the support class of i."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if not 0 <= i < p:
        raise ValueError("i must be a residue in [0, p-1]")
    poly = bernoulli_poly(2 * j + 2)
    acc = Fraction(0)
    for m in gamma_support(i, p):
        acc += chi12(m) * poly.evaluate(Fraction(m, 12 * p))
    sign = -1 if j % 2 else 1
    value = sign * Fraction(12 * p) ** (2 * j + 1) / (2 * j + 2) * acc
    # sanity bound on how much denominator can survive the cancellation
    bound = (2 * j + 2) * (12 * p) ** (2 * j + 2)
    assert bound % value.denominator == 0, f"gamma denominator {value.denominator}"
    return GammaValue(j, i, p, value)


def verify_alpha_i0(p: int, nmax: int) -> VerificationReport:
    """Check alpha(p, n, i0, k) = p chi12(p) xibar_p(k) for k <= n - 1."""
    i0 = i0_of(p).i0
    sign = chi12(p)
    xbar = xi_bar_p(p, max(nmax - 1, 0))
    witnesses = 0
    for n in range(1, nmax + 1):
        table = alpha(p, n, i0, n - 1)
        for k in range(n):
            expected = p * sign * xbar[k]
            witnesses += 1
            if table[k] != expected:
                return VerificationReport(
                    claim="alpha(p,n,i0,k) = p*chi12(p)*xibar_p(k)",
                    range_checked=f"p={p}, n<={nmax}, k<=n-1",
                    passed=False,
                    witnesses=witnesses,
                    counterexample=f"n={n}, k={k}: {table[k]} != {expected}",
                )
    return VerificationReport(
        claim="alpha(p,n,i0,k) = p*chi12(p)*xibar_p(k)",
        range_checked=f"p={p}, n<={nmax}, k<=n-1",
        passed=True,
        witnesses=witnesses,
    )


def verify_alpha_vanishing(p: int, nmax: int) -> VerificationReport:
    """Check alpha(p, n, i, k) = 0 for k <= n - 1 whenever i is not a
    pentagonal residue mod p."""
    from .congruence import s_set  # local import; congruence sits above

    pent = set(s_set(p).members)
    outside = [i for i in range(p) if i not in pent]
    witnesses = 0
    for n in range(1, nmax + 1):
        for i in outside:
            table = alpha(p, n, i, n - 1)
            for k in range(n):
                witnesses += 1
                if table[k] != 0:
                    return VerificationReport(
                        claim="alpha vanishes off the pentagonal residues",
                        range_checked=f"p={p}, n<={nmax}, k<=n-1",
                        passed=False,
                        witnesses=witnesses,
                        counterexample=f"n={n}, i={i}, k={k}: {table[k]}",
                    )
    return VerificationReport(
        claim="alpha vanishes off the pentagonal residues",
        range_checked=f"p={p}, n<={nmax}, k<=n-1",
        passed=True,
        witnesses=witnesses,
    )


def verify_alpha_stability(p: int, nmax: int) -> VerificationReport:
    """Check the prefix k <= M - 1 of alpha(p, n, i, .) is independent
    of n for n >= M: columns stabilize as the truncation grows."""
    witnesses = 0
    tables = {n: [alpha(p, n, i, n - 1) for i in range(p)] for n in range(1, nmax + 1)}
    for m in range(1, nmax + 1):
        for n in range(m, nmax + 1):
            for i in range(p):
                for k in range(m):
                    witnesses += 1
                    if tables[n][i][k] != tables[m][i][k]:
                        return VerificationReport(
                            claim="alpha prefixes are stable in n",
                            range_checked=f"p={p}, n<={nmax}",
                            passed=False,
                            witnesses=witnesses,
                            counterexample=(
                                f"i={i}, k={k}: n={n} gives {tables[n][i][k]}, "
                                f"n={m} gives {tables[m][i][k]}"
                            ),
                        )
    return VerificationReport(
        claim="alpha prefixes are stable in n",
        range_checked=f"p={p}, n<={nmax}",
        passed=True,
        witnesses=witnesses,
    )


def _component_derivative_at_one(p: int, j: int, i: int) -> Coeff:
    """j-th derivative of A_p(p(j+1) - 1, i, x) at x = 1, exact."""
    comp = dissect(p, p * (j + 1) - 1).components[i]
    for _ in range(j):
        comp = comp.derivative()
    return comp.evaluate(1)


def verify_gamma_identity(p: int, i: int, nmax: int) -> VerificationReport:
    """Check sum(C(n,i,j,p) * d^j A / dx^j at 1) =
    (-1)**n / 24**n * sum(comb(n, j) gamma(j, i))."""
    carr = c_array(nmax, i, p)
    witnesses = 0
    for n in range(nmax + 1):
        lhs = Fraction(0)
        for j in range(n + 1):
            lhs += carr.value(n, j) * _component_derivative_at_one(p, j, i)
        rhs = Fraction(0)
        for j in range(n + 1):
            rhs += comb(n, j) * gamma(j, i, p).value
        rhs *= Fraction(-1 if n % 2 else 1, 24**n)
        witnesses += 1
        if lhs != rhs:
            return VerificationReport(
                claim="derivative sums match the gamma sums",
                range_checked=f"p={p}, i={i}, n<={nmax}",
                passed=False,
                witnesses=witnesses,
                counterexample=f"n={n}: {lhs} != {rhs}",
            )
    return VerificationReport(
        claim="derivative sums match the gamma sums",
        range_checked=f"p={p}, i={i}, n<={nmax}",
        passed=True,
        witnesses=witnesses,
    )


def verify_triangular_inversion(
    p: int, z: Coeff, m: int, X: Sequence[Coeff], nmax: int
) -> VerificationReport:
    """Check the C-weighted sums of the A1 polynomials collapse to
    (-1)**n z**n sum(comb(n, k) X(k)).

    A1(ell) = (-1)**ell sum over k <= j <= ell of
        comb(j, k) s1(ell, j, m) p**(j - 2k) X(k) z**j,
    and the weights use the rational point i = (p**2 - 1) z - m p, so
    the C recursion runs over Fractions.  X shorter than nmax + 1 is
    padded with zeros.
    """
    z = Fraction(z)
    xs = [Fraction(v) for v in X] + [Fraction(0)] * max(0, nmax + 1 - len(X))
    i_pt = (p * p - 1) * z - m * p
    rows = c_rows(nmax, i_pt, p)

    def a1(ell: int) -> Fraction:
        acc = Fraction(0)
        for k in range(ell + 1):
            if xs[k] == 0:
                continue
            for j in range(k, ell + 1):
                s1 = gen_stirling1(ell, j, m)
                if not s1:
                    continue
                acc += comb(j, k) * s1 * Fraction(p) ** (j - 2 * k) * xs[k] * z**j
        return -acc if ell % 2 else acc

    a1_vals = [a1(ell) for ell in range(nmax + 1)]
    witnesses = 0
    for n in range(nmax + 1):
        lhs = sum((rows[n][j] * a1_vals[j] for j in range(n + 1)), Fraction(0))
        rhs_sum = sum((comb(n, k) * xs[k] for k in range(n + 1)), Fraction(0))
        rhs = (Fraction(-1) if n % 2 else Fraction(1)) * z**n * rhs_sum
        witnesses += 1
        if lhs != rhs:
            return VerificationReport(
                claim="C-weighted A1 sums collapse to the binomial form",
                range_checked=f"p={p}, z={z}, m={m}, n<={nmax}",
                passed=False,
                witnesses=witnesses,
                counterexample=f"n={n}: {lhs} != {rhs}",
            )
    return VerificationReport(
        claim="C-weighted A1 sums collapse to the binomial form",
        range_checked=f"p={p}, z={z}, m={m}, n<={nmax}",
        passed=True,
        witnesses=witnesses,
    )

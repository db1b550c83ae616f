"""Residue sets, congruence checks, and mod-p relation spaces.

The objects here are all indexed by a prime p >= 5 and a nonzero r
coprime to p.  S(p) is the set of pentagonal residues mod p; T(p) the
residues above max S(p).  The starred sets shift by s and multiply by
r, minus the single residue excluded by 24(j - s) = -r mod p.  For
m in T*(p, r, s) the binomial difference
    sum((-1)**j comb(s, j) xi_r(p n + m - j), j = 0..s)
vanishes mod p for every n; verify_congruence checks that numerically
over a table of xi values.

relation_space measures, empirically, all linear relations mod p among
the columns of M[n][j] = xi_r(p n + j): the right nullspace of the
witness matrix, with deterministic first-nonzero pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Sequence

from .fishburn import XiSequence, xi_r
from .reports import VerificationReport
from .special import is_prime, legendre

__all__ = [
    "BadParams",
    "CongruenceRelation",
    "DimensionMismatch",
    "InsufficientData",
    "NotInTStar",
    "RelationSpace",
    "ResidueSet",
    "known_small_relations",
    "membership",
    "pentagonal_residues",
    "relation_family",
    "relation_space",
    "residues_above",
    "s_set",
    "s_star",
    "t_set",
    "t_star",
    "verify_congruence",
    "verify_relation",
]


class NotInTStar(ValueError):
    """Requested residue is outside T*(p, r, s) and force was not set."""


class BadParams(ValueError):
    """Parameters break a precondition (p not prime >= 5, p | r, ...)."""


class InsufficientData(ValueError):
    """Not enough xi values to build the requested witness matrix."""


class DimensionMismatch(ValueError):
    """Relation vector and space disagree on p or vector length."""


@dataclass(frozen=True)
class ResidueSet:
    """A named subset of [0, p-1]; members sorted ascending."""

    p: int
    kind: str  # "S", "T", "S*", "T*"
    members: tuple[int, ...]
    r: int | None = None
    s: int | None = None

    def __contains__(self, j: int) -> bool:
        return j in self.members


@dataclass(frozen=True)
class CongruenceRelation:
    """Coefficient vector c with sum(c[j] xi_r(p n + j)) = 0 mod p.

    source is "binomial" for the closed-form family (with its s and the
    target residue m recorded), "nullspace" for empirically found
    vectors, or "reported" for short relations quoted from observation.
    """

    p: int
    r: int
    coeffs: tuple[int, ...]
    source: str
    s: int | None = None
    m: int | None = None

    def describe(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*xi_{self.r}({self.p}n+{j})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} = 0 (mod {self.p})"


@dataclass(frozen=True)
class RelationSpace:
    """Right nullspace of the witness matrix M[n][j] = xi_r(pn + j) mod p."""

    p: int
    r: int
    rows_used: int
    basis: tuple[CongruenceRelation, ...]
    dimension: int
    last_change_row: int

    def stabilized(self, window: int = 20) -> bool:
        """True when the dimension sat unchanged for the final window
        of row increments."""
        return self.rows_used - self.last_change_row >= window


def _require_modulus(p: int) -> None:
    if not is_prime(p) or p < 5:
        raise BadParams(f"p must be a prime >= 5, got {p}")


def _require_r(p: int, r: int) -> None:
    if r == 0 or gcd(r, p) != 1:
        raise BadParams(f"r must be nonzero and coprime to p, got r={r}, p={p}")


def pentagonal_residues(p: int) -> frozenset[int]:
    """Distinct values of n(3n - 1)/2 mod p; n = 0..p-1 already covers
    every generalized pentagonal index because the values are periodic
    in n mod p."""
    return frozenset((n * (3 * n - 1) // 2) % p for n in range(p))


def residues_above(members: Iterable[int], p: int) -> tuple[int, ...]:
    """Residues strictly greater than max(members); all of [0, p-1]
    when members is empty (vacuous case, callers flag it)."""
    ms = tuple(sorted(members))
    if not ms:
        return tuple(range(p))
    return tuple(range(ms[-1] + 1, p))


def s_set(p: int) -> ResidueSet:
    _require_modulus(p)
    return ResidueSet(p, "S", tuple(sorted(pentagonal_residues(p))))


def t_set(p: int) -> ResidueSet:
    base = s_set(p)
    return ResidueSet(p, "T", residues_above(base.members, p))


def s_star(p: int, r: int, s: int) -> ResidueSet:
    """Residues j = r*(pentagonal) + s mod p, minus the single j with
    24(j - s) = -r mod p."""
    _require_modulus(p)
    _require_r(p, r)
    if not 0 <= s < p:
        raise BadParams(f"s must be a residue in [0, p-1], got {s}")
    shifted = {(r * w + s) % p for w in pentagonal_residues(p)}
    excluded = (s - r * pow(24, -1, p)) % p
    shifted.discard(excluded)
    return ResidueSet(p, "S*", tuple(sorted(shifted)), r=r, s=s)


def t_star(p: int, r: int, s: int) -> ResidueSet:
    base = s_star(p, r, s)
    return ResidueSet(p, "T*", residues_above(base.members, p), r=r, s=s)


def verify_relation(
    p: int, r: int, coeffs: Sequence[int], nmax: int, xi: XiSequence | None = None
) -> VerificationReport:
    """Check sum(coeffs[j] * xi_r(p n + j)) = 0 mod p for every n with
    all touched indices inside the table."""
    _require_modulus(p)
    _require_r(p, r)
    if len(coeffs) != p:
        raise BadParams(f"coefficient vector must have length p={p}")
    if xi is None:
        xi = xi_r(r, nmax)
    witnesses = 0
    label = "+".join(f"{c}@{j}" for j, c in enumerate(coeffs) if c) or "0"
    n = 0
    while p * n + p - 1 <= min(nmax, xi.truncation):
        total = sum(c * xi[p * n + j] for j, c in enumerate(coeffs) if c)
        witnesses += 1
        if total % p:
            return VerificationReport(
                claim=f"relation [{label}] vanishes mod {p}",
                range_checked=f"r={r}, indices <= {nmax}",
                passed=False,
                witnesses=witnesses,
                counterexample=f"n={n}: sum = {total % p} mod {p}",
            )
        n += 1
    return VerificationReport(
        claim=f"relation [{label}] vanishes mod {p}",
        range_checked=f"r={r}, indices <= {nmax}",
        passed=True,
        witnesses=witnesses,
    )


def verify_congruence(
    p: int,
    r: int,
    s: int,
    m: int,
    nmax: int,
    force: bool = False,
    xi: XiSequence | None = None,
) -> VerificationReport:
    """Check sum((-1)**j comb(s, j) xi_r(p n + m - j)) = 0 mod p for all
    n with p n + m <= nmax.  Indices below zero contribute nothing.

    m must lie in T*(p, r, s) unless force is set; forcing exists to
    explore residues the guarantee does not cover.
    """
    _require_modulus(p)
    _require_r(p, r)
    if not 0 <= s < p:
        raise BadParams(f"s must be a residue in [0, p-1], got {s}")
    if not 0 <= m < p:
        raise BadParams(f"m must be a residue in [0, p-1], got {m}")
    ts = t_star(p, r, s)
    if m not in ts and not force:
        raise NotInTStar(
            f"m={m} is not in T*({p},{r},{s}) = {list(ts.members)}; "
            "pass force to check anyway"
        )
    if xi is None:
        xi = xi_r(r, nmax)
    claim = f"sum_j (-1)^j C({s},j) xi_{r}({p}n+{m}-j) = 0 mod {p}"
    witnesses = 0
    n = 0
    while p * n + m <= min(nmax, xi.truncation):
        total = 0
        for j in range(s + 1):
            sign = -1 if j % 2 else 1
            total += sign * comb(s, j) * xi[p * n + m - j]
        witnesses += 1
        if total % p:
            return VerificationReport(
                claim=claim,
                range_checked=f"pn+m <= {nmax}",
                passed=False,
                witnesses=witnesses,
                counterexample=f"n={n}: sum = {total % p} mod {p}",
            )
        n += 1
    return VerificationReport(
        claim=claim,
        range_checked=f"pn+m <= {nmax}",
        passed=True,
        witnesses=witnesses,
    )


def relation_family(p: int, r: int) -> list[CongruenceRelation]:
    """The closed-form relations at m = p - 1.

    For each s in [0, p-2] whose shifted discriminant
    -24(1+s)/r + 1 is a nonresidue or zero mod p, the alternating
    binomial vector c[p-1-j] = (-1)**j comb(s, j) is a relation.  There
    are always (p+1)/2 of them and they are linearly independent.
    """
    _require_modulus(p)
    _require_r(p, r)
    rinv = pow(r % p, -1, p)
    out: list[CongruenceRelation] = []
    m = p - 1
    for s in range(p - 1):
        disc = (-24 * (1 + s) * rinv + 1) % p
        if legendre(disc, p) == 1:
            continue
        coeffs = [0] * p
        for j in range(s + 1):
            coeffs[m - j] = (-comb(s, j)) % p if j % 2 else comb(s, j) % p
        out.append(
            CongruenceRelation(p, r, tuple(coeffs), source="binomial", s=s, m=m)
        )
    if len(out) != (p + 1) // 2:
        raise AssertionError(
            f"family size {len(out)} != (p+1)/2 for p={p}, r={r}"
        )
    reducer = _RowReducer(p)
    for rel in out:
        reducer.add(rel.coeffs)
    if reducer.rank != len(out):
        raise AssertionError(f"family is linearly dependent for p={p}, r={r}")
    return out


class _RowReducer:
    """Incremental reduced row echelon form over F_p.

    Deterministic: pivots are the first nonzero column of each reduced
    row, rows kept sorted by pivot column, every pivot normalized to 1
    and eliminated from all other rows.
    """

    def __init__(self, p: int) -> None:
        self.p = p
        self.rows: list[tuple[int, list[int]]] = []  # (pivot_col, row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        v = [c % p for c in vec]
        for col, row in self.rows:
            f = v[col]
            if f:
                for k in range(col, len(v)):
                    if row[k]:
                        v[k] = (v[k] - f * row[k]) % p
        return v

    def add(self, vec: Sequence[int]) -> bool:
        """Reduce and insert; returns True when the rank grew."""
        p = self.p
        v = self.reduce(vec)
        pivot = next((k for k, c in enumerate(v) if c), None)
        if pivot is None:
            return False
        inv = pow(v[pivot], -1, p)
        v = [(c * inv) % p for c in v]
        for col, row in self.rows:
            f = row[pivot]
            if f:
                for k in range(len(row)):
                    if v[k]:
                        row[k] = (row[k] - f * v[k]) % p
        self.rows.append((pivot, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    def in_span(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def nullspace_basis(self, width: int) -> list[list[int]]:
        """Vectors v with row . v = 0 for every stored row, one per free
        column, in ascending free-column order."""
        p = self.p
        pivot_cols = {col for col, _ in self.rows}
        basis = []
        for free in range(width):
            if free in pivot_cols:
                continue
            v = [0] * width
            v[free] = 1
            for col, row in self.rows:
                v[col] = (-row[free]) % p
            basis.append(v)
        return basis


def relation_space(p: int, r: int, rows: int, nmax: int) -> RelationSpace:
    """Nullspace of the first `rows` witness rows M[n] = xi_r(pn + .) mod p.

    Returns the basis (source "nullspace"), the dimension, and the row
    count at which the dimension last changed, so callers can judge
    stabilization.  Dimension is non-increasing in rows by construction.
    """
    _require_modulus(p)
    _require_r(p, r)
    if rows < 1:
        raise InsufficientData("need at least one witness row")
    if rows * p - 1 > nmax:
        raise InsufficientData(
            f"rows={rows} needs xi indices through {rows * p - 1} > nmax={nmax}"
        )
    xi = xi_r(r, nmax)
    reducer = _RowReducer(p)
    last_change = 0
    for n in range(rows):
        vec = [xi[p * n + j] % p for j in range(p)]
        if reducer.add(vec):
            last_change = n + 1  # 1-based row count at the change
    basis = tuple(
        CongruenceRelation(p, r, tuple(v), source="nullspace")
        for v in reducer.nullspace_basis(p)
    )
    return RelationSpace(
        p=p,
        r=r,
        rows_used=rows,
        basis=basis,
        dimension=p - reducer.rank,
        last_change_row=last_change,
    )


def membership(space: RelationSpace, rel: CongruenceRelation) -> bool:
    """Whether rel lies in the span of space.basis over F_p."""
    if rel.p != space.p:
        raise DimensionMismatch(f"relation mod {rel.p} vs space mod {space.p}")
    if len(rel.coeffs) != space.p:
        raise DimensionMismatch("relation vector has the wrong length")
    reducer = _RowReducer(space.p)
    for b in space.basis:
        reducer.add(b.coeffs)
    return reducer.in_span(rel.coeffs)


def known_small_relations(p: int, r: int) -> list[CongruenceRelation]:
    """Short relations observed for small moduli, by coefficient vector.

    Used for reporting: each is re-verified numerically and tested for
    membership in the measured relation space, never assumed.
    """
    table: dict[tuple[int, int], list[tuple[int, ...]]] = {
        (5, 1): [(0, -2, 1, 0, 0)],
        (11, 1): [(0, 0, 0, 2, -3, 0, 0, 1, 0, 0, 0)],
        (5, -1): [(0, 0, -3, 1, 0), (0, -2, 0, 1, 0)],
    }
    out = []
    for coeffs in table.get((p, r), []):
        out.append(
            CongruenceRelation(p, r, tuple(c % p for c in coeffs), source="reported")
        )
    return out

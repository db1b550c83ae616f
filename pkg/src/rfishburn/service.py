"""HTTP service over the exact-arithmetic core.

The xi tables are the expensive shared state: seconds of bigint work
that every congruence or relation query then reuses.  Running a
long-lived process with the module-level caches warm makes repeated
queries cheap, so the service owns the handlers and the CLI stays a
thin client, calling handle_* in process or POSTing to a running
server.

All request and response bodies are JSON-safe: sequence values travel
as decimal strings because they outgrow every fixed-width integer type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import congruence, dissection, fishburn
from .reports import VerificationReport

__all__ = [
    "ClaimResult",
    "RelationsRequest",
    "RelationsResponse",
    "SetsRequest",
    "SetsResponse",
    "USAGE_ERRORS",
    "VerifyRequest",
    "VerifyResponse",
    "XiRequest",
    "XiResponse",
    "app",
    "handle_relations",
    "handle_sets",
    "handle_verify",
    "handle_xi",
]

DEFAULT_NMAX_UNIT_R = 500
DEFAULT_NMAX_OTHER_R = 200
DEFAULT_ROWS = 40
DEFAULT_DISSECTION_DEPTH = 4
GAMMA_IDENTITY_DEPTH = 2
INVERSION_DEPTH = 6
GLAISHER_CHECK_CAP = 60
STABLE_WINDOW = 20

# fixed probe vector for the triangular-inversion check: the identity is
# linear in X, so any deterministic vector with varied entries exercises it
INVERSION_X = (1, Fraction(1, 2), -3, Fraction(7, 24), 2, 0, 1)

USAGE_ERRORS = (
    congruence.BadParams,
    congruence.InsufficientData,
    congruence.NotInTStar,
    fishburn.ZeroR,
    ValueError,
)


def default_nmax(r: int) -> int:
    return DEFAULT_NMAX_UNIT_R if r in (1, -1) else DEFAULT_NMAX_OTHER_R


class XiRequest(BaseModel):
    r: int = 1
    n: int | None = Field(default=None, ge=0)
    check: bool = False


class XiResponse(BaseModel):
    r: int
    n: int
    values: list[str]
    check_passed: bool | None = None
    check_range: int | None = None


class SetsRequest(BaseModel):
    p: int
    r: int = 1
    s: int = 0


class SetsResponse(BaseModel):
    p: int
    r: int
    s: int
    s_set: list[int]
    t_set: list[int]
    s_star: list[int]
    t_star: list[int]
    t_star_vacuous: bool


class ClaimResult(BaseModel):
    claim: str
    range: str
    passed: bool
    witnesses: int
    counterexample: str | None = None

    @classmethod
    def from_report(cls, rep: VerificationReport) -> "ClaimResult":
        return cls(
            claim=rep.claim,
            range=rep.range_checked,
            passed=rep.passed,
            witnesses=rep.witnesses,
            counterexample=rep.counterexample,
        )


class VerifyRequest(BaseModel):
    scope: Literal["theorem", "corollary", "dissection", "all"] = "all"
    p: int = 5
    r: int = 1
    s: int = 0
    m: int | None = None
    n: int | None = Field(default=None, ge=1, description="dissection depth")
    nmax: int | None = Field(default=None, ge=0)
    force: bool = False


class VerifyResponse(BaseModel):
    scope: str
    p: int
    r: int
    s: int
    nmax: int
    results: list[ClaimResult]
    passed: bool


class RelationsRequest(BaseModel):
    p: int
    r: int = 1
    rows: int = DEFAULT_ROWS
    nmax: int | None = Field(default=None, ge=0)


class RelationVector(BaseModel):
    coeffs: list[int]
    source: str
    s: int | None = None
    m: int | None = None
    description: str


class KnownRelationVerdict(BaseModel):
    description: str
    holds: bool
    in_space: bool


class RelationsResponse(BaseModel):
    p: int
    r: int
    rows_used: int
    nmax: int
    dimension: int
    conjectured_dimension: int
    dimension_matches_conjecture: bool
    last_change_row: int
    stabilized: bool
    basis: list[RelationVector]
    family: list[RelationVector]
    family_in_space: bool
    known: list[KnownRelationVerdict]


def _vector(rel: congruence.CongruenceRelation) -> RelationVector:
    return RelationVector(
        coeffs=list(rel.coeffs),
        source=rel.source,
        s=rel.s,
        m=rel.m,
        description=rel.describe(),
    )


def handle_xi(req: XiRequest) -> XiResponse:
    n = req.n if req.n is not None else default_nmax(req.r)
    seq = fishburn.xi_r(req.r, n)
    check_passed = None
    check_range = None
    if req.check:
        if req.r != 1:
            raise congruence.BadParams("the cross-check route exists only for r = 1")
        check_range = min(n, GLAISHER_CHECK_CAP)
        other = fishburn.xi_via_glaisher(check_range)
        check_passed = other.values == seq.values[: check_range + 1]
    return XiResponse(
        r=req.r,
        n=n,
        values=[str(v) for v in seq.values],
        check_passed=check_passed,
        check_range=check_range,
    )


def handle_sets(req: SetsRequest) -> SetsResponse:
    s_plain = congruence.s_set(req.p)
    t_plain = congruence.t_set(req.p)
    s_starred = congruence.s_star(req.p, req.r, req.s)
    t_starred = congruence.t_star(req.p, req.r, req.s)
    return SetsResponse(
        p=req.p,
        r=req.r,
        s=req.s,
        s_set=list(s_plain.members),
        t_set=list(t_plain.members),
        s_star=list(s_starred.members),
        t_star=list(t_starred.members),
        t_star_vacuous=not s_starred.members,
    )


def _verify_theorem_scope(req: VerifyRequest, nmax: int) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    if req.m is not None:
        out.append(
            congruence.verify_congruence(
                req.p, req.r, req.s, req.m, nmax, force=req.force
            )
        )
        return out
    ts = congruence.t_star(req.p, req.r, req.s)
    if not ts.members:
        out.append(
            VerificationReport(
                claim=f"T*({req.p},{req.r},{req.s}) is empty",
                range_checked="nothing to check",
                passed=True,
                witnesses=0,
            )
        )
        return out
    for m in ts.members:
        out.append(congruence.verify_congruence(req.p, req.r, req.s, m, nmax))
    return out


def _verify_corollary_scope(req: VerifyRequest, nmax: int) -> list[VerificationReport]:
    fam = congruence.relation_family(req.p, req.r)
    out = [
        VerificationReport(
            claim="closed-form family has (p+1)/2 independent relations",
            range_checked=f"p={req.p}, r={req.r}",
            passed=True,
            witnesses=len(fam),
        )
    ]
    for rel in fam:
        out.append(congruence.verify_relation(req.p, req.r, rel.coeffs, nmax))
    return out


def _verify_dissection_scope(req: VerifyRequest) -> list[VerificationReport]:
    depth = req.n if req.n is not None else DEFAULT_DISSECTION_DEPTH
    out = [
        dissection.verify_alpha_i0(req.p, depth),
        dissection.verify_alpha_vanishing(req.p, depth),
        dissection.verify_alpha_stability(req.p, depth),
    ]
    for i in range(req.p):
        out.append(dissection.verify_gamma_identity(req.p, i, GAMMA_IDENTITY_DEPTH))
    out.append(
        dissection.verify_triangular_inversion(
            req.p, Fraction(1, 24), req.p // 24, INVERSION_X, INVERSION_DEPTH
        )
    )
    return out


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    nmax = req.nmax if req.nmax is not None else default_nmax(req.r)
    reports: list[VerificationReport] = []
    if req.scope in ("theorem", "all"):
        reports.extend(_verify_theorem_scope(req, nmax))
    if req.scope in ("corollary", "all"):
        reports.extend(_verify_corollary_scope(req, nmax))
    if req.scope in ("dissection", "all"):
        reports.extend(_verify_dissection_scope(req))
    return VerifyResponse(
        scope=req.scope,
        p=req.p,
        r=req.r,
        s=req.s,
        nmax=nmax,
        results=[ClaimResult.from_report(rep) for rep in reports],
        passed=all(rep.passed for rep in reports),
    )


def handle_relations(req: RelationsRequest) -> RelationsResponse:
    if req.rows < 1:
        raise congruence.InsufficientData("rows must be >= 1")
    need = req.rows * req.p + req.p - 1
    nmax = req.nmax if req.nmax is not None else max(default_nmax(req.r), need)
    space = congruence.relation_space(req.p, req.r, req.rows, nmax)
    fam = congruence.relation_family(req.p, req.r)
    family_in = all(congruence.membership(space, rel) for rel in fam)
    known = []
    for rel in congruence.known_small_relations(req.p, req.r):
        rep = congruence.verify_relation(req.p, req.r, rel.coeffs, nmax)
        known.append(
            KnownRelationVerdict(
                description=rel.describe(),
                holds=rep.passed,
                in_space=congruence.membership(space, rel),
            )
        )
    conjectured = (req.p + 1) // 2
    return RelationsResponse(
        p=req.p,
        r=req.r,
        rows_used=space.rows_used,
        nmax=nmax,
        dimension=space.dimension,
        conjectured_dimension=conjectured,
        dimension_matches_conjecture=space.dimension == conjectured,
        last_change_row=space.last_change_row,
        stabilized=space.stabilized(STABLE_WINDOW),
        basis=[_vector(rel) for rel in space.basis],
        family=[_vector(rel) for rel in fam],
        family_in_space=family_in,
        known=known,
    )


app = FastAPI(
    title="rfishburn",
    description="Exact Fishburn-sequence congruences, dissections, relation spaces",
    version="0.1.0",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/xi", response_model=XiResponse)
def xi_endpoint(req: XiRequest) -> XiResponse:
    try:
        return handle_xi(req)
    except USAGE_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/sets", response_model=SetsResponse)
def sets_endpoint(req: SetsRequest) -> SetsResponse:
    try:
        return handle_sets(req)
    except USAGE_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    try:
        return handle_verify(req)
    except USAGE_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/relations", response_model=RelationsResponse)
def relations_endpoint(req: RelationsRequest) -> RelationsResponse:
    try:
        return handle_relations(req)
    except USAGE_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))

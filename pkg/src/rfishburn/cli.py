"""Command line client for the service handlers.

Runs in process by default; --url points it at a running server
instead, with identical request and response bodies.  Exit codes:
0 all checks pass, 1 a verification failed, 2 usage or parameter
error.  Reports go to stdout (or --out), diagnostics to stderr.

JSON output is canonical: keys sorted, two-space indent, sequence
values as decimal strings, no floats, so byte-identical round trips
are just json.loads followed by the same dumps.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from .service import (
    DEFAULT_ROWS,
    RelationsRequest,
    RelationsResponse,
    SetsRequest,
    SetsResponse,
    USAGE_ERRORS,
    VerifyRequest,
    VerifyResponse,
    XiRequest,
    XiResponse,
    handle_relations,
    handle_sets,
    handle_verify,
    handle_xi,
)

__all__ = ["build_parser", "canonical_json", "main"]

_HANDLERS = {
    "xi": handle_xi,
    "sets": handle_sets,
    "verify": handle_verify,
    "relations": handle_relations,
}
_RESPONSES = {
    "xi": XiResponse,
    "sets": SetsResponse,
    "verify": VerifyResponse,
    "relations": RelationsResponse,
}


class RemoteError(Exception):
    """Non-200 answer from a remote service."""


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfishburn",
        description="Exact Fishburn-sequence congruences, dissections, "
        "and mod-p relation spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser, default_format: str) -> None:
        sp.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default=default_format,
            help="output format (csv is limited to sequence dumps)",
        )
        sp.add_argument("--out", default=None, help="write the report to this path")
        sp.add_argument(
            "--url",
            default=None,
            help="base URL of a running service; default computes in process",
        )

    sp = sub.add_parser("xi", help="emit xi_r(0..n)")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--n", type=int, default=None, help="table length; default 500 for r=+-1, else 200")
    sp.add_argument(
        "--check",
        action="store_true",
        help="cross-check the table against the Glaisher-number route (r=1 only)",
    )
    add_common(sp, "text")

    sp = sub.add_parser("sets", help="residue sets S, T, S*, T* mod p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--s", type=int, default=0)
    add_common(sp, "text")

    sp = sub.add_parser("verify", help="run congruence and identity checks")
    sp.add_argument(
        "--scope",
        choices=("theorem", "corollary", "dissection", "all"),
        default="all",
    )
    sp.add_argument("--p", type=int, default=5)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--m", type=int, default=None, help="single residue; default all of T*")
    sp.add_argument("--n", type=int, default=None, help="dissection depth; default 4")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument(
        "--force",
        action="store_true",
        help="check residues outside T* too",
    )
    add_common(sp, "json")

    sp = sub.add_parser("relations", help="measure the mod-p relation space")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--rows", type=int, default=DEFAULT_ROWS)
    sp.add_argument("--nmax", type=int, default=None)
    add_common(sp, "json")

    return parser


def _build_request(args: argparse.Namespace) -> BaseModel:
    if args.command == "xi":
        return XiRequest(r=args.r, n=args.n, check=args.check)
    if args.command == "sets":
        return SetsRequest(p=args.p, r=args.r, s=args.s)
    if args.command == "verify":
        return VerifyRequest(
            scope=args.scope,
            p=args.p,
            r=args.r,
            s=args.s,
            m=args.m,
            n=args.n,
            nmax=args.nmax,
            force=args.force,
        )
    if args.command == "relations":
        return RelationsRequest(p=args.p, r=args.r, rows=args.rows, nmax=args.nmax)
    raise AssertionError(f"unknown command {args.command}")


def _dispatch(command: str, req: BaseModel, url: str | None) -> BaseModel:
    if url is None:
        return _HANDLERS[command](req)
    import httpx

    resp = httpx.post(
        url.rstrip("/") + "/" + command, json=req.model_dump(), timeout=600.0
    )
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise RemoteError(f"{resp.status_code}: {detail}")
    return _RESPONSES[command].model_validate(resp.json())


def _fmt_set(members: list[int]) -> str:
    return "{" + ", ".join(str(m) for m in members) + "}"


def _render_text(command: str, resp: BaseModel) -> str:
    lines: list[str] = []
    if command == "xi":
        assert isinstance(resp, XiResponse)
        for n, v in enumerate(resp.values):
            lines.append(f"{n}, {v}")
        if resp.check_passed is not None:
            verdict = "agrees" if resp.check_passed else "DISAGREES"
            lines.append(
                f"# Glaisher-route cross-check {verdict} through n = {resp.check_range}"
            )
    elif command == "sets":
        assert isinstance(resp, SetsResponse)
        lines.append(f"p = {resp.p}, r = {resp.r}, s = {resp.s}")
        lines.append(f"S  = {_fmt_set(resp.s_set)}")
        lines.append(f"T  = {_fmt_set(resp.t_set)}")
        lines.append(f"S* = {_fmt_set(resp.s_star)}")
        lines.append(f"T* = {_fmt_set(resp.t_star)}")
        if resp.t_star_vacuous:
            lines.append("# S* is empty, so T* is vacuously every residue")
    elif command == "verify":
        assert isinstance(resp, VerifyResponse)
        lines.append(
            f"verify scope={resp.scope} p={resp.p} r={resp.r} s={resp.s} nmax={resp.nmax}"
        )
        for res in resp.results:
            tag = "PASS" if res.passed else "FAIL"
            line = f"{tag}  {res.claim} [{res.range}; witnesses={res.witnesses}]"
            if res.counterexample:
                line += f" counterexample: {res.counterexample}"
            lines.append(line)
        lines.append(
            f"RESULT: {'PASS' if resp.passed else 'FAIL'} ({len(resp.results)} claims)"
        )
    elif command == "relations":
        assert isinstance(resp, RelationsResponse)
        lines.append(
            f"relation space p={resp.p} r={resp.r} rows={resp.rows_used} nmax={resp.nmax}"
        )
        match = "matches" if resp.dimension_matches_conjecture else "differs from"
        lines.append(
            f"dimension = {resp.dimension} ({match} conjectured (p+1)/2 = "
            f"{resp.conjectured_dimension})"
        )
        stab = "yes" if resp.stabilized else "NO"
        lines.append(
            f"last dimension change at row {resp.last_change_row}; "
            f"stable over the final rows: {stab}"
        )
        lines.append("basis:")
        for vec in resp.basis:
            lines.append(f"  {vec.coeffs}")
        lines.append(
            f"closed-form family ({len(resp.family)} relations) inside the space: "
            f"{'yes' if resp.family_in_space else 'NO'}"
        )
        for k in resp.known:
            lines.append(
                f"known: {k.description} holds={'yes' if k.holds else 'NO'} "
                f"in-space={'yes' if k.in_space else 'NO'}"
            )
    return "\n".join(lines) + "\n"


def _render(command: str, resp: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(resp.model_dump())
    if fmt == "csv":
        if command != "xi":
            raise ValueError("csv output is limited to sequence dumps (xi)")
        assert isinstance(resp, XiResponse)
        rows = ["n,value"] + [f"{n},{v}" for n, v in enumerate(resp.values)]
        return "\n".join(rows) + "\n"
    return _render_text(command, resp)


def _exit_code(command: str, resp: BaseModel) -> int:
    if command == "verify":
        assert isinstance(resp, VerifyResponse)
        return 0 if resp.passed else 1
    if command == "xi":
        assert isinstance(resp, XiResponse)
        return 1 if resp.check_passed is False else 0
    if command == "relations":
        assert isinstance(resp, RelationsResponse)
        return 1 if any(not k.holds for k in resp.known) else 0
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code

    if args.format == "csv" and args.command != "xi":
        print("error: csv output is limited to sequence dumps (xi)", file=sys.stderr)
        return 2

    try:
        req = _build_request(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        resp = _dispatch(args.command, req, args.url)
    except RemoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        rendered = _render(args.command, resp, args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.out:
        Path(args.out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return _exit_code(args.command, resp)


if __name__ == "__main__":
    sys.exit(main())

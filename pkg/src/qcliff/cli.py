"""Command-line client for the verification service.

Subcommands map one-to-one onto service endpoints.  By default the request is
dispatched through an in-process ASGI transport (no network, fully
deterministic); pass --server to target a running instance instead.

Exit codes: 0 all assertions hold, 1 an assertion failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    from .service.app import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://qcliff.service"
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def canonical_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


# -- text rendering ----------------------------------------------------------


def _render_suite(payload: dict) -> str:
    lines = []
    for name, body in payload["suites"].items():
        for assertion in body["assertions"]:
            mark = "PASS" if assertion["ok"] else "FAIL"
            lines.append(f"[{mark}] {name}: {assertion['id']}")
        for finding in body["findings"]:
            lines.append(f"[FINDING] {name}: {finding['id']}")
    counts = payload["counts"]
    lines.append(
        f"{counts['assertions']} assertions, {counts['failures']} failures, "
        f"{counts['findings']} findings"
    )
    return "\n".join(lines)


def _render_generic(kind: str, ok: bool, payload: dict) -> str:
    lines = [f"[{'PASS' if ok else 'FAIL'}] {kind}"]
    for key, value in payload.items():
        if isinstance(value, (bool, int, float, str)) or value is None:
            lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def _render(document: dict) -> str:
    kind = document.get("kind")
    payload = document.get("payload", {})
    if kind == "suite":
        return _render_suite(payload)
    if kind == "investigate":
        lines = []
        for assertion in payload["assertions"]:
            mark = "PASS" if assertion["ok"] else "FAIL"
            lines.append(f"[{mark}] {assertion['id']}")
        for finding in payload["findings"]:
            lines.append(f"[FINDING] {finding['id']}")
        return "\n".join(lines)
    if kind == "expr":
        if payload.get("kind") == "verdict":
            verdict = "holds" if payload["holds"] else "fails"
            return f"{payload['pretty']}  ->  {verdict}"
        return f"{payload['pretty']}  ->  value (see --json)"
    return _render_generic(kind or "?", document.get("ok", False), payload)


# -- argument plumbing -------------------------------------------------------


def _coeff_list(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated values")
    return parts


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--out", metavar="PATH", help="also write the JSON report to a file")
    parser.add_argument("--server", metavar="URL", help="target a running service instead of in-process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcliff",
        description="Exact verification of clock/shift operator algebras and GL_w(2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="emit generator matrices as sparse JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=4, choices=(2, 4))
    _add_common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--suite", default="all")
    p.add_argument("--coeffs", type=_coeff_list, metavar="x,y,X,Y")
    p.add_argument("--coeffs2", type=_coeff_list, metavar="x,y,X,Y")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--two-j", type=int, default=10, dest="two_j")
    p.add_argument("--q", action="append", help="q grid entry (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", default="exact", choices=("exact", "float", "symbolic"))
    _add_common(p)

    for name, extra_k in (("qdet", False), ("power", True), ("plane", False), ("symplectic", False)):
        p = sub.add_parser(name, help=f"run the {name} check for one matrix")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--coeffs", type=_coeff_list, metavar="x,y,X,Y")
        if extra_k:
            p.add_argument("--k", type=int, default=2)
        _add_common(p)

    p = sub.add_parser("investigate", help="alternative-diagonal closure investigation")
    p.add_argument("--n", type=int)
    _add_common(p)

    p = sub.add_parser("su2", help="q-deformed angular momentum residuals")
    p.add_argument("--two-j", type=int, required=True, dest="two_j")
    p.add_argument("--q", default="2", help="rational, phase:a/b, or omega:n")
    _add_common(p)

    p = sub.add_parser("weyl", help="clock/shift exponential identities")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("expr", help="evaluate a relation expression")
    p.add_argument("text", help="expression, e.g. 'a*b == q*b*a'")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--coeffs", type=_coeff_list, metavar="x,y,X,Y")
    p.add_argument("--coeffs2", type=_coeff_list, metavar="x,y,X,Y")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--backend", default="exact", choices=("exact", "float", "symbolic"))
    _add_common(p)

    p = sub.add_parser("serve", help="run the verification service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_for(args: argparse.Namespace) -> tuple[str, dict]:
    cmd = args.command
    if cmd == "gens":
        return "/api/gens", {"n": args.n, "m": args.m}
    if cmd == "verify":
        return "/api/suite", {
            "suite": args.suite,
            "n": args.n,
            "coeffs": args.coeffs,
            "coeffs2": args.coeffs2,
            "k": args.k,
            "two_j": args.two_j,
            "q": args.q,
            "seed": args.seed,
            "backend": args.backend,
        }
    if cmd in ("qdet", "plane", "symplectic"):
        return f"/api/{cmd}", {"n": args.n, "coeffs": args.coeffs}
    if cmd == "power":
        return "/api/power", {"n": args.n, "coeffs": args.coeffs, "k": args.k}
    if cmd == "investigate":
        return "/api/investigate", {"n": args.n}
    if cmd == "su2":
        return "/api/su2", {"two_j": args.two_j, "q": args.q}
    if cmd == "weyl":
        return "/api/weyl", {"n": args.n}
    if cmd == "expr":
        return "/api/expr", {
            "text": args.text,
            "n": args.n,
            "coeffs": args.coeffs,
            "coeffs2": args.coeffs2,
            "k": args.k,
            "backend": args.backend,
        }
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    path, payload = _request_for(args)
    try:
        response = _post(args.server, path, payload)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 2

    if response.status_code == 422:
        detail = response.json().get("detail", "invalid request")
        print(f"error: {detail}", file=sys.stderr)
        return 2
    if response.status_code != 200:
        print(f"error: service returned {response.status_code}", file=sys.stderr)
        return 2

    document = response.json()
    rendered = canonical_json(document) if args.json else _render(document) + "\n"
    sys.stdout.write(rendered)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(canonical_json(document))
    return 0 if document.get("ok") else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: decide, certify, hilbert, scan, verify.  JSON output by default
(--format text for tables).  Exit codes: 0 = rational / all checks pass,
1 = not rational, 2 = error.  Search budgets are read from the environment
(CONICERT_DESCENT_HEIGHT, CONICERT_FALLBACK_HEIGHT, CONICERT_QUADRIC_HEIGHT).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .config import SearchBudgets
from .decider import (
    Decision,
    build_parametrization,
    decide,
    point_on_X,
    scan,
)
from .errors import ConicertError, InvalidSpecError
from .hilbert import global_hilbert
from .quadfield import ext_hilbert, squarefree_core
from .rationals import format_rat, is_square, rat
from .sigma import (
    Report,
    verify_involution_and_invariance,
    verify_proof_chain_nonsquare,
    verify_proof_chain_square,
)
from .surface import SurfaceSpec


def _parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidSpecError(f"cannot parse rational number {text!r}") from exc


def _parse_c_range(text: str) -> List[Fraction]:
    """A c range: either "lo:hi" (inclusive integers) or a comma list."""
    if ":" in text:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = _parse_rat(lo_s), _parse_rat(hi_s)
        if lo.denominator != 1 or hi.denominator != 1:
            raise InvalidSpecError("range endpoints must be integers")
        return [Fraction(c) for c in range(int(lo), int(hi) + 1)]
    return [_parse_rat(part) for part in text.split(",")]


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines():
            print(line)


def _decision_text(decision: Decision) -> List[str]:
    lines = [f"spec: {decision.spec}", f"verdict: {decision.verdict}"]
    cert = decision.certificate.to_json()
    if decision.verdict == "rational":
        lines.append(f"route: {cert['construction_route']}")
        if cert["point"] is not None:
            lines.append("point: (" + ", ".join(cert["point"]) + ")")
        if cert.get("parametrization"):
            for name, expr in cert["parametrization"]["maps"].items():
                lines.append(f"{name} = {expr}")
    else:
        lines.append(f"failed condition: {cert['failed_condition']}")
        lines.append(f"obstruction: {cert['obstruction']}")
    for note in decision.notes:
        lines.append(f"note: {note}")
    return lines


def _cmd_decide(args, budgets: SearchBudgets, with_param: bool) -> int:
    spec = SurfaceSpec(
        _parse_rat(args.a), _parse_rat(args.b), _parse_rat(args.c), _parse_rat(args.d)
    )
    decision = decide(spec, budgets, build_param=with_param)
    _emit(decision.to_json(), args.format, lambda: _decision_text(decision))
    return decision.exit_code


def _cmd_hilbert(args, budgets: SearchBudgets) -> int:
    a = _parse_rat(args.a)
    b = _parse_rat(args.b)
    if a == 0 or b == 0:
        raise InvalidSpecError("hilbert symbol arguments must be nonzero")
    if args.ext is None:
        ram = global_hilbert(a, b)
        payload = {
            "a": format_rat(a),
            "b": format_rat(b),
            "symbol": "zero" if ram.is_empty else "nonzero",
            "ramified_places": ram.to_json(),
        }
        _emit(
            payload,
            args.format,
            lambda: [
                f"(a, b) = ({format_rat(a)}, {format_rat(b)})",
                f"symbol: {payload['symbol']}",
                "ramified places: " + (", ".join(payload["ramified_places"]) or "none"),
            ],
        )
        return 0
    K = squarefree_core(_parse_rat(args.ext))
    sym = ext_hilbert(a, b, K)
    payload = {"a": format_rat(a), "b": format_rat(b), "field": str(K)}
    payload.update(sym.to_json())
    _emit(
        payload,
        args.format,
        lambda: [
            f"(a, b) = ({format_rat(a)}, {format_rat(b)}) over {K}",
            f"symbol: {payload['value']}",
        ]
        + ([f"witness place: {payload['witness_place']}"] if payload["witness_place"] else []),
    )
    return 0


def _cmd_scan(args, budgets: SearchBudgets) -> int:
    kwargs = dict(family=args.family, jobs=args.jobs, budgets=budgets, d_rule=args.d)
    if args.family == "custom":
        if args.a is None or args.b is None or args.c_range is None:
            raise InvalidSpecError("custom scans need --a, --b, and --c")
        kwargs.update(
            a=_parse_rat(args.a), b=_parse_rat(args.b), c_values=_parse_c_range(args.c_range)
        )
    result = scan(**kwargs)
    payload = result.to_json()
    if args.report is not None:
        from .report import render_scan_report

        payload["report"] = render_scan_report(result, args.report, f"scan-{args.family}")
    def text():
        lines = [f"{format_rat(e.c)}\t{e.status}" + (f"\t{e.detail}" if e.detail else "")
                 for e in result.entries]
        lines.append("rational: " + ", ".join(payload["rational"]))
        lines.append("not rational: " + ", ".join(payload["not_rational"]))
        return lines

    _emit(payload, args.format, text)
    return 0


def _cmd_verify(args, budgets: SearchBudgets) -> int:
    spec = SurfaceSpec(
        _parse_rat(args.a), _parse_rat(args.b), _parse_rat(args.c), _parse_rat(args.d)
    )
    report = verify_involution_and_invariance(spec)
    if args.alpha is not None or args.beta is not None:
        if spec.b_square_root is None:
            if args.alpha is None or args.beta is None:
                raise InvalidSpecError("nonsquare b needs both --alpha and --beta")
            chain = verify_proof_chain_nonsquare(
                spec, _parse_rat(args.alpha), _parse_rat(args.beta)
            )
        else:
            if args.beta is None:
                raise InvalidSpecError("square b takes --beta only")
            chain = verify_proof_chain_square(spec, _parse_rat(args.beta))
        report = Report(checks=report.checks + chain.checks)
    elif spec.b_square_root is not None:
        chain = verify_proof_chain_square(spec, spec.b_square_root)
        report = Report(checks=report.checks + chain.checks)
    _emit(
        {"spec": spec.to_json(), "checks": report.to_json(), "all_passed": report.all_passed},
        args.format,
        lambda: [f"{c.check}: {'pass' if c.passed else 'fail'}" for c in report.checks],
    )
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicert",
        description="Exact rationality decisions and certificates for "
        "norm-form surface fields t1^2-a*t2^2=b, t3^2-a*t4^2=2c*t1+d.",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p):
        for name in ("a", "b", "c", "d"):
            p.add_argument(f"--{name}", required=True, help=f"coefficient {name} (p/q or integer)")

    p_decide = sub.add_parser("decide", help="decide rationality; exit 0/1/2")
    add_spec_args(p_decide)

    p_certify = sub.add_parser(
        "certify", help="decide and attach a verified parametrization"
    )
    add_spec_args(p_certify)

    p_hilbert = sub.add_parser("hilbert", help="Hilbert symbol over Q or Q(sqrt(m))")
    p_hilbert.add_argument("--a", required=True)
    p_hilbert.add_argument("--b", required=True)
    p_hilbert.add_argument("--ext", default=None, help="radicand m of Q(sqrt(m))")

    p_scan = sub.add_parser("scan", help="decide a one-parameter family")
    p_scan.add_argument("--family", choices=("ex22", "ex23", "custom"), default="custom")
    p_scan.add_argument("--a", default=None)
    p_scan.add_argument("--b", default=None)
    p_scan.add_argument("--c", dest="c_range", default=None, help="range lo:hi or comma list")
    p_scan.add_argument("--d", default="c", help="d as an expression in c")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument(
        "--report", default=None, help="directory for the CSV table and PNG figure"
    )

    p_verify = sub.add_parser("verify", help="symbolic identity checks")
    add_spec_args(p_verify)
    p_verify.add_argument("--alpha", default=None)
    p_verify.add_argument("--beta", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budgets = SearchBudgets.from_env()
    try:
        if args.command == "decide":
            return _cmd_decide(args, budgets, with_param=False)
        if args.command == "certify":
            return _cmd_decide(args, budgets, with_param=True)
        if args.command == "hilbert":
            return _cmd_hilbert(args, budgets)
        if args.command == "scan":
            return _cmd_scan(args, budgets)
        if args.command == "verify":
            return _cmd_verify(args, budgets)
        raise InvalidSpecError(f"unknown command {args.command}")
    except (ConicertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

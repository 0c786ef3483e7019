"""Command-line front end.

Examples::

    seifert-ph euler "SFS(g=2; b=0;)"
    seifert-ph covers-t1 "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"
    seifert-ph anosov --format json "SFS(g=0; b=-1; (7,1),(7,1),(7,1))"
    seifert-ph enumerate --max-alpha 9

Exit status: 0 success, 2 parse error, 3 precondition error, 1 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Dict, List, Optional, Sequence, Tuple

from . import coverings, decisions, groups
from .coverings import Covers, DoesNotCover
from .decisions import No, OutOfScope, Yes
from .errors import SeifertError, SfsSemanticError, SfsSyntaxError
from .invariants import (
    SeifertInvariant,
    classify_geometry,
    euler_number,
    normalize,
    reverse_orientation,
    same_manifold,
    unit_tangent_bundle,
)
from .syntax import parse_sfs, render_sfs

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

SFS_COMMANDS = (
    "normalize", "euler", "geometry", "covers-t1", "anosov", "ph", "turnover-ph",
    "horizontal", "milnor-wood", "pi1", "double-cover",
)


class InternalError(RuntimeError):
    pass


def _verdict_json(v) -> Dict:
    if isinstance(v, Covers):
        return {"kind": "yes", "degree": v.degree, "orientation": v.orientation.value}
    if isinstance(v, DoesNotCover):
        return {"kind": "no", "reason": v.reason}
    if isinstance(v, Yes):
        out = {"kind": "yes"}
        if v.witness is not None:
            out["degree"] = v.witness.degree
            out["orientation"] = v.witness.orientation.value
        if v.note:
            out["reason"] = v.note
        return out
    if isinstance(v, No):
        return {"kind": "no", "reason": v.reason}
    if isinstance(v, OutOfScope):
        return {"kind": "out_of_scope", "reason": v.reason}
    raise InternalError(f"unknown verdict {v!r}")


def _verdict_text(v) -> str:
    if isinstance(v, Covers):
        return f"Covers: degree {v.degree}, {v.orientation.value}"
    if isinstance(v, DoesNotCover):
        return f"DoesNotCover: {v.reason}"
    if isinstance(v, Yes):
        text = "Yes"
        if v.witness is not None:
            text += f": degree {v.witness.degree}, {v.witness.orientation.value}"
        return f"{text} ({v.note})" if v.note else text
    if isinstance(v, No):
        return f"No: {v.reason}"
    return f"OutOfScope: {v.reason}"


def _check_witness(m: SeifertInvariant, v) -> None:
    """Round-trip a covering witness: pushing ``m`` forward must give T^1(base)."""
    witness = v.witness if isinstance(v, Yes) else v
    if not isinstance(witness, Covers) or not m.base.orientable:
        return
    pushed = coverings.fiberwise_pushforward(normalize(m), witness.degree)
    target = unit_tangent_bundle(m.base)
    if witness.orientation is coverings.Orientation.REVERSING:
        target = reverse_orientation(target)
    if pushed != normalize(target):
        raise InternalError(f"covering witness {witness} does not reproduce the unit tangent bundle")


def _bool_verdict(ok: bool, yes: str, no: str) -> Dict:
    return {"kind": "yes", "reason": yes} if ok else {"kind": "no", "reason": no}


def _sfs_report(command: str, text: str, m: SeifertInvariant, args) -> Tuple[Dict, List[str]]:
    n = normalize(m)
    report = {
        "command": command,
        "input": text,
        "normalized": render_sfs(n),
        "euler": str(euler_number(m)),
        "geometry": classify_geometry(m.base).value,
    }
    lines: List[str]

    if command == "normalize":
        lines = [report["normalized"]]
    elif command == "euler":
        lines = [report["euler"]]
    elif command == "geometry":
        lines = [report["geometry"]]
    elif command == "double-cover":
        cover = coverings.orientation_double_cover(m)
        report["result"] = render_sfs(cover)
        lines = [report["result"]]
    elif command == "pi1":
        if not m.base.orientable or m.base.cone_orders:
            raise SeifertError("pi1 is only emitted for circle bundles over orientable surfaces")
        e = euler_number(m)
        pres = groups.circle_bundle_presentation(m.base.genus, e.numerator)
        report["result"] = pres.render()
        lines = [report["result"]]
    elif command == "horizontal":
        ok = decisions.horizontal_foliation_sufficient(m)
        report["verdict"] = _bool_verdict(
            ok,
            "sum of beta_i/alpha_i < 1: horizontal foliation guaranteed",
            "sum of beta_i/alpha_i >= 1: sufficient condition inconclusive",
        )
        lines = ["Yes: horizontal foliation guaranteed" if ok else "Inconclusive: sufficient condition fails"]
    elif command == "milnor-wood":
        ok = decisions.milnor_wood_necessary(m)
        report["verdict"] = _bool_verdict(
            ok,
            "|e| <= -chi_orb: necessary condition holds, inconclusive",
            "|e| > -chi_orb: no horizontal foliation",
        )
        lines = ["Holds: inconclusive" if ok else "Fails: no horizontal foliation"]
    else:
        decide = {
            "covers-t1": coverings.covers_unit_tangent_bundle,
            "anosov": decisions.admits_anosov,
            "ph": decisions.admits_transitive_ph,
            "turnover-ph": decisions.admits_ph_turnover,
        }[command]
        v = decide(m)
        _check_witness(m, v)
        report["verdict"] = _verdict_json(v)
        lines = [_verdict_text(v)]
    return report, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-ph",
        description="Seifert invariants, coverings of unit tangent bundles, and Anosov/PH verdicts.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SFS_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("sfs", help='Seifert invariant, e.g. "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"')
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = sub.add_parser("same", help="compare two invariants over hyperbolic bases")
    p.add_argument("sfs")
    p.add_argument("other")
    p.add_argument("--oriented", action="store_true", help="require an orientation-preserving homeomorphism")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = sub.add_parser("enumerate", help="turnover examples with horizontal foliations but no PH map")
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return parser


def _dispatch(args) -> Tuple[Dict, List[str]]:
    if args.command == "enumerate":
        if args.max_alpha < 2:
            raise SeifertError("--max-alpha must be >= 2")
        found = [render_sfs(m) for m in decisions.enumerate_turnover_gap_examples(args.max_alpha)]
        return {"command": "enumerate", "input": f"--max-alpha {args.max_alpha}", "results": found}, found
    if args.command == "same":
        m1, m2 = parse_sfs(args.sfs), parse_sfs(args.other)
        ok = same_manifold(m1, m2, oriented=args.oriented)
        report = {
            "command": "same",
            "input": f"{args.sfs} | {args.other}",
            "normalized": f"{render_sfs(normalize(m1))} | {render_sfs(normalize(m2))}",
            "verdict": _bool_verdict(ok, "same manifold", "different manifolds"),
        }
        return report, ["Yes" if ok else "No"]
    return _sfs_report(args.command, args.sfs, parse_sfs(args.sfs), args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, lines = _dispatch(args)
    except (SfsSyntaxError, SfsSemanticError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SeifertError as exc:
        print(f"precondition error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.format == "json":
        print(json.dumps(report, ensure_ascii=False, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_OK


def run(argv: Sequence[str]) -> Tuple[int, str, str]:
    """Run the CLI in-process and capture ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())

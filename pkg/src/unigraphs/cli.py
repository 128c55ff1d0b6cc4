"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 negative answer under
``--strict`` (or a failed verification), 3 internal route disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, _core, properties  # noqa: F401  (registers verify properties)
from .classes import classify, classify_sequence
from .decomposition import decompose, decompose_sequence
from .errors import CapExceeded, Graph6Error, RouteDisagreement, SequenceError, UnigraphsError
from .graph import Graph
from .oracle import MAX_N, PROPERTIES, realizations, verify
from .sequence import eg_profile, parse_sequence

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_INTERNAL = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def _sequence(text: str):
    try:
        return parse_sequence(text)
    except SequenceError as e:
        raise _Fail(EXIT_USAGE, f"parse error: {e}") from None


def _graph(text: str) -> Graph:
    try:
        return Graph.from_graph6(text.strip())
    except Graph6Error as e:
        raise _Fail(EXIT_USAGE, f"graph6 error at byte {e.offset}: {e}") from None


def _profile_dict(d) -> dict:
    prof = eg_profile(d)
    out = prof.to_dict()
    out["graphic"] = prof.graphic
    return out


def cmd_analyze(args) -> tuple[dict, int]:
    d = _sequence(_read(args.sequence))
    prof = eg_profile(d)
    report = {"input": d.to_text(), "n": d.n, "graphic": prof.graphic, "eg_profile": _profile_dict(d)}
    warnings = []
    code = EXIT_OK
    if prof.graphic:
        report["decomposition"] = decompose_sequence(d).to_dict()
        report["classes"] = classify_sequence(d)
        if d.n <= MAX_N:
            reals = realizations(d, args.limit)
            report["realizations"] = [g.to_graph6() for g in reals]
            report["classes"]["unigraphDeskScale"] = len(realizations(d)) == 1
        else:
            warnings.append(f"realizations skipped: n > {MAX_N}")
    elif args.strict:
        code = EXIT_NEGATIVE
    report["warnings"] = warnings
    return report, code


def cmd_classify(args) -> tuple[dict, int]:
    g = _graph(_read(args.graph6))
    rep = classify(g)
    out = {"input": g.to_graph6(), "degree_sequence": list(g.degree_sequence()), **rep.to_dict()}
    code = EXIT_NEGATIVE if args.strict and not rep["hereditaryUnigraph"] else EXIT_OK
    return out, code


def cmd_decompose(args) -> tuple[dict, int]:
    if args.sequence is not None:
        d = _sequence(_read(args.sequence))
        if not eg_profile(d).graphic:
            raise _Fail(EXIT_NEGATIVE if args.strict else EXIT_USAGE, f"{d.to_text()} is not graphic")
        return {"input": d.to_text(), "sequence_decomposition": decompose_sequence(d).to_dict()}, EXIT_OK
    if args.graph6 is None:
        raise _Fail(EXIT_USAGE, "decompose needs a graph6 string or --sequence")
    g = _graph(_read(args.graph6))
    return {"input": g.to_graph6(), "decomposition": decompose(g).to_dict()}, EXIT_OK


def cmd_realizations(args) -> tuple[dict, int]:
    d = _sequence(_read(args.sequence))
    graphic = eg_profile(d).graphic
    reals = realizations(d, args.limit)
    out = {
        "input": d.to_text(),
        "graphic": graphic,
        "count": len(realizations(d)) if graphic else 0,
        "realizations": [g.to_graph6() for g in reals],
    }
    return out, EXIT_NEGATIVE if args.strict and not graphic else EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.list or args.property is None:
        return {"properties": {k: p.description for k, p in sorted(PROPERTIES.items())}}, EXIT_OK
    if args.property not in PROPERTIES:
        raise _Fail(EXIT_USAGE, f"unknown property {args.property!r}; try --list")
    res = verify(args.property, args.max_n, jobs=args.jobs)
    return res.to_dict(meta=not args.no_meta), EXIT_OK if res.passed else EXIT_NEGATIVE


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict) and v or isinstance(v, (list, tuple)) and any(isinstance(x, (dict, list)) for x in v):
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            if isinstance(v, (dict, list, tuple)):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "-" if v is None else str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--strict", action="store_true", help="exit 2 on a negative answer")
    common.add_argument("--no-meta", action="store_true", help="omit version/timing metadata")

    p = argparse.ArgumentParser(prog="unigraphs", description="Hereditary unigraph toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report on a degree sequence")
    a.add_argument("sequence", help='e.g. "4,2,2,2,2,2" or "4,2^5"; "-" reads stdin')
    a.add_argument("--limit", type=int, default=None, help="max realizations listed")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", parents=[common], help="class report for a graph6 graph")
    c.add_argument("graph6")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("decompose", parents=[common], help="canonical decomposition")
    d.add_argument("graph6", nargs="?")
    d.add_argument("--sequence", help="decompose a degree sequence instead")
    d.set_defaults(func=cmd_decompose)

    r = sub.add_parser("realizations", parents=[common], help="non-isomorphic realizations (n <= 8)")
    r.add_argument("sequence")
    r.add_argument("--limit", type=int, default=None)
    r.set_defaults(func=cmd_realizations)

    v = sub.add_parser("verify", parents=[common], help="exhaustive property sweep")
    v.add_argument("property", nargs="?")
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--list", action="store_true", help="list property ids")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except RouteDisagreement as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CapExceeded, UnigraphsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if not args.no_meta:
        report["meta"] = {
            "version": __version__,
            "backend": _core.backend_name(),
            "elapsed_s": round(time.perf_counter() - t0, 4),
        }
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_text(report)))
    return code


if __name__ == "__main__":
    sys.exit(main())

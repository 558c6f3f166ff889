"""Command-line interface.

Results go to stdout, diagnostics to stderr. Exit codes: 0 for success
or a true answer, 1 for a false answer or a failed verification, 2 for
usage and input errors, 3 for a blown size or time budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .antichain import ChainCheck, PatternCheck, pi_seq, rho, verify_antichain, verify_chain
from .errors import BudgetExceededError, InvalidLayoutError
from .layout import (
    DEFAULT_SIZE_CAP,
    crossing_number,
    is_planar,
    min_crossing_layout,
    planar_layout,
)
from .perm import contains_pattern, standardize
from .render import to_svg, to_text, to_tikz
from .tanglegram import (
    Tanglegram,
    enumerate_tanglegrams,
    is_induced_sub,
    parse_tanglegram,
)

CENSUS_SIZE_CAP = 5


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tanglekit",
        description="Tanglegram toolkit: generate families, verify order relations, "
        "test planarity, and draw layouts.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print a member of a built-in permutation family")
    gsub = gen.add_subparsers(dest="family", required=True)
    for fam, blurb in (("rho", "the pairwise incomparable family"),
                       ("pi", "the nested family")):
        gp = gsub.add_parser(fam, help=blurb)
        gp.add_argument("index", type=int)

    ver = sub.add_parser("verify", help="run one of the family verifiers")
    vsub = ver.add_subparsers(dest="target", required=True)
    va = vsub.add_parser("antichain", help="pairwise incomparability on a prefix")
    va.add_argument("--max", dest="max_index", type=int, required=True)
    va.add_argument("--adjacent-only", action="store_true")
    va.add_argument("--timeout", type=float, default=None,
                    help="per-pair budget in seconds")
    va.add_argument("--format", choices=("text", "jsonl"), default="text")
    vc = vsub.add_parser("chain", help="nesting of consecutive members")
    vc.add_argument("--max", dest="max_index", type=int, required=True)
    vc.add_argument("--format", choices=("text", "jsonl"), default="text")

    pl = sub.add_parser("planar", help="decide planarity of a tanglegram file")
    pl.add_argument("file")
    pl.add_argument("--method", choices=("kuratowski", "oracle"), default="kuratowski")
    pl.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)

    cn = sub.add_parser("crossing-number", help="minimum crossings over all layouts")
    cn.add_argument("file")
    cn.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)

    ly = sub.add_parser("layout", help="draw a best layout of a tanglegram file")
    ly.add_argument("file")
    ly.add_argument("--emit", choices=("svg", "tikz", "text"), default="text")
    ly.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)

    pt = sub.add_parser("pattern", help="search a permutation pattern in a permutation")
    pt.add_argument("--pi", required=True, metavar="PERM", help="text permutation, e.g. (2,3,5,1)")
    pt.add_argument("--rho", required=True, metavar="PERM", help="pattern to look for")

    ind = sub.add_parser("induced", help="is the first tanglegram an induced subtanglegram of the second")
    ind.add_argument("sub_file")
    ind.add_argument("super_file")

    cs = sub.add_parser("census", help="count tanglegrams of one size, by crossing number")
    cs.add_argument("--size", type=int, required=True)
    cs.add_argument("--cap", type=int, default=CENSUS_SIZE_CAP)

    return p


def _read_tanglegram(path: str) -> Tanglegram:
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ValueError(f"{path}: expected exactly one tanglegram line, got {len(lines)}")
    return parse_tanglegram(lines[0])


def _emit_pattern_check(rec: PatternCheck, fmt: str) -> None:
    if fmt == "jsonl":
        print(json.dumps({
            "kind": "antichain-check", "i": rec.i, "j": rec.j, "sigma": rec.sigma,
            "witness": list(rec.witness) if rec.witness else None,
            "elapsed": round(rec.elapsed, 6),
        }))
    else:
        verdict = "ok" if rec.witness is None else f"witness={{{','.join(map(str, rec.witness))}}}"
        print(f"antichain pair ({rec.i},{rec.j}) sigma={rec.sigma}: {verdict} {rec.elapsed:.3f}s")


def _emit_chain_check(rec: ChainCheck, fmt: str) -> None:
    if fmt == "jsonl":
        print(json.dumps({
            "kind": "chain-check", "i": rec.i,
            "restriction_ok": rec.restriction_ok, "induced_ok": rec.induced_ok,
            "elapsed": round(rec.elapsed, 6),
        }))
    else:
        r = "ok" if rec.restriction_ok else "MISMATCH"
        s = "ok" if rec.induced_ok else "MISSING"
        print(f"chain step {rec.i}->{rec.i + 1}: restriction {r}, induced {s} {rec.elapsed:.3f}s")


def _cmd_gen(args) -> int:
    family = rho if args.family == "rho" else pi_seq
    print(family(args.index))
    return 0


def _cmd_verify(args) -> int:
    fmt = args.format
    if args.target == "antichain":
        report = verify_antichain(
            args.max_index,
            adjacent_only=args.adjacent_only,
            pair_timeout=args.timeout,
            on_check=lambda rec: _emit_pattern_check(rec, fmt),
        )
        summary = {
            "kind": "summary", "result": "PASS" if report.passed else "FAIL",
            "max": report.max_index, "adjacent_only": report.adjacent_only,
            "checks": len(report.checks),
        }
    else:
        report = verify_chain(
            args.max_index,
            on_check=lambda rec: _emit_chain_check(rec, fmt),
        )
        summary = {
            "kind": "summary", "result": "PASS" if report.passed else "FAIL",
            "max": report.max_index, "checks": len(report.checks),
        }
    if fmt == "jsonl":
        print(json.dumps(summary))
    else:
        print(f"{summary['result']} {args.target} max={args.max_index} checks={summary['checks']}")
    return 0 if report.passed else 1


def _cmd_planar(args) -> int:
    t = _read_tanglegram(args.file)
    ok = is_planar(t, args.method, cap=args.cap)
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_crossing_number(args) -> int:
    t = _read_tanglegram(args.file)
    print(crossing_number(t, cap=args.cap))
    return 0


def _cmd_layout(args) -> int:
    t = _read_tanglegram(args.file)
    lay = planar_layout(t, cap=args.cap)
    if lay is None:
        lay, _ = min_crossing_layout(t, cap=args.cap)
    if args.emit == "svg":
        sys.stdout.write(to_svg(lay))
    elif args.emit == "tikz":
        sys.stdout.write(to_tikz(lay))
    else:
        sys.stdout.write(to_text(lay))
    return 0


def _cmd_pattern(args) -> int:
    # any distinct-integer sequence works; containment only sees ranks
    pi = standardize(args.pi)
    pat = standardize(args.rho)
    witness = contains_pattern(pi, pat)
    if witness is None:
        print("none")
        return 1
    print("{" + ",".join(str(p) for p in witness) + "}")
    return 0


def _cmd_induced(args) -> int:
    sub = _read_tanglegram(args.sub_file)
    sup = _read_tanglegram(args.super_file)
    ok = is_induced_sub(sub, sup)
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_census(args) -> int:
    if args.size > args.cap:
        raise BudgetExceededError(
            f"census enumerates every tanglegram; size {args.size} is over the cap "
            f"{args.cap} (raise the cap to force it)",
            cap=args.cap,
        )
    reps = enumerate_tanglegrams(args.size)
    print(f"size {args.size}: {len(reps)} tanglegrams")
    hist: dict[int, int] = {}
    for t in reps:
        c = crossing_number(t, cap=max(args.size, DEFAULT_SIZE_CAP))
        hist[c] = hist.get(c, 0) + 1
    for c in sorted(hist):
        print(f"crossings {c}: {hist[c]}")
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "planar": _cmd_planar,
    "crossing-number": _cmd_crossing_number,
    "layout": _cmd_layout,
    "pattern": _cmd_pattern,
    "induced": _cmd_induced,
    "census": _cmd_census,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, InvalidLayoutError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a violation, 2 on any
malformed argument or shape literal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .harness import DEFAULT_MAX_SIZE, WITNESS_KINDS, find_witnesses, minimal_witness_size, verify_all
from .partitions import LiteralError, format_partition, parse_partition
from .positivity import necessary_condition_report, product_tails_check
from .shapes import SkewShape, overlap_profile, parse_shape, star_product
from .tableaux import (
    enumerate_lr_fillings,
    hybrid_filling,
    least_dominant_filling,
    lr_expand,
    most_dominant_filling,
)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _filling_json(f) -> dict:
    return {"rows": f.to_json(), "word": f.word_string(), "content": list(f.content)}


def _filling_text(f) -> str:
    # inner boxes drawn as dots
    return "\n".join(
        "  " + ". " * (s - 1) + " ".join(map(str, row)) for (s, _), row in zip(f.shape.row_intervals, f.rows)
    )


def cmd_expand(args) -> int:
    shape = parse_shape(args.shape)
    e = lr_expand(shape)
    _emit(args, {"shape": str(shape), "expansion": e.to_json()}, str(e))
    return 0


def cmd_support(args) -> int:
    shape = parse_shape(args.shape)
    supp = list(lr_expand(shape))
    _emit(
        args,
        {"shape": str(shape), "support": [list(p) for p in supp]},
        "{" + ", ".join(format_partition(p) for p in supp) + "}",
    )
    return 0


def cmd_overlaps(args) -> int:
    shape = parse_shape(args.shape)
    prof = overlap_profile(shape)
    rows, cols = prof.rows_by_k, prof.cols_by_l
    rows = tuple(p for p in rows if p)
    cols = tuple(p for p in cols if p)
    if args.max_k is not None:
        rows, cols = rows[: args.max_k], cols[: args.max_k]
    table = "\n".join("  " + " ".join(f"{v:>3}" for v in r) for r in prof.rects_table)
    text = (
        f"rows: {' / '.join(map(format_partition, rows)) or '0'}\n"
        f"cols: {' / '.join(map(format_partition, cols)) or '0'}\n"
        f"rects (k down, l across):\n{table}"
    )
    payload = {"shape": str(shape), **prof.to_json()}
    payload["rows"] = [list(p) for p in rows]
    payload["cols"] = [list(p) for p in cols]
    _emit(args, payload, text)
    return 0


def cmd_fillings(args) -> int:
    shape = parse_shape(args.shape)
    if args.hybrid is not None:
        fillings = [hybrid_filling(shape, args.hybrid)]
    elif args.extreme:
        fillings = [most_dominant_filling(shape), least_dominant_filling(shape)]
    else:
        fillings = list(enumerate_lr_fillings(shape))
    blocks = [f"{f.word_string()}  content {format_partition(f.content)}\n{_filling_text(f)}" for f in fillings]
    _emit(
        args,
        {"shape": str(shape), "fillings": [_filling_json(f) for f in fillings]},
        f"{len(fillings)} filling(s) of {shape}\n" + "\n".join(blocks),
    )
    return 0


def _yn(v) -> str:
    return v if isinstance(v, str) else str(v).lower()


def cmd_compare(args) -> int:
    a, b = parse_shape(args.a), parse_shape(args.b)
    rep = necessary_condition_report(a, b, exact_limit=args.exact_limit)
    lines = [f"A = {a}", f"B = {b}", f"screen: {'pass' if rep.screen.passed else 'fail'}"]
    lines += [f"  {w}" for w in rep.screen.witnesses]
    lines.append(f"reverse screen: {'pass' if rep.reverse_screen.passed else 'fail'}")
    lines += [f"  {w}" for w in rep.reverse_screen.witnesses]
    lines.append(f"support⊇: {_yn(rep.support_contained)}")
    lines.append(f"schur-positive: {_yn(rep.schur_positive)}")
    lines.append(f"supports: {rep.support_relation}")
    lines.append(rep.summary())
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0


def cmd_product(args) -> int:
    parts = [parse_partition(p) for p in args.partitions]
    if len(parts) not in (2, 4):
        raise LiteralError("product takes two partitions, or four for a tails check", " ".join(args.partitions), 0)
    left = star_product(SkewShape(parts[0]), SkewShape(parts[1]))
    if len(parts) == 2:
        e = lr_expand(left)
        _emit(args, {"shape": str(left), "expansion": e.to_json()}, f"{left}: {e}")
        return 0
    verdict = product_tails_check(*parts)
    right = star_product(SkewShape(parts[2]), SkewShape(parts[3]))
    rep = necessary_condition_report(left, right)
    text = "\n".join(
        [f"tails check: {'pass' if verdict.passed else 'fail'}"]
        + [f"  {w}" for w in verdict.witnesses]
        + [f"support⊇: {_yn(rep.support_contained)}", f"schur-positive: {_yn(rep.schur_positive)}",
           f"difference: {rep.difference}"]
    )
    payload = {
        "left": str(left),
        "right": str(right),
        "tails": verdict.to_json(),
        "support_contained": rep.support_contained,
        "schur_positive": rep.schur_positive,
    }
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    report = verify_all(args.size, max_size=args.max_size, workers=args.workers)
    _emit(args, report.to_json(), report.table())
    return 0 if report.ok else 1


def cmd_search(args) -> int:
    pairs = find_witnesses(args.size, args.kind)
    payload = {"size": args.size, "kind": args.kind, "pairs": [[str(a), str(b)] for a, b in pairs]}
    text = "\n".join(f"{a}  {b}" for a, b in pairs) or "(none)"
    if pairs and args.size <= DEFAULT_MAX_SIZE:
        smallest = minimal_witness_size(args.kind, args.size)
        payload["minimal_size"] = smallest
        text += f"\nsmallest size with pairs of this kind: {smallest}"
    _emit(args, payload, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="skewschur", description="Skew Schur function toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of a skew shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("support", parents=[common], help="support of a skew shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("overlaps", parents=[common], help="rows_k, cols_l and rects of a shape")
    p.add_argument("shape")
    p.add_argument("--max-k", type=int, default=None, help="show at most this many rows_k / cols_l")
    p.set_defaults(func=cmd_overlaps)

    p = sub.add_parser("fillings", parents=[common], help="LR-fillings of a shape")
    p.add_argument("shape")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--extreme", action="store_true", help="only the most and least dominant fillings")
    g.add_argument("--hybrid", type=int, metavar="K", help="the hybrid filling for this k")
    p.set_defaults(func=cmd_fillings)

    p = sub.add_parser("compare", parents=[common], help="necessary-condition report for s_A - s_B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--exact-limit", type=int, default=14, help="skip exact checks above this many boxes")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("product", parents=[common], help="s_alpha s_beta, or the tails check for four partitions")
    p.add_argument("partitions", nargs="+")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification at one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="witness pairs of a given kind")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--kind", choices=WITNESS_KINDS, required=True)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except LiteralError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

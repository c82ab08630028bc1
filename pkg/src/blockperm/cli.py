"""Command-line front end: map, unmap, count, verify.

Exit codes: 0 success, 1 domain error (bad input), 2 internal consistency
failure (e.g. two counting methods disagree, or a verify suite fails).
"""

from __future__ import annotations

import argparse
import sys

from .bijection import forward, inverse
from .core import BlockSpec, CycleType, LimitExceeded, classify, format_permutation, parse_permutation
from .enumeration import (
    count_by_cycle_type,
    count_derangements_gf,
    count_derangements_pie,
    count_involutions,
    multinomial,
)
from .ornament import NotInvertible, format_ornament, parse_ornament
from .verify import run_all


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from None


def _blockspec(args: argparse.Namespace) -> BlockSpec:
    return BlockSpec(_int_list(args.blocks), frozenset(_int_list(args.descending)))


def _positional_or_stdin(value: str | None) -> str:
    if value is None or value == "-":
        return sys.stdin.read()
    return value


def _cmd_map(args: argparse.Namespace) -> int:
    b = _blockspec(args)
    p = parse_permutation(_positional_or_stdin(args.permutation))
    o = forward(p, b)
    if not classify(p, b).is_block_ordered:
        print(
            "warning: permutation is not block-ordered for these blocks; mapping anyway",
            file=sys.stderr,
        )
    print(format_ornament(o))
    return 0


def _cmd_unmap(args: argparse.Namespace) -> int:
    b = _blockspec(args)
    o = parse_ornament(_positional_or_stdin(args.ornament))
    print(format_permutation(inverse(o, b)))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    b = _blockspec(args)
    rows: list[tuple[str, int]] = []
    code = 0
    if args.what == "all":
        rows.append(("total", multinomial(b.lengths)))
    if args.what in ("derangements", "all"):
        pie = count_derangements_pie(b)
        gf = count_derangements_gf(b)
        rows.append(("derangements_pie", pie))
        rows.append(("derangements_gf", gf))
        if pie != gf:
            print(
                "internal error: inclusion-exclusion and series counts disagree",
                file=sys.stderr,
            )
            code = 2
    if args.what in ("involutions", "all"):
        rows.append(("involutions", count_involutions(b)))
    if args.what == "cycle-type":
        if not args.cycle_type:
            print("error: --cycle-type is required for this count", file=sys.stderr)
            return 1
        t = CycleType.of(_int_list(args.cycle_type))
        rows.append((f"cycle_type[{args.cycle_type}]", count_by_cycle_type(b, t)))
    for name, value in rows:
        print(f"{name}\t{value}")
    return code


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(args.max_n, args.max_k)
    print("suite\tcases\tfailures")
    for r in results:
        print(f"{r.name}\t{r.cases}\t{len(r.failures)}")
    failed = False
    for r in results:
        for detail in r.failures:
            print(f"FAIL\t{r.name}\t{detail}")
            failed = True
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockperm",
        description="Map permutations with prescribed ascending/descending blocks "
        "to multisets of colored necklaces, and count them exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_blocks(p: argparse.ArgumentParser) -> None:
        p.add_argument("--blocks", required=True, help="comma-separated block lengths, e.g. 8,10")
        p.add_argument(
            "--descending",
            default="",
            help="comma-separated 1-based indices of descending blocks; empty for none",
        )

    p_map = sub.add_parser("map", help="permutation -> ornament")
    add_blocks(p_map)
    p_map.add_argument("permutation", nargs="?", help="one-line permutation; omit or '-' for stdin")
    p_map.set_defaults(func=_cmd_map)

    p_unmap = sub.add_parser("unmap", help="ornament -> permutation")
    add_blocks(p_unmap)
    p_unmap.add_argument("ornament", nargs="?", help="ornament text; omit or '-' for stdin")
    p_unmap.set_defaults(func=_cmd_unmap)

    p_count = sub.add_parser("count", help="exact counts")
    add_blocks(p_count)
    p_count.add_argument(
        "what", choices=("derangements", "involutions", "cycle-type", "all")
    )
    p_count.add_argument("--cycle-type", default="", help="comma-separated cycle lengths")
    p_count.set_defaults(func=_cmd_count)

    p_verify = sub.add_parser("verify", help="run the cross-checking suites")
    p_verify.add_argument("--max-n", type=int, default=6, help="largest n to sweep (<= 9 recommended)")
    p_verify.add_argument("--max-k", type=int, default=3, help="largest number of blocks")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits with 2 on usage errors; remap to 1
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except NotInvertible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``privperm <subcommand> ...``.

Exit codes: 0 success, 1 verification or crosscheck failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from privperm import counting, simulator
from privperm.counting import OEIS_IDS, RuleKind
from privperm.intervals import multiplicity_explicit
from privperm.oeis import (
    BASE_URL_ENV,
    BFileFormatError,
    FetchError,
    SequenceTerms,
    compare_terms,
    emit_bfile,
    fetch_bfile,
    parse_bfile,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rule(name: str) -> RuleKind:
    try:
        return RuleKind.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _compute_terms(rule: RuleKind, first: int, last: int) -> SequenceTerms:
    values = [counting.count_rule(rule, n) for n in range(first, last + 1)]
    return SequenceTerms(OEIS_IDS[rule], first, tuple(values))


def cmd_terms(args, out) -> int:
    if not 1 <= args.start <= args.stop:
        raise UsageError(f"need 1 <= from <= to, got {args.start}..{args.stop}")
    seq = _compute_terms(args.rule, args.start, args.stop)
    if args.format == "bfile":
        out.write(emit_bfile(seq).decode("ascii"))
    elif args.format == "delimited":
        out.write(args.delimiter.join(str(v) for v in seq.values) + "\n")
    else:
        width = len(str(args.stop))
        out.write(f"{'n':>{width}}  {args.rule.name}(n)\n")
        for n, v in seq.terms:
            out.write(f"{n:>{width}}  {v}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    try:
        perms = simulator.enumerate_permutations(args.rule, args.n, limit=args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for perm in perms:
        out.write(",".join(map(str, perm)) + "\n")
    out.write(f"total: {len(perms)}\n")
    return EXIT_OK


def cmd_crosscheck(args, out) -> int:
    if args.max_n > args.limit:
        raise UsageError(f"--max-n {args.max_n} exceeds the enumeration limit {args.limit}")
    rules = args.rules or list(RuleKind)
    for rule in rules:
        for n in range(1, args.max_n + 1):
            formula = counting.count_rule(rule, n)
            oracle = simulator.count_by_enumeration(rule, n, limit=args.limit)
            verdict = "ok" if formula == oracle else "MISMATCH"
            out.write(f"{rule.name} n={n} formula={formula} oracle={oracle} {verdict}\n")
            if formula != oracle:
                out.write(f"first failure: ({rule.name}, {n}, {formula}, {oracle})\n")
                return EXIT_FAIL
    out.write(f"crosscheck passed for n <= {args.max_n}\n")
    return EXIT_OK


def _reference_terms(args) -> SequenceTerms:
    oeis_id = OEIS_IDS[args.rule]
    if args.bfile:
        return parse_bfile(Path(args.bfile).read_bytes(), oeis_id)
    cached = Path(args.cache_dir) / f"b{oeis_id[1:]}.txt" if args.cache_dir else None
    if cached is not None and cached.exists():
        return parse_bfile(cached.read_bytes(), oeis_id)
    body = fetch_bfile(oeis_id, args.base_url, retries=args.retries)
    if cached is not None:
        cached.parent.mkdir(parents=True, exist_ok=True)
        cached.write_bytes(body)
    return parse_bfile(body, oeis_id)


def cmd_verify(args, out) -> int:
    if not args.bfile and not args.fetch:
        raise UsageError("verify needs --bfile PATH or --fetch")
    try:
        reference = _reference_terms(args)
    except (OSError, BFileFormatError, FetchError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_FAIL
    last = reference.last_index if args.max_n is None else min(args.max_n, reference.last_index)
    first = max(1, reference.offset)
    if last < first:
        out.write(f"error: reference {reference.oeis_id} has no terms in 1..{last}\n")
        return EXIT_FAIL
    report = compare_terms(_compute_terms(args.rule, first, last), reference)
    out.write(f"{args.rule.name} vs {reference.oeis_id}: {report.summary()}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _support(n: int) -> list[int]:
    ks = set()
    for l in range(n.bit_length()):
        ks.update((n >> l, (n >> l) - 1))
    return sorted(k for k in ks if k >= 1)


def cmd_multiplicity(args, out) -> int:
    if args.n < 1:
        raise UsageError(f"n must be >= 1, got {args.n}")
    if args.k is not None:
        if args.k < 1:
            raise UsageError(f"k must be >= 1, got {args.k}")
        out.write(f"{multiplicity_explicit(args.n, args.k)}\n")
        return EXIT_OK
    pairs = [(k, multiplicity_explicit(args.n, k)) for k in _support(args.n)]
    out.write(" ".join(f"{k}:{m}" for k, m in pairs if m) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="privperm", description="Count and enumerate payphone permutations."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("terms", help="print sequence terms from the counting formulas")
    p.add_argument("rule", type=_rule)
    p.add_argument("start", type=int, metavar="from")
    p.add_argument("stop", type=int, metavar="to")
    p.add_argument("--format", choices=("table", "bfile", "delimited"), default="table")
    p.add_argument("--delimiter", default=" ")
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("enumerate", help="list every payphone permutation by brute force")
    p.add_argument("rule", type=_rule)
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=simulator.DEFAULT_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("crosscheck", help="compare formulas with brute-force counts")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--rule", dest="rules", type=_rule, action="append")
    p.add_argument("--limit", type=int, default=simulator.DEFAULT_LIMIT)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("verify", help="compare computed terms with an OEIS b-file")
    p.add_argument("rule", type=_rule)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--bfile", metavar="PATH")
    src.add_argument("--fetch", action="store_true")
    p.add_argument("--max-n", type=int)
    p.add_argument("--base-url", help=f"OEIS mirror (default: ${BASE_URL_ENV} or oeis.org)")
    p.add_argument("--retries", type=int, default=0)
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multiplicity", help="print #_k S(n)")
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_multiplicity)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"privperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

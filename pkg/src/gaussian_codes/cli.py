"""Command-line front end: construct, encode, decode, tables, verify.

Exit codes: 0 success, 1 usage or validation error, 2 uncorrectable decode.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .codes import (
    build_half_code,
    build_multiprime_code,
    build_quarter_code,
    encode,
    identity_violations,
)
from .errors import GaussianCodeError, TooLarge, Uncorrectable
from .gaussian import parse_gaussian
from .oracle import CODEWORD_LIMIT, brute_min_mannheim_distance, exhaustive_decode_check
from .syndrome import build_table, decode

EXIT_OK, EXIT_INVALID, EXIT_UNCORRECTABLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _gaussian(text: str):
    try:
        return parse_gaussian(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _gaussian_list(text: str):
    return [_gaussian(t) for t in text.split(",")]


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _build(args):
    if args.family in ("quarter", "half"):
        if args.p is None:
            raise argparse.ArgumentTypeError(f"--family {args.family} needs --p")
        if args.primes or args.length_from is not None:
            raise argparse.ArgumentTypeError("--primes/--length-from only apply to --family multiprime")
    if args.family == "quarter":
        if args.roots:
            raise argparse.ArgumentTypeError("--roots applies to --family half; use --root")
        return build_quarter_code(args.p, args.k_exp, args.sign or "plus", root=args.root)
    if args.family == "half":
        if args.root is not None or args.sign:
            raise argparse.ArgumentTypeError("--family half takes --roots a,b (no --root/--sign)")
        return build_half_code(args.p, args.k_exp, roots=args.roots)
    if not args.primes or len(args.primes) < 2:
        raise argparse.ArgumentTypeError("--family multiprime needs --primes p1,p2[,...]")
    if args.p is not None or args.sign or args.roots:
        raise argparse.ArgumentTypeError("--p/--sign/--roots do not apply to --family multiprime")
    length_from = 1
    if args.length_from is not None:
        if args.length_from not in args.primes:
            raise argparse.ArgumentTypeError(f"--length-from {args.length_from} is not one of --primes")
        length_from = args.primes.index(args.length_from) + 1
    return build_multiprime_code(args.primes, length_from, root=args.root)


def cmd_construct(args) -> int:
    code = _build(args)
    payload = formats.code_to_json(code)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    _emit(args, payload, formats.format_code(code))
    return EXIT_OK


def _load_code(path):
    return formats.code_from_json(formats.load_json(path))


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    message = formats.vector_from_json(formats.load_json(args.message))
    codeword = encode(code, message)
    print(json.dumps(formats.vector_to_json(codeword)))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    received = formats.vector_from_json(formats.load_json(args.received))
    table = build_table(code)
    try:
        res = decode(code, table, received)
    except Uncorrectable as exc:
        print("uncorrectable")
        print(str(exc), file=sys.stderr)
        return EXIT_UNCORRECTABLE
    print(
        json.dumps(
            {
                "codeword": formats.vector_to_json(res.codeword),
                "error": formats.vector_to_json(res.error),
                "message": formats.vector_to_json(res.message),
                "syndrome": res.syndrome.to_json(),
            }
        )
    )
    return EXIT_OK


def cmd_tables(args) -> int:
    code = _load_code(args.code)
    table = build_table(code)
    _emit(args, formats.table_to_json(table), formats.format_table(table))
    return EXIT_OK


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    problems = identity_violations(code)
    if problems:
        print("identity violation: " + "; ".join(problems), file=sys.stderr)
        return EXIT_INVALID
    table = build_table(code)
    report = exhaustive_decode_check(code, table, count=None if args.exhaustive else args.samples, seed=args.seed)
    min_ok = True
    if args.exhaustive and code.ring.N**code.k <= CODEWORD_LIMIT:
        try:
            report.min_distance = brute_min_mannheim_distance(code)
        except TooLarge:
            pass
        else:
            min_ok = report.min_distance >= 3
    ok = report.ok and min_ok
    d = report.to_dict()
    text = "\n".join(
        [
            f"trials      : {report.trials}",
            f"failures    : {len(report.failures)}",
            f"table size  : {report.table_size} (distinct: {report.table_distinct})",
        ]
        + ([f"min distance: {report.min_distance}"] if report.min_distance is not None else [])
        + ["PASS" if ok else "FAIL"]
    )
    _emit(args, d, text)
    return EXIT_OK if ok else EXIT_INVALID


def _global_flags() -> argparse.ArgumentParser:
    # fresh actions per parser: parents share action objects, and set_defaults would leak
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 42)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussian-codes", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, default=42, help="RNG seed (default 42)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[_global_flags()], help="build a code and print g, h, G, H")
    p.add_argument("--family", choices=["quarter", "half", "multiprime"], required=True)
    p.add_argument("--p", type=int, help="prime p = 4n+1 (quarter/half)")
    p.add_argument("--k-exp", type=int, default=2, help="exponent k of the modulus pi^k (default 2)")
    p.add_argument("--sign", choices=["plus", "minus"], help="lambda = +i or -i (quarter)")
    p.add_argument("--primes", type=_int_list, help="distinct primes, e.g. 5,13 (multiprime)")
    p.add_argument("--length-from", type=int, help="prime whose phi fixes the length (multiprime)")
    p.add_argument("--root", type=_gaussian, help="explicit root e of g(x) = x - e, e.g. 3+1i")
    p.add_argument("--roots", type=_gaussian_list, help="explicit root pair for the half code, e.g. 2,1-1i")
    p.add_argument("--out", help="also write the code descriptor JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", parents=[_global_flags()], help="encode a message file")
    p.add_argument("code")
    p.add_argument("message")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[_global_flags()], help="decode a received-vector file")
    p.add_argument("code")
    p.add_argument("received")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("tables", parents=[_global_flags()], help="dump coset leaders and syndromes")
    p.add_argument("code")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[_global_flags()], help="run the brute-force decode check")
    p.add_argument("code")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--exhaustive", action="store_true", help="every message instead of a sample")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (GaussianCodeError, ValueError, argparse.ArgumentTypeError, OSError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

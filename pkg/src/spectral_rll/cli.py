"""Command-line front end: count, encode, decode, enumerate, selftest."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import selftest
from .codec import (
    CodecError,
    ConstraintViolation,
    IndexOutOfRange,
    RingViolation,
    codebook_size,
    decode_to_index,
    encode_from_index,
    format_word,
)
from .config import ConfigError, build_profile, load_config
from .oracle import SizeGuard
from .report import codebook_rows, default_components, write_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RANGE = 2
EXIT_RUN_LENGTH = 3
EXIT_RING = 4
EXIT_SELFTEST = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _profile_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("profile")
    g.add_argument("--config", help="profile JSON file, or a packaged fixture: table1, table2")
    g.add_argument("--ring", action="append", default=[], metavar="SPEC",
                   help="ring constraint, e.g. m=1,c=-2.93+1.87i,r1=1.5,r2=2.25 (repeatable)")
    for name in ("n", "d", "k", "l", "r"):
        g.add_argument(f"--{name}", type=int, help=f"override {name}")
    return p


def _components(text: str) -> list[int]:
    try:
        return sorted({int(v) for v in text.split(",") if v.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral-rll", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _profile_options()

    sub.add_parser("count", parents=[common], help="print the codebook size")

    p = sub.add_parser("encode", parents=[common], help="map decimal indices to codewords")
    p.add_argument("index", nargs="?", help="decimal index (default: one per line on stdin)")

    p = sub.add_parser("decode", parents=[common], help="map codewords to decimal indices")
    p.add_argument("bits", nargs="?", help="ASCII 0/1 codeword, x_1 first (default: stdin lines)")
    p.add_argument("--validate", dest="validate", action="store_true", default=True,
                   help="check run lengths and rings (default)")
    p.add_argument("--no-validate", dest="validate", action="store_false")

    p = sub.add_parser("enumerate", parents=[common], help="list the codebook (n <= 24)")
    p.add_argument("--with-spectrum", action="store_true", help="add z*_m columns")
    p.add_argument("--components", type=_components, metavar="M,...",
                   help="spectral indices to show (default: 0 and every constrained m)")
    p.add_argument("--figure", metavar="PATH", help="also render the z*_m plane to an image file")

    p = sub.add_parser("selftest", help="run embedded consistency checks")
    p.add_argument("--mutate", choices=["dirichlet"], help=argparse.SUPPRESS)
    return parser


def _load_profile(args):
    data = load_config(args.config) if args.config else {}
    overrides = {name: getattr(args, name) for name in ("n", "d", "k", "l", "r")}
    return build_profile(data, overrides, args.ring)


def _inputs(value: str | None) -> list[str]:
    if value is not None:
        return [value]
    return [line.strip() for line in sys.stdin if line.strip()]


def cmd_count(args) -> int:
    print(codebook_size(_load_profile(args)))
    return EXIT_OK


def cmd_encode(args) -> int:
    profile = _load_profile(args)
    for text in _inputs(args.index):
        try:
            index = int(text, 10)
        except ValueError:
            print(f"error: index must be a decimal integer, got {text!r}", file=sys.stderr)
            return EXIT_USAGE
        try:
            print(format_word(encode_from_index(index, profile)))
        except IndexOutOfRange as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RANGE
    return EXIT_OK


def cmd_decode(args) -> int:
    profile = _load_profile(args)
    for text in _inputs(args.bits):
        if len(text) != profile.n or set(text) - {"0", "1"}:
            print(f"error: expected {profile.n} ASCII 0/1 symbols, got {text!r}", file=sys.stderr)
            return EXIT_USAGE
        try:
            print(decode_to_index(text, profile, validate=args.validate))
        except ConstraintViolation as exc:
            print(f"error: run-length violation at position {exc.position}: {exc}", file=sys.stderr)
            return EXIT_RUN_LENGTH
        except RingViolation as exc:
            print(f"error: ring violation: {exc}", file=sys.stderr)
            return EXIT_RING
    return EXIT_OK


def cmd_enumerate(args) -> int:
    profile = _load_profile(args)
    components = args.components if args.components is not None else default_components(profile)
    bad = [m for m in components if not 0 <= m < profile.n]
    if bad:
        print(f"error: components {bad} outside [0, {profile.n - 1}]", file=sys.stderr)
        return EXIT_USAGE
    shown = components if args.with_spectrum else []
    rows = codebook_rows(profile, components if args.figure else shown)
    write_table(rows, shown, sys.stdout)
    if args.figure:
        from .figures import plot_spectrum_plane

        path = plot_spectrum_plane(rows, profile, [m for m in components if m] or components, args.figure)
        print(f"figure written to {path}", file=sys.stderr)
    return EXIT_OK


def cmd_selftest(args) -> int:
    ok = selftest.run(sys.stdout, mutation=args.mutate)
    return EXIT_OK if ok else EXIT_SELFTEST


COMMANDS = {
    "count": cmd_count,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

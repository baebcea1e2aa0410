"""Command-line interface.

Subcommands: betti, pbetti, mu, barcode, check, gen, bench.  Exit
codes: 0 success, 1 usage or parse error, 2 validation failure,
3 mathematical-invariant violation.  File arguments accept `-` for
standard input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .complexes import closure_of_facets
from .filtration import Filtration, FiltrationError
from .files import ParseError, parse_facets, parse_filtration, serialize_barcodes
from .generate import random_filtration_document
from .oracle import EnumerationLimitError, oracle_betti, oracle_persistent_betti
from .persistence import (
    NegativeMuError,
    barcode,
    check_fundamental_lemma,
    mu,
    mu_infinity,
    persistent_betti,
)
from .render import ascii_bars, svg_document

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_MATH = 3


class _Parser(argparse.ArgumentParser):
    """argparse, but usage errors exit 1 instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _level_or_inf(text: str) -> int | None:
    if text == "inf":
        return None
    return _nonneg_int(text)


def _triangle_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("each triangle count must be >= 1")
    return values


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(path, exc.strerror or str(exc)) from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_filtration(args: argparse.Namespace) -> Filtration:
    doc = parse_filtration(_read_text(args.file), incremental=args.incremental)
    return doc.to_filtration()


def cmd_betti(args: argparse.Namespace) -> int:
    facets = parse_facets(_read_text(args.file))
    complex_ = closure_of_facets(facets)
    print(complex_.betti(args.dim))
    return EXIT_OK


def cmd_pbetti(args: argparse.Namespace) -> int:
    f = _load_filtration(args)
    print(persistent_betti(f, args.dim, args.birth, args.death))
    return EXIT_OK


def cmd_mu(args: argparse.Namespace) -> int:
    f = _load_filtration(args)
    if args.death is None:
        print(mu_infinity(f, args.dim, args.birth))
    else:
        print(mu(f, args.dim, args.birth, args.death))
    return EXIT_OK


def cmd_barcode(args: argparse.Namespace) -> int:
    f = _load_filtration(args)
    if args.all_dims:
        dims = list(range(max(f.dim, 0) + 1))
    else:
        dims = [args.dim]
    codes = [barcode(f, n) for n in dims]
    if args.format == "text":
        text = "\n".join(ascii_bars(b, f.m) for b in codes)
    elif args.format == "json":
        text = serialize_barcodes(codes)
    else:
        text = svg_document(codes, f.m)
    _write_text(args.output, text)
    return EXIT_OK


def _check_nilpotency(f: Filtration, max_dim: int, violations: list[dict]) -> None:
    for j in range(len(f)):
        level = f[j]
        for n in range(max_dim + 1):
            product = level.boundary_matrix(n) @ level.boundary_matrix(n + 1)
            if not product.is_zero():
                violations.append(
                    {"check": "nilpotency", "level": j, "dim": n,
                     "detail": "boundary of boundary is nonzero"}
                )


def _check_inclusions(f: Filtration, max_dim: int, violations: list[dict]) -> None:
    for j in range(f.m):
        for n in range(max_dim + 1):
            inc = f.inclusion_matrix(n, j, j + 1)
            if inc.rank() != inc.cols:
                violations.append(
                    {"check": "inclusion-injective", "level": j, "dim": n,
                     "detail": f"rank {inc.rank()} < {inc.cols} columns"}
                )
            if n == 0:
                continue
            left = f[j + 1].boundary_matrix(n) @ inc
            right = f.inclusion_matrix(n - 1, j, j + 1) @ f[j].boundary_matrix(n)
            if left != right:
                violations.append(
                    {"check": "chain-map-square", "level": j, "dim": n,
                     "detail": "boundary does not commute with inclusion"}
                )


def _check_lemma(f: Filtration, max_dim: int, violations: list[dict]) -> None:
    for n in range(max_dim + 1):
        report = check_fundamental_lemma(f, n)
        for v in report.violations:
            violations.append(
                {"check": "fundamental-lemma", "dim": n, "kind": v.kind,
                 "k": v.k, "l": v.l,
                 "detail": f"expected {v.expected}, got {v.actual}"}
            )


def _check_oracle(f: Filtration, max_dim: int, violations: list[dict]) -> bool:
    """Differential test against the brute-force oracle.

    Returns False if the enumeration bound was hit (checks skipped).
    """
    try:
        for j in range(len(f)):
            for n in range(max_dim + 1):
                fast = f[j].betti(n)
                slow = oracle_betti(f[j], n)
                if fast != slow:
                    violations.append(
                        {"check": "oracle-betti", "level": j, "dim": n,
                         "detail": f"rank method {fast}, oracle {slow}"}
                    )
        for n in range(max_dim + 1):
            for j in range(len(f)):
                for p in range(j, len(f)):
                    fast = persistent_betti(f, n, j, p)
                    slow = oracle_persistent_betti(f, n, j, p)
                    if fast != slow:
                        violations.append(
                            {"check": "oracle-pbetti", "dim": n, "j": j, "p": p,
                             "detail": f"rank method {fast}, oracle {slow}"}
                        )
    except EnumerationLimitError:
        return False
    return True


def cmd_check(args: argparse.Namespace) -> int:
    f = _load_filtration(args)
    max_dim = args.max_dim if args.max_dim is not None else max(f.dim, 0)
    violations: list[dict] = []

    before = len(violations)
    _check_nilpotency(f, max_dim, violations)
    print(f"nilpotency: {'ok' if len(violations) == before else 'FAIL'}")

    before = len(violations)
    _check_inclusions(f, max_dim, violations)
    print(f"inclusions: {'ok' if len(violations) == before else 'FAIL'}")

    before = len(violations)
    _check_lemma(f, max_dim, violations)
    print(f"fundamental-lemma: {'ok' if len(violations) == before else 'FAIL'}")

    if args.oracle:
        before = len(violations)
        completed = _check_oracle(f, max_dim, violations)
        if not completed:
            print("oracle: skipped (enumeration bound)")
        else:
            print(f"oracle: {'ok' if len(violations) == before else 'FAIL'}")

    if violations:
        print(json.dumps(violations, indent=2))
        return EXIT_MATH
    print("all checks passed")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    doc = random_filtration_document(
        args.triangles, args.levels, args.vertices, args.seed
    )
    _write_text(args.output, doc.serialize())
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    betti_times = []
    pbetti_times = []
    for triangles in args.triangles:
        doc = random_filtration_document(triangles, args.levels, seed=args.seed)
        f = doc.to_filtration()
        top = f[f.m]

        start = time.perf_counter()
        for n in range(3):
            top.betti(n)
        betti_times.append(time.perf_counter() - start)

        start = time.perf_counter()
        persistent_betti(f, 1, 0, f.m)
        barcode(f, 1)
        pbetti_times.append(time.perf_counter() - start)

    label_width = len("Persistent Betti")
    print("# wall-clock seconds per triangle count")
    print(" " * label_width + "".join(f"{t:>10}" for t in args.triangles))
    print(f"{'Betti':<{label_width}}"
          + "".join(f"{s:>10.3f}" for s in betti_times))
    print(f"{'Persistent Betti':<{label_width}}"
          + "".join(f"{s:>10.3f}" for s in pbetti_times))
    return EXIT_OK


def _add_filtration_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("file", help="filtration file, or - for stdin")
    sub.add_argument(
        "--incremental",
        action="store_true",
        help="levels list only the facets new at each level",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="phcalc", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("betti", help="Betti number of a facet-list complex")
    sub.add_argument("file", help="facet list file, or - for stdin")
    sub.add_argument("-n", "--dim", type=_nonneg_int, required=True)
    sub.set_defaults(func=cmd_betti)

    sub = subparsers.add_parser("pbetti", help="persistent Betti number")
    _add_filtration_arguments(sub)
    sub.add_argument("-n", "--dim", type=_nonneg_int, required=True)
    sub.add_argument("-j", "--birth", type=_nonneg_int, required=True)
    sub.add_argument("-p", "--death", type=_nonneg_int, required=True)
    sub.set_defaults(func=cmd_pbetti)

    sub = subparsers.add_parser("mu", help="interval multiplicity")
    _add_filtration_arguments(sub)
    sub.add_argument("-n", "--dim", type=_nonneg_int, required=True)
    sub.add_argument("-j", "--birth", type=_nonneg_int, required=True)
    sub.add_argument(
        "-p", "--death", type=_level_or_inf, required=True,
        help="death level, or inf for classes that never die",
    )
    sub.set_defaults(func=cmd_mu)

    sub = subparsers.add_parser("barcode", help="barcode of a filtration")
    _add_filtration_arguments(sub)
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("-n", "--dim", type=_nonneg_int)
    group.add_argument("--all-dims", action="store_true")
    sub.add_argument("--format", choices=("text", "json", "svg"), default="text")
    sub.add_argument("-o", "--output", help="output file (default stdout)")
    sub.set_defaults(func=cmd_barcode)

    sub = subparsers.add_parser("check", help="verify structural invariants")
    _add_filtration_arguments(sub)
    sub.add_argument("--max-dim", type=_nonneg_int, default=None)
    sub.add_argument(
        "--oracle", action="store_true",
        help="also compare against brute-force enumeration",
    )
    sub.set_defaults(func=cmd_check)

    sub = subparsers.add_parser("gen", help="generate a random filtration")
    sub.add_argument("--triangles", "-t", type=int, required=True)
    sub.add_argument("--levels", "-l", type=int, required=True)
    sub.add_argument("--vertices", "-v", type=int, default=None)
    sub.add_argument("--seed", "-s", type=int, default=0)
    sub.add_argument("-o", "--output", help="output file (default stdout)")
    sub.set_defaults(func=cmd_gen)

    sub = subparsers.add_parser("bench", help="timing table over random inputs")
    sub.add_argument(
        "--triangles", "-t", type=_triangle_list, default=[10, 50, 100, 200, 500],
        help="comma-separated triangle counts",
    )
    sub.add_argument("--levels", "-l", type=int, default=5)
    sub.add_argument("--seed", "-s", type=int, default=0)
    sub.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"phcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FiltrationError as exc:
        print(f"phcalc: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NegativeMuError as exc:
        print(f"phcalc: error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"phcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"phcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

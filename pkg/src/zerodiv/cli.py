"""Command-line front end.

Exit codes: 0 success, 1 parse or precondition error, 2 undetermined
result, 3 a sampling cross-check found a violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import report
from .algebra import Algebra, check_axioms, determinant_form
from .algfile import load_algebra
from .catalog import catalog, lookup
from .errors import ZeroDivError
from .factor import analyze_residual, linear_factors
from .ideals import maximal_left_ideals
from .tameness import UNDETERMINED, cross_check_sample, tameness_report, zero_divisor_set

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDETERMINED = 2
EXIT_CHECK_FAILED = 3


def resolve_algebra(target: str) -> Algebra:
    """A path to an ``.alg`` file, or the name of a catalog entry."""
    path = Path(target)
    if path.is_file():
        return load_algebra(path)
    try:
        return lookup(target).algebra
    except KeyError:
        names = ", ".join(e.name for e in catalog())
        raise ZeroDivError(f"{target!r} is neither a file nor a catalog entry ({names})") from None


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing on success; rely on the exit code")
    parser = argparse.ArgumentParser(
        prog="zerodiv", parents=[common],
        description="Right zero divisors and tameness of finite-dimensional algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("inspect", "axioms and basic structure"),
        ("detform", "determinant form of right multiplication and its factors"),
        ("zdiv", "decompose the set of right zero divisors"),
        ("ideals", "enumerate maximal left ideals (n <= 3, AA = A)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("target", help=".alg file or catalog name")
    p = sub.add_parser("tame", parents=[common], help="tameness report; no target gives the catalog table")
    p.add_argument("target", nargs="?")
    p = sub.add_parser("sample", parents=[common], help="sampling cross-check of the Z decomposition")
    p.add_argument("target")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    sub.add_parser("catalog", parents=[common], help="list built-in algebras")
    return parser


class _Output:
    def __init__(self, fmt: str, quiet: bool, stream: TextIO):
        self.fmt, self.quiet, self.stream = fmt, quiet, stream

    def emit(self, pairs, text: str) -> None:
        if self.quiet:
            return
        self.stream.write(report.render_machine(pairs) if self.fmt == "machine" else text)


def _inspect(A: Algebra, out: _Output) -> int:
    ax = check_axioms(A)
    text = "\n".join(report.text_header(A) + report.text_axioms(A, ax)) + "\n"
    out.emit(report.algebra_pairs(A) + report.axiom_pairs(ax), text)
    return EXIT_OK


def _detform(A: Algebra, out: _Output) -> int:
    D = determinant_form(A)
    fr = ra = None
    if not D.is_zero():
        fr = linear_factors(D)
        ra = analyze_residual(fr.residual)
    text = "\n".join(report.text_header(A) + report.text_form(A, D, fr, ra)) + "\n"
    out.emit(report.algebra_pairs(A) + report.form_pairs(A, D, fr, ra), text)
    return EXIT_OK


def _zdiv(A: Algebra, out: _Output) -> int:
    z = zero_divisor_set(A)
    text = "\n".join(report.text_header(A) + report.text_z(A, z)) + "\n"
    out.emit(report.algebra_pairs(A) + report.z_pairs(z, A), text)
    return EXIT_UNDETERMINED if z.kind == UNDETERMINED else EXIT_OK


def _ideals(A: Algebra, out: _Output) -> int:
    il = maximal_left_ideals(A)
    text = "\n".join(report.text_header(A) + report.text_ideals(A, il)) + "\n"
    out.emit(report.algebra_pairs(A) + report.ideal_pairs(il), text)
    return EXIT_OK if il.complete or il.infinite else EXIT_UNDETERMINED


def _tame(A: Algebra, out: _Output) -> int:
    r = tameness_report(A)
    out.emit(report.tameness_pairs(A, r), report.text_tameness(A, r))
    return EXIT_UNDETERMINED if r.tame is None else EXIT_OK


def _table(out: _Output) -> int:
    rows = [tameness_report(e.algebra).open_question_row for e in catalog()]
    pairs = []
    for i, row in enumerate(rows):
        pairs.append((f"catalog[{i}].name", row.name))
        pairs += report.open_question_pairs(row, f"catalog[{i}].open_question")
    out.emit(pairs, report.text_open_question_table(rows))
    return EXIT_UNDETERMINED if any(r.real_tame is None for r in rows) else EXIT_OK


def _sample(A: Algebra, count: int, seed: int, out: _Output) -> int:
    z = zero_divisor_set(A)
    if z.kind == UNDETERMINED:
        out.emit(report.algebra_pairs(A) + report.z_pairs(z, A),
                 "\n".join(report.text_header(A) + report.text_z(A, z)) + "\n")
        return EXIT_UNDETERMINED
    c = cross_check_sample(A, z, count, seed)
    out.emit(report.algebra_pairs(A) + report.cross_check_pairs(c), report.text_cross_check(c))
    return EXIT_OK if c.passed else EXIT_CHECK_FAILED


def _catalog(out: _Output) -> int:
    entries = catalog()
    pairs = []
    for i, e in enumerate(entries):
        pairs += [(f"catalog[{i}].name", e.name), (f"catalog[{i}].description", e.description)]
    width = max(len(e.name) for e in entries)
    text = "".join(f"{e.name:<{width}}  {e.description}\n" for e in entries)
    out.emit(pairs, text)
    return EXIT_OK


def run_command(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    out = _Output(getattr(args, "format", "text"), getattr(args, "quiet", False), stdout)
    try:
        if args.command == "catalog":
            return _catalog(out)
        if args.command == "tame" and args.target is None:
            return _table(out)
        A = resolve_algebra(args.target)
        if args.command == "inspect":
            return _inspect(A, out)
        if args.command == "detform":
            return _detform(A, out)
        if args.command == "zdiv":
            return _zdiv(A, out)
        if args.command == "ideals":
            return _ideals(A, out)
        if args.command == "tame":
            return _tame(A, out)
        return _sample(A, args.count, args.seed, out)
    except (ZeroDivError, OSError, UnicodeDecodeError) as exc:
        if isinstance(exc, AssertionError):
            raise
        stderr.write(f"zerodiv: error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))

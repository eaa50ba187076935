"""Command-line front end.

Exit codes: 0 success or true, 1 predicate false, 2 input error,
3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import evacuation, growth, insertion, lr, plactic, taquin
from .alphabet import SignedAlphabet, format_alphabet, format_word, parse_alphabet
from .errors import BudgetExceeded, InvariantViolation, ParseError, TableauError
from .shapes import SkewShape, format_partition, parse_skew
from .tableau import (
    SkewTableau,
    enumerate_tableaux,
    format_tableau,
    parse_tableau,
    standard_tableaux,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _alphabet(args) -> SignedAlphabet:
    return parse_alphabet(_read(args.alphabet), source=args.alphabet)


def _tableau(path: str, alphabet: SignedAlphabet) -> SkewTableau:
    return parse_tableau(_read(path), alphabet, source=path)


def _straight(path: str, alphabet: SignedAlphabet) -> SkewTableau:
    t = _tableau(path, alphabet)
    if not t.is_straight:
        raise InputError(f"{path}: expected a straight tableau, got shape {t.shape}")
    return t


def _shape(text: str) -> SkewShape:
    try:
        return parse_skew(text)
    except ValueError as exc:
        raise InputError(f"bad shape {text!r}: {exc}") from None


def _record(args, inner) -> SkewTableau:
    """Recording tableau from ``--record`` (labels 1..n) or the row-by-row default."""
    if not args.record:
        return next(standard_tableaux(SkewShape(tuple(inner))))
    text = _read(args.record)
    n = sum(len(line.split()) for line in text.splitlines() if line.strip())
    record = parse_tableau(text, SignedAlphabet.standard(n), source=args.record)
    if not record.is_straight:
        raise InputError(f"{args.record}: recording tableau must be straight")
    return record


def _predicate(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_OK if value else EXIT_FALSE


def cmd_validate(args):
    t = _tableau(args.tableau, _alphabet(args))
    sys.stdout.write(format_tableau(t))
    return EXIT_OK


def cmd_build(args):
    a = _alphabet(args)
    sys.stdout.write(format_tableau(insertion.tableau_of_word(a.word(args.word))))
    return EXIT_OK


def cmd_insert(args):
    a = _alphabet(args)
    t = _straight(args.tableau, a)
    for x in a.word(args.left or ""):
        t = insertion.insert_left(x, t)
    t = insertion.insert_word(t, a.word(args.right or ""))
    sys.stdout.write(format_tableau(t))
    return EXIT_OK


def cmd_equiv(args):
    a = _alphabet(args)
    w, v = a.word(args.first), a.word(args.second)
    if args.bfs:
        return _predicate(plactic.equivalent_bfs(w, v, args.max_class))
    return _predicate(plactic.equivalent(w, v))


def cmd_greene(args):
    a = _alphabet(args)
    w = a.word(args.word)
    for k in range(len(w) + 1):
        print(f"l_{k} {plactic.greene_row(w, k)} {plactic.greene_col(w, k)}")
    print(f"shape {format_partition(plactic.shape_from_greene(w))}")
    return EXIT_OK


def _parse_order(text: str):
    cells = []
    for chunk in text.split(";"):
        if chunk.strip():
            i, j = chunk.split(",")
            cells.append((int(i), int(j)))
    return cells


def cmd_rectify(args):
    a = _alphabet(args)
    s = _tableau(args.tableau, a)
    order = _parse_order(args.order) if args.order else None
    trace = [] if args.trace else None
    try:
        result = taquin.rectify(s, order, trace=trace)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(format_tableau(result))
    if args.trace:
        text = taquin.format_trace(trace)
        if args.trace == "-":
            sys.stdout.write(text)
        else:
            Path(args.trace).write_text(text)
    return EXIT_OK


def cmd_evacuate(args):
    a = _alphabet(args)
    t = _straight(args.tableau, a)
    sys.stdout.write(format_tableau(evacuation.evacuate(t, a)))
    if args.opposite_out:
        Path(args.opposite_out).write_text(format_alphabet(a.opposite()))
    else:
        sys.stdout.write("\n" + format_alphabet(a.opposite()))
    return EXIT_OK


def cmd_product(args):
    a = _alphabet(args)
    s, u = _tableau(args.first, a), _tableau(args.second, a)
    sys.stdout.write(format_tableau(insertion.skew_product(s, u)))
    return EXIT_OK


def cmd_growth(args):
    a = _alphabet(args)
    s = _tableau(args.tableau, a)
    record = _record(args, s.inner)
    if record.outer != s.inner:
        raise InputError(f"recording tableau shape {format_partition(record.outer)} "
                         f"differs from inner shape {format_partition(s.inner)}")
    sys.stdout.write(growth.format_diagram(growth.diagram_of(record, s)))
    if args.grw:
        rect, rprime = growth.grw(record, s)
        sys.stdout.write("\n" + format_tableau(rect) + "\n" + format_tableau(rprime))
    return EXIT_OK


def cmd_dualeq(args):
    a = _alphabet(args)
    s, u = _tableau(args.first, a), _tableau(args.second, a)
    if s.shape != u.shape:
        raise InputError(f"shapes differ: {s.shape} vs {u.shape}")
    return _predicate(growth.dual_equivalent(s, u))


def cmd_psi(args):
    a = _alphabet(args)
    s, target = _tableau(args.skew, a), _straight(args.target, a)
    try:
        result = growth.psi(s, target)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(format_tableau(result))
    return EXIT_OK


def cmd_lr(args):
    a = _alphabet(args)
    shape = _shape(args.shape)
    report = lr.verify_lr_identity(shape.outer, shape.inner, a)
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_schur_check(args):
    a = _alphabet(args)
    shape = _shape(args.shape)
    report = lr.verify_lr_identity(shape.outer, shape.inner, a)
    sys.stdout.write(report.to_text())
    expansion = sum(c * report.shape_counts[nu] for nu, c in report.coefficients.items())
    print(f"skew {report.skew_count} expansion {expansion} ok")
    return EXIT_OK


def cmd_enumerate(args):
    a = _alphabet(args)
    shape = _shape(args.shape)
    if sum(shape.outer) > args.max_frame:
        raise BudgetExceeded(f"outer shape has more than {args.max_frame} boxes")
    if args.count:
        print(sum(1 for _ in enumerate_tableaux(shape, a)))
        return EXIT_OK
    first = True
    for t in enumerate_tableaux(shape, a):
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(format_tableau(t))
        first = False
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superplactic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, tableau_args=()):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--alphabet", required=True, help="SIGMA alphabet file")
        for arg in tableau_args:
            p.add_argument(arg, help="TBL file ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check a (skew) tableau file", ["tableau"])
    p = command("build", cmd_build, "insertion tableau of a word")
    p.add_argument("--word", required=True)
    p = command("insert", cmd_insert, "row/column insertion into a tableau", ["tableau"])
    p.add_argument("--right", help="letters to row-insert, left to right")
    p.add_argument("--left", help="letters to column-insert, first letter first")
    p = command("equiv", cmd_equiv, "decide the plactic congruence")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--bfs", action="store_true", help="use the relation closure instead of insertion")
    p.add_argument("--max-class", type=int, default=plactic.DEFAULT_MAX_CLASS)
    p = command("greene", cmd_greene, "Greene row and column invariants of a word")
    p.add_argument("--word", required=True)
    p = command("rectify", cmd_rectify, "jeu de taquin rectification", ["tableau"])
    p.add_argument("--order", help="inner corners to slide, e.g. '3,2;3,1'")
    p.add_argument("--trace", metavar="FILE", help="write the JSON-lines slide trace ('-' for stdout)")
    p = command("evacuate", cmd_evacuate, "evacuation over the opposite alphabet", ["tableau"])
    p.add_argument("--opposite-out", metavar="FILE", help="write the opposite alphabet here")
    command("product", cmd_product, "insertion product of two tableaux", ["first", "second"])
    p = command("growth", cmd_growth, "growth diagram of a skew tableau", ["tableau"])
    p.add_argument("--record", help="standard recording tableau (TBL over 1..n)")
    p.add_argument("--grw", action="store_true", help="also print Rec(S) and R'")
    command("dualeq", cmd_dualeq, "dual equivalence of two skew tableaux", ["first", "second"])
    command("psi", cmd_psi, "dual-equivalent skew tableau with a given rectification", ["skew", "target"])
    p = command("lr", cmd_lr, "Littlewood-Richardson coefficients of a skew shape")
    p.add_argument("--shape", required=True, help="e.g. 3,2,1/2,1")
    p.add_argument("--json", action="store_true")
    p = command("schur-check", cmd_schur_check, "verify the skew Schur expansion")
    p.add_argument("--shape", required=True)
    p = command("enumerate", cmd_enumerate, "list all tableaux of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--max-frame", type=int, default=lr.MAX_FRAME)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TableauError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_FALSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

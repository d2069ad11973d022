"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .atlas import korkmaz_word, twisted_relator
from .fibration import (
    PlumbingGraph,
    PreconditionError,
    euler_characteristic,
    fibration_from_word,
    filling_report,
    h1,
    plumbing_boundary_h1,
    signature,
    verify_relator,
)
from .report import Report, group_dict
from .wordfile import WordFileError, dumps, parse

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

BASIS_NOTE = (
    "Explicit classes are written in the basis (a1, b1, a2, b2, ..., ag, bg) "
    "with <a_i, b_i> = +1."
)


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(reports, as_json: bool) -> None:
    if as_json:
        if isinstance(reports, list):
            sys.stdout.write(
                json.dumps([asdict(r) for r in reports], sort_keys=True, indent=2, ensure_ascii=False)
                + "\n"
            )
        else:
            sys.stdout.write(reports.to_json())
    else:
        if isinstance(reports, list):
            sys.stdout.write("\n".join(r.to_text() for r in reports))
        else:
            sys.stdout.write(reports.to_text())


def paper_report(g: int, n: int) -> Report:
    r = filling_report(g, n)
    notes = list(r.notes) + [
        f"H_1 of the closed fibration X_{g}({n}): {r.closed_h1}",
        f"H_1 of the boundary 3-manifold: {r.boundary_h1}",
    ]
    return Report(
        genus=g,
        base="disk",
        length=r.length,
        h1=group_dict(r.h1),
        chi=r.chi,
        sigma=r.sigma,
        relator_ok=r.relator_ok,
        separating_count=r.separating_count,
        section_square=r.section_square,
        notes=notes,
    )


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--sweep expects N1..N2, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--sweep range {text!r} is empty or negative")
    return range(lo, hi + 1)


def cmd_paper(args) -> int:
    if args.genus < 2:
        raise UsageError("--genus must be at least 2")
    if args.sweep:
        _emit([paper_report(args.genus, n) for n in _parse_range(args.sweep)], args.json)
        return EXIT_OK
    if args.twist_power is None:
        raise UsageError("give --twist-power or --sweep")
    if args.twist_power < 0:
        raise UsageError("--twist-power must be nonnegative")
    _emit(paper_report(args.genus, args.twist_power), args.json)
    return EXIT_OK


def _read_word_file(path: str, allow_unmarked_zero: bool = False):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        wf = parse(text, allow_unmarked_zero=allow_unmarked_zero)
    except WordFileError as exc:
        raise ParseError(f"{path}: {exc}") from None
    for w in wf.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return wf


def word_report(wf) -> Report:
    check = verify_relator(wf.word)
    boundary = 1 if wf.base == "disk" else 0
    fib = fibration_from_word(wf.word, wf.base, boundary, wf.section_square)
    notes = [check.caveat]
    sigma = None
    if check.is_identity:
        sigma = signature(fib)
    else:
        notes.append("signature omitted: total monodromy is nontrivial on H_1")
    if wf.base == "disk":
        notes.append("disk base: fiber has one boundary component")
    return Report(
        genus=wf.genus,
        base=wf.base,
        length=check.length,
        h1=group_dict(h1(fib)),
        chi=euler_characteristic(fib),
        sigma=sigma,
        relator_ok=check.is_identity,
        separating_count=check.separating_count,
        section_square=wf.section_square,
        notes=notes,
    )


def cmd_word(args) -> int:
    wf = _read_word_file(args.path, args.allow_unmarked_zero)
    _emit(word_report(wf), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    wf = _read_word_file(args.path, args.allow_unmarked_zero)
    check = verify_relator(wf.word)
    report = Report(
        genus=wf.genus,
        base=wf.base,
        length=check.length,
        h1=None,
        chi=None,
        sigma=None,
        relator_ok=check.is_identity,
        separating_count=check.separating_count,
        section_square=wf.section_square,
        notes=[check.caveat],
    )
    if args.json:
        _emit(report, True)
    else:
        _emit(report, False)
        print("monodromy on H_1:")
        for row in check.matrix.rows:
            print("  " + " ".join(f"{x:>4}" for x in row))
    return EXIT_OK


def _plumbing_graph(vertices, edges) -> PlumbingGraph:
    verts = []
    for v in vertices:
        try:
            g, e = v.split(":")
            verts.append((int(g), int(e)))
        except ValueError:
            raise ParseError(f"vertex {v!r} is not GENUS:EULER") from None
    pairs = []
    for edge in edges:
        try:
            i, j = edge.split("-")
            pairs.append((int(i), int(j)))
        except ValueError:
            raise ParseError(f"edge {edge!r} is not I-J") from None
    try:
        return PlumbingGraph(tuple(verts), tuple(pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_plumbing(args) -> int:
    graph = _plumbing_graph(args.vertex, args.edge)
    group = plumbing_boundary_h1(graph)
    report = Report(
        genus=None,
        base=None,
        length=None,
        h1=group_dict(group),
        chi=None,
        sigma=None,
        relator_ok=None,
        separating_count=None,
        notes=[f"H_1 of the boundary: {group}"],
    )
    _emit(report, args.json)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.genus < 2:
        raise UsageError("--genus must be at least 2")
    if args.twist_power is None:
        w, section = korkmaz_word(args.genus), -1
    elif args.twist_power < 0:
        raise UsageError("--twist-power must be nonnegative")
    else:
        w, section = twisted_relator(args.genus, args.twist_power), -2
    sys.stdout.write(dumps(w, args.base, section if args.base == "sphere" else None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lefschetz",
        description="Homology, Euler characteristic and signature of Lefschetz fibrations "
        "given by Dehn twist words.",
        epilog=BASIS_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("paper", help="invariants of the filling S_g(n) built from W_g(n)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--twist-power", type=int)
    p.add_argument("--sweep", metavar="N1..N2", help="report every twist power in the range")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper)

    for name, func, text in (
        ("word", cmd_word, "invariants of the fibration given by a word file"),
        ("verify", cmd_verify, "check whether a word file acts trivially on H_1"),
    ):
        p = sub.add_parser(name, help=text, epilog=BASIS_NOTE)
        p.add_argument("path")
        p.add_argument("--json", action="store_true")
        p.add_argument(
            "--allow-unmarked-zero",
            action="store_true",
            help="accept zero classes without 'separating' (treated as separating, with a warning)",
        )
        p.set_defaults(func=func)

    p = sub.add_parser("plumbing", help="H_1 of the boundary of a plumbing")
    p.add_argument("--vertex", action="append", required=True, metavar="GENUS:EULER")
    p.add_argument("--edge", action="append", default=[], metavar="I-J")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plumbing)

    p = sub.add_parser("export", help="write W_g or W_g(n) as a word file", epilog=BASIS_NOTE)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--twist-power", type=int)
    p.add_argument("--base", choices=("disk", "sphere"), default="sphere")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import acceptance
from .betti import format_betti_table, hochster_betti, hochster_report
from .chordal import is_chordal
from .errors import CapExceededError, SqtreeError
from .explore import enumerate_trees, scan_conjectures, scan_csv
from .graph import is_connected, square
from .invariants import InvariantReport, chordal_report
from .io import format_edge_list, read_edge_list, to_dot
from .monomial import betti_from_lq, edge_ideal, format_certificate, search_linear_quotients
from .trees import classification_verdict, harary_ross_check

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def cmd_square(args) -> int:
    g2 = square(read_edge_list(args.file))
    sys.stdout.write(to_dot(g2) if args.dot else format_edge_list(g2))
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = read_edge_list(args.file)
    if not args.oracle and is_connected(g) and g.m and is_chordal(g):
        report = chordal_report(g)
    else:
        report = hochster_report(g)
    print(InvariantReport.CSV_HEADER)
    print(report.csv_row())
    return EXIT_OK


def cmd_classify(args) -> int:
    t = read_edge_list(args.file)
    cls, linear, why = classification_verdict(t)
    print(f"{cls}; linear resolution of I(T^2): {'YES' if linear else 'NO'}")
    print(f"reason: {why}")
    return EXIT_OK


def cmd_betti(args) -> int:
    g = read_edge_list(args.file)
    if args.method == "hochster":
        sys.stdout.write(format_betti_table(hochster_betti(g)))
        return EXIT_OK
    cert = search_linear_quotients(edge_ideal(g))
    if cert is None:
        print("no linear quotients: I(G) has no linear resolution")
        return EXIT_OK
    sys.stdout.write(format_certificate(cert))
    totals, pd = betti_from_lq(cert)
    print("beta_i(I): " + " ".join(str(b) for b in totals))
    print(f"projdim(I) = {pd}; projdim(S/I) = {pd + 1}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = read_edge_list(args.file)
    ok, verdicts = harary_ross_check(g)
    for name, holds, detail in verdicts:
        print(f"({name}) {'holds' if holds else 'fails'}: {detail}")
    print(f"square of a non-star tree: {'YES' if ok else 'NO'}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    trees = enumerate_trees(args.n)
    os.makedirs(args.out, exist_ok=True)
    width = len(str(len(trees)))
    for i, ct in enumerate(trees, start=1):
        path = os.path.join(args.out, f"tree_n{args.n}_{i:0{width}d}.edges")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"# {ct.code}\n")
            fh.write(format_edge_list(ct.graph))
    print(f"{len(trees)} trees on {args.n} vertices written to {args.out}")
    return EXIT_OK


def cmd_scan(args) -> int:
    rows, summary = scan_conjectures(args.n_max)
    text = scan_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for line in summary.lines():
        print(line, file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    return EXIT_OK if acceptance.run_all(sys.stdout) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sqtree", description="Edge ideals of squares of trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("square", help="write the square of a graph")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")
    s.set_defaults(func=cmd_square)

    s = sub.add_parser("invariants", help="CSV row of invariants of S/I(G)")
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true", help="force the Hochster oracle")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("classify", help="tree family and linearity of I(T^2)")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("betti", help="Betti numbers by linear quotients or Hochster")
    s.add_argument("file")
    s.add_argument("--method", choices=("lq", "hochster"), default="hochster")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("recognize-square", help="Harary-Ross conditions")
    s.add_argument("file")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("enumerate", help="write all unlabeled trees on n vertices")
    s.add_argument("n", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("scan", help="compare reg and pd of I(T) and I(T^2) over small trees")
    s.add_argument("n_max", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("verify-paper", help="run the acceptance checks")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SqtreeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

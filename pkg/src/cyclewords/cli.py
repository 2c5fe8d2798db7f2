"""Command-line front end: convert, enumerate, count, verify, report and draw.

Exit codes are fixed for scripting: 0 success, 2 usage or malformed input,
3 semantic mismatch in a subgraph document, 4 count mismatch, 5 verification
failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .bijection import subgraph_to_word, word_to_subgraph
from .counting import CountTable, count_table
from .enumeration import enumerate_subgraphs, enumerate_words
from .errors import (
    BadParamsError,
    CountMismatchError,
    DocumentError,
    SubgraphError,
    WordError,
)
from .formats import (
    document_from_subgraph,
    document_json,
    document_to_subgraph,
    parse_document,
    render_ascii,
    render_dot,
)
from .verification import verify_grid
from .words import CycleParams, parse_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SEMANTIC = 3
EXIT_COUNT_MISMATCH = 4
EXIT_VERIFY_FAILED = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclewords",
        description=(
            "Convert between R/U/D words and n-edge, k-component subgraphs of the "
            "labelled 2n-cycle; enumerate, count, verify and render them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    w2g = sub.add_parser("w2g", help="map a word to its cycle subgraph")
    w2g.add_argument("--n", type=int, required=True, help="number of subgraph edges")
    w2g.add_argument("--k", type=int, required=True, help="number of components / Rs / Us")
    w2g.add_argument("--word", help="the word; read from standard input when omitted")
    w2g.add_argument("--format", choices=("json", "dot", "ascii"), default="ascii",
                     help="output format (default: ascii)")
    w2g.set_defaults(func=cmd_w2g)

    g2w = sub.add_parser("g2w", help="map a subgraph document back to its word")
    g2w.add_argument("--k", type=int, required=True, help="expected number of components")
    g2w.add_argument("file", nargs="?", default="-",
                     help="JSON document path, or - for standard input (default)")
    g2w.set_defaults(func=cmd_g2w)

    enum = sub.add_parser("enumerate", help="stream one side of the correspondence")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--side", choices=("words", "graphs"), default="words")
    enum.add_argument("--format", choices=("json", "ascii"), default="ascii",
                      help="per-line format for graphs (words print bare)")
    enum.set_defaults(func=cmd_enumerate)

    count = sub.add_parser("count", help="closed-form counts, optionally cross-checked")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--brute-force", action="store_true",
                       help="also count subgraphs by enumeration and compare")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="exhaustively check bijectivity per (n, k)")
    verify.add_argument("--max-n", type=int, required=True,
                        help="check every cell with 1 <= k <= n <= this bound")
    verify.set_defaults(func=cmd_verify)

    report = sub.add_parser(
        "report",
        help="write count and verification tables as CSV plus rendered figures",
    )
    report.add_argument("--max-n", type=int, default=6)
    report.add_argument("--out-dir", required=True, help="directory for the output files")
    report.set_defaults(func=cmd_report)

    draw = sub.add_parser("draw", help="render a word's subgraph to an image file")
    draw.add_argument("--n", type=int, required=True)
    draw.add_argument("--k", type=int, required=True)
    draw.add_argument("--word", help="the word; read from standard input when omitted")
    draw.add_argument("--out", required=True, help="image path (.png, .pdf, .svg, ...)")
    draw.set_defaults(func=cmd_draw)

    return parser


def _word_text(args: argparse.Namespace) -> str:
    if args.word is not None:
        return args.word
    return sys.stdin.read().strip()


def _document_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def cmd_w2g(args: argparse.Namespace) -> int:
    params = CycleParams(args.n, args.k)
    word = parse_word(_word_text(args), params)
    graph = word_to_subgraph(word)
    if args.format == "json":
        print(document_json(document_from_subgraph(graph)))
    elif args.format == "dot":
        print(render_dot(graph))
    else:
        print(render_ascii(graph))
    return EXIT_OK


def cmd_g2w(args: argparse.Namespace) -> int:
    doc = parse_document(_document_text(args.file))
    graph = document_to_subgraph(doc, args.k)
    print(subgraph_to_word(graph))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    params = CycleParams(args.n, args.k)
    if args.side == "words":
        for word in enumerate_words(params):
            print(word)
        return EXIT_OK
    for graph in enumerate_subgraphs(params):
        if args.format == "json":
            print(document_json(document_from_subgraph(graph)))
        else:
            print("; ".join(render_ascii(graph).splitlines()))
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    params = CycleParams(args.n, args.k)
    try:
        table = count_table(params, brute_force=args.brute_force)
    except CountMismatchError as exc:
        table = exc.table
    print(f"w_star={table.w_star} w_zero={table.w_zero} total={table.w_total}")
    if args.brute_force:
        verdict = "MATCH" if table.matches else "MISMATCH"
        print(f"g_star={table.g_star} g_zero={table.g_zero} total={table.g_total} {verdict}")
        if not table.matches:
            return EXIT_COUNT_MISMATCH
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        print("error: --max-n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    first_failure = None
    for report in verify_grid(args.max_n):
        status = "PASS" if report.ok else "FAIL"
        print(
            f"n={report.params.n} k={report.params.k} {status} "
            f"({report.words_enumerated} words, {report.subgraphs_enumerated} subgraphs)"
        )
        if not report.ok and first_failure is None:
            first_failure = report
    if first_failure is not None:
        print(f"first counterexample: {first_failure.counterexamples[0]}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        print("error: --max-n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    from . import plotting  # deferred: keeps matplotlib out of the fast commands

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    tables: list[CountTable] = []
    any_mismatch = False
    for n in range(1, args.max_n + 1):
        for k in range(1, n + 1):
            try:
                tables.append(count_table(CycleParams(n, k), brute_force=True))
            except CountMismatchError as exc:
                tables.append(exc.table)
                any_mismatch = True
    reports = list(verify_grid(args.max_n))

    counts_path = out_dir / "counts.csv"
    with counts_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "k", "w_star", "w_zero", "w_total",
                         "g_star", "g_zero", "g_total", "match"])
        for t in tables:
            writer.writerow([t.n, t.k, t.w_star, t.w_zero, t.w_total,
                             t.g_star, t.g_zero, t.g_total,
                             "MATCH" if t.matches else "MISMATCH"])

    verification_path = out_dir / "verification.csv"
    with verification_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "k", "words", "subgraphs", "forward_injective",
                         "image_equals_subgraphs", "words_roundtrip",
                         "subgraphs_roundtrip", "class_preserving", "result"])
        for r in reports:
            writer.writerow([
                r.params.n, r.params.k, r.words_enumerated, r.subgraphs_enumerated,
                r.forward_injective, r.image_equals_subgraphs, r.words_roundtrip,
                r.subgraphs_roundtrip, r.class_preserving,
                "PASS" if r.ok else "FAIL",
            ])

    counts_png = out_dir / "counts.png"
    plotting.save_figure(plotting.counts_figure(tables), counts_png)
    verification_png = out_dir / "verification.png"
    plotting.save_figure(plotting.verification_figure(reports), verification_png)

    for path in (counts_path, verification_path, counts_png, verification_png):
        print(f"wrote {path}")

    if any(not r.ok for r in reports):
        return EXIT_VERIFY_FAILED
    if any_mismatch:
        return EXIT_COUNT_MISMATCH
    return EXIT_OK


def cmd_draw(args: argparse.Namespace) -> int:
    from . import plotting

    params = CycleParams(args.n, args.k)
    word = parse_word(_word_text(args), params)
    graph = word_to_subgraph(word)
    title = f"{word} on the {params.cycle_length}-cycle"
    plotting.save_subgraph_figure(graph, args.out, title=title)
    print(f"wrote {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BadParamsError, WordError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SubgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())

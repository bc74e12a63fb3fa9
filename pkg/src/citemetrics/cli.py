"""Command line interface.

Three subcommands: ``ingest`` turns raw CSVs into a matrix fixture,
``metric`` evaluates one indicator against a fixture, ``report`` renders the
seven-column table. Exit codes: 0 success, 1 usage or input parse problems,
2 requested metric undefined, 3 fixture failed validation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    AliasTableError,
    FixtureError,
    ParseError,
    UndefinedMetricError,
)
from .fixture import load_fixture, save_fixture
from .ingest import (
    backdated_records,
    deduplicate_events,
    load_alias_table,
    normalize_journal_names,
    parse_citations,
    parse_publications,
)
from .matrix import augment_diachronous, augment_synchronous, build_pc_matrix
from .metrics import MetricRequest, evaluate
from .report import build_report, format_ratio, render_csv, render_structured, render_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_FIXTURE = 3

_METRIC_KINDS = (
    "garfield_if",
    "sync_if",
    "diach_if",
    "sync_jdf",
    "diach_jdf",
    "sync_rdf",
    "diach_rdf",
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for
    # undefined metrics, so usage problems are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="citemetrics", description="journal impact and diffusion indicators")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="parse CSVs into a matrix fixture")
    ingest.add_argument("--pubs", required=True, help="publications CSV: year,count or article_id,year")
    ingest.add_argument("--cites", required=True, help="citations CSV")
    ingest.add_argument("--aliases", help="journal alias CSV: raw,canonical")
    ingest.add_argument("--matrix", required=True, help="fixture file to write")
    ingest.set_defaults(func=cmd_ingest)

    metric = sub.add_parser("metric", help="evaluate one indicator")
    metric.add_argument("--matrix", required=True, help="fixture file to read")
    metric.add_argument("--kind", required=True, choices=_METRIC_KINDS)
    metric.add_argument("--year", required=True, type=int)
    metric.add_argument("--window", help="window length in years, or 'max'")
    metric.add_argument("--shift", type=int, default=1, help="first citing year offset (diach_if only)")
    metric.add_argument(
        "--no-clip",
        action="store_true",
        help="treat windows reaching past the matrix bounds as undefined instead of truncating",
    )
    metric.add_argument("--precision", type=int, default=2, help="decimal places in the rendering")
    metric.add_argument("--format", choices=("text", "structured"), default="text")
    metric.set_defaults(func=cmd_metric)

    report = sub.add_parser("report", help="render the seven-column indicator report")
    report.add_argument("--matrix", required=True, help="fixture file to read")
    report.add_argument("--format", choices=("table", "csv", "structured"), default="table")
    report.set_defaults(func=cmd_report)

    return parser


def cmd_ingest(args) -> int:
    with open(args.pubs, newline="", encoding="utf-8") as fh:
        ledger = parse_publications(fh)
    with open(args.cites, newline="", encoding="utf-8") as fh:
        records = parse_citations(fh)
    alias_table = None
    if args.aliases:
        with open(args.aliases, newline="", encoding="utf-8") as fh:
            alias_table = load_alias_table(fh)

    _, event_list = normalize_journal_names(records, alias_table)
    events, removed = deduplicate_events(event_list)
    backdated = backdated_records(records)

    if ledger.years is None:
        raise ParseError("publications file contains no data rows")
    pub_span = ledger.years
    if events:
        cite_span = (min(e.citing_year for e in events), max(e.citing_year for e in events))
    else:
        cite_span = pub_span

    matrix = build_pc_matrix(events, ledger, pub_span, cite_span)
    sync = augment_synchronous(matrix, events)
    diach = augment_diachronous(matrix, events)
    save_fixture(args.matrix, matrix, sync, diach)

    print(f"wrote {args.matrix}")
    print(f"citation rows parsed: {len(records)}")
    print(f"duplicate rows removed: {removed}")
    print(f"events outside the matrix years (clipped): {matrix.n_clipped}")
    note = f"citations dated before publication (kept): {len(backdated)}"
    if backdated:
        lines = ", ".join(str(r.source_line) for r in backdated[:20])
        more = " ..." if len(backdated) > 20 else ""
        note += f" [lines {lines}{more}]"
    print(note)
    return EXIT_OK


def _parse_window(text: str | None) -> int | None:
    if text is None or text.strip().lower() == "max":
        return None
    try:
        window = int(text)
    except ValueError:
        raise ParseError(f"--window must be a positive integer or 'max', got {text!r}") from None
    if window < 1:
        raise ParseError(f"--window must be a positive integer or 'max', got {text!r}")
    return window


def cmd_metric(args) -> int:
    if args.kind != "garfield_if" and args.window is None:
        raise ParseError(f"--window is required for {args.kind} (an integer or 'max')")
    if args.precision < 0:
        raise ParseError("--precision must be non-negative")
    fixture = load_fixture(args.matrix)
    if args.kind in ("sync_jdf", "sync_rdf") and fixture.sync is None:
        raise FixtureError(
            f"{args.matrix} has no unique_new_sync block; regenerate it with 'citemetrics ingest'"
        )
    if args.kind in ("diach_jdf", "diach_rdf") and fixture.diach is None:
        raise FixtureError(
            f"{args.matrix} has no unique_new_diach block; regenerate it with 'citemetrics ingest'"
        )
    request = MetricRequest(
        kind=args.kind,
        year=args.year,
        window=_parse_window(args.window),
        shift=args.shift,
        clip=not args.no_clip,
    )
    value = evaluate(request, fixture.matrix, fixture.sync, fixture.diach)
    rendered = format_ratio(value.numerator, value.denominator, args.precision)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "kind": request.kind,
                    "year": request.year,
                    "window": "max" if request.window is None else request.window,
                    "shift": request.shift,
                    "clip": request.clip,
                    "value": rendered,
                    "numerator": value.numerator,
                    "denominator": value.denominator,
                    "cells": [list(cell) for cell in value.effective_window],
                }
            )
        )
    else:
        print(f"{rendered} (exact {value.numerator}/{value.denominator})")
    return EXIT_OK


def cmd_report(args) -> int:
    fixture = load_fixture(args.matrix)
    if fixture.sync is None or fixture.diach is None:
        raise FixtureError(
            f"{args.matrix} lacks the unique_new_sync/unique_new_diach blocks the report needs; "
            "regenerate it with 'citemetrics ingest'"
        )
    rows = build_report(fixture.matrix, fixture.sync, fixture.diach)
    if args.format == "csv":
        sys.stdout.write(render_csv(rows))
    elif args.format == "structured":
        print(json.dumps(render_structured(rows)))
    else:
        print(render_table(rows))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, AliasTableError) as exc:
        print(f"citemetrics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UndefinedMetricError as exc:
        print(f"citemetrics: undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except FixtureError as exc:
        print(f"citemetrics: bad fixture: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except OSError as exc:
        print(f"citemetrics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

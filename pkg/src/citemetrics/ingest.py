"""Citation ingestion: CSV parsing, journal-name normalization, deduplication.

The pipeline turns two CSV files (publications and citation events) into a
publication ledger plus a clean set of citation events:

    parse_records -> normalize_journal_names -> deduplicate_events

Citing-journal names arrive as free text, and distinct spellings of one
journal would inflate every unique-journal indicator downstream, so names are
normalized before any counting. Normalization is deliberately conservative
(no fuzzy matching); genuinely different spellings of the same journal are
reconciled through an explicit alias table supplied by the caller.
"""

from __future__ import annotations

import csv
import string
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping

from .errors import AliasTableError, ParseError

PUBLICATIONS_COUNT_HEADER = ("year", "count")
PUBLICATIONS_ARTICLE_HEADER = ("article_id", "year")
CITATIONS_HEADER = ("cited_article_id", "cited_pub_year", "citing_journal", "citing_year")
CITATIONS_HEADER_WITH_ID = CITATIONS_HEADER + ("citing_article_id",)

# Stripped from the tail of a normalized name. ASCII only, on purpose:
# terminal "." and ";" are data-entry noise, exotic punctuation is not ours
# to guess about.
_TRAILING_JUNK = string.punctuation + " "


@dataclass(frozen=True)
class RawCitationRecord:
    """One citation row exactly as parsed, before normalization."""

    cited_article_id: str
    cited_pub_year: int
    citing_journal_raw: str
    citing_year: int
    citing_article_id: str | None = None
    source_line: int = 0


@dataclass(frozen=True)
class JournalId:
    """A canonical journal identity plus the raw spellings mapped onto it.

    Equality and hashing use only the canonical name, so two JournalIds built
    from different alias sets still collapse to one journal in set arithmetic.
    """

    canonical_name: str
    aliases: frozenset[str] = field(default_factory=frozenset, compare=False)


@dataclass(frozen=True)
class CitationEvent:
    """One citation of one article by one (canonicalized) journal."""

    cited_article_id: str
    cited_pub_year: int
    citing_journal: JournalId
    citing_year: int
    citing_article_id: str | None = None


@dataclass(frozen=True)
class PublicationLedger:
    """Article counts per publication year over a contiguous year window."""

    counts: Mapping[int, int]

    def __post_init__(self):
        years = sorted(self.counts)
        if years and years != list(range(years[0], years[-1] + 1)):
            raise ValueError("publication years must form a contiguous window")
        for year, n in self.counts.items():
            if n < 0:
                raise ValueError(f"negative publication count for {year}")

    @property
    def years(self) -> tuple[int, int] | None:
        """Inclusive (first, last) publication years, or None when empty."""
        if not self.counts:
            return None
        return (min(self.counts), max(self.counts))

    def count(self, year: int) -> int:
        return self.counts[year]


def _cells(row: list[str]) -> list[str]:
    return [cell.strip() for cell in row]


def _header(row: list[str]) -> tuple[str, ...]:
    return tuple(cell.strip().lstrip("﻿").lower() for cell in row)


def _parse_year(text: str, *, line: int, column: str) -> int:
    if not (len(text) == 4 and text.isascii() and text.isdigit()):
        raise ParseError(f"expected a 4-digit year, got {text!r}", line=line, column=column)
    return int(text)


def _parse_count(text: str, *, line: int, column: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line=line, column=column) from None
    if n < 0:
        raise ParseError(f"count must be non-negative, got {n}", line=line, column=column)
    return n


def parse_publications(stream: IO[str]) -> PublicationLedger:
    """Parse a publications CSV.

    Two layouts are accepted, distinguished by the header row: aggregated
    counts (``year,count``) or one row per article (``article_id,year``).
    Years missing from the middle of the observed span get a zero count, so
    the resulting ledger is always contiguous.
    """
    reader = csv.reader(stream)
    try:
        header = _header(next(reader))
    except StopIteration:
        raise ParseError("publications file is empty (missing header row)", line=1) from None
    if header == PUBLICATIONS_COUNT_HEADER:
        counts = _parse_publication_counts(reader)
    elif header == PUBLICATIONS_ARTICLE_HEADER:
        counts = _parse_publication_articles(reader)
    else:
        raise ParseError(
            "unrecognized publications header; expected 'year,count' or 'article_id,year'",
            line=1,
        )
    if counts:
        lo, hi = min(counts), max(counts)
        counts = {y: counts.get(y, 0) for y in range(lo, hi + 1)}
    return PublicationLedger(counts)


def _parse_publication_counts(reader) -> dict[int, int]:
    counts: dict[int, int] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        cells = _cells(row)
        if len(cells) != 2:
            raise ParseError(f"expected 2 fields, got {len(cells)}", line=line)
        year = _parse_year(cells[0], line=line, column="year")
        if year in counts:
            raise ParseError(f"duplicate year {year}", line=line, column="year")
        counts[year] = _parse_count(cells[1], line=line, column="count")
    return counts


def _parse_publication_articles(reader) -> dict[int, int]:
    counts: dict[int, int] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        cells = _cells(row)
        if len(cells) != 2:
            raise ParseError(f"expected 2 fields, got {len(cells)}", line=line)
        if not cells[0]:
            raise ParseError("article_id is empty", line=line, column="article_id")
        year = _parse_year(cells[1], line=line, column="year")
        counts[year] = counts.get(year, 0) + 1
    return counts


def parse_citations(stream: IO[str]) -> list[RawCitationRecord]:
    """Parse a citations CSV into raw records, one per data row.

    The header decides whether the optional ``citing_article_id`` column is
    present; when it is, an empty cell means "identifier unknown". Rows are
    kept in file order and remember their line number for later diagnostics.
    """
    reader = csv.reader(stream)
    try:
        header = _header(next(reader))
    except StopIteration:
        raise ParseError("citations file is empty (missing header row)", line=1) from None
    if header == CITATIONS_HEADER:
        width = 4
    elif header == CITATIONS_HEADER_WITH_ID:
        width = 5
    else:
        raise ParseError(
            "unrecognized citations header; expected "
            "'cited_article_id,cited_pub_year,citing_journal,citing_year[,citing_article_id]'",
            line=1,
        )
    records = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        cells = _cells(row)
        if len(cells) != width:
            raise ParseError(f"expected {width} fields, got {len(cells)}", line=line)
        if not cells[0]:
            raise ParseError("cited_article_id is empty", line=line, column="cited_article_id")
        cited_pub_year = _parse_year(cells[1], line=line, column="cited_pub_year")
        if not cells[2]:
            raise ParseError("citing_journal is empty", line=line, column="citing_journal")
        citing_year = _parse_year(cells[3], line=line, column="citing_year")
        citing_article_id = (cells[4] or None) if width == 5 else None
        records.append(
            RawCitationRecord(
                cited_article_id=cells[0],
                cited_pub_year=cited_pub_year,
                citing_journal_raw=cells[2],
                citing_year=citing_year,
                citing_article_id=citing_article_id,
                source_line=line,
            )
        )
    return records


def parse_records(pub_stream: IO[str], cite_stream: IO[str]) -> tuple[PublicationLedger, list[RawCitationRecord]]:
    """Parse both input files in one call."""
    return parse_publications(pub_stream), parse_citations(cite_stream)


def normalize_journal_name(raw: str) -> str:
    """Canonical form of a citing-journal string.

    Case-folds, collapses whitespace runs to single spaces, trims the ends,
    and strips trailing ASCII punctuation ("Lancet." and "lancet" agree).
    Interior punctuation is kept; reconciling abbreviations or alternate
    titles is the alias table's job, not this function's. The result is
    stable under re-normalization.
    """
    return " ".join(raw.casefold().split()).rstrip(_TRAILING_JUNK)


def _normalize_alias_table(alias_table: Mapping[str, str]) -> dict[str, str]:
    normalized: dict[str, str] = {}
    for raw, canonical in alias_table.items():
        key = normalize_journal_name(raw)
        value = normalize_journal_name(canonical)
        if not key or not value:
            raise AliasTableError(f"alias entry {raw!r} -> {canonical!r} normalizes to an empty name")
        if normalized.get(key, value) != value:
            raise AliasTableError(
                f"alias {key!r} maps to both {normalized[key]!r} and {value!r}"
            )
        normalized[key] = value
    return normalized


def load_alias_table(stream: IO[str]) -> dict[str, str]:
    """Read a ``raw,canonical`` CSV into a normalized alias mapping."""
    reader = csv.reader(stream)
    try:
        header = _header(next(reader))
    except StopIteration:
        raise ParseError("alias file is empty (missing header row)", line=1) from None
    if header != ("raw", "canonical"):
        raise ParseError("unrecognized alias header; expected 'raw,canonical'", line=1)
    table: dict[str, str] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        cells = _cells(row)
        if len(cells) != 2:
            raise ParseError(f"expected 2 fields, got {len(cells)}", line=line)
        raw, canonical = cells
        if not raw:
            raise ParseError("raw name is empty", line=line, column="raw")
        if not canonical:
            raise ParseError("canonical name is empty", line=line, column="canonical")
        if table.get(raw, canonical) != canonical:
            raise AliasTableError(f"line {line}: alias {raw!r} maps to both {table[raw]!r} and {canonical!r}")
        table[raw] = canonical
    return _normalize_alias_table(table)


def normalize_journal_names(
    records: Iterable[RawCitationRecord],
    alias_table: Mapping[str, str] | None = None,
) -> tuple[set[JournalId], list[CitationEvent]]:
    """Resolve raw journal spellings to canonical identities.

    Every record's journal string is normalized and then, if the normalized
    form appears in the alias table, replaced by its canonical target (one
    application, no chaining). Returns the set of distinct journals and the
    records re-expressed as events, in input order.
    """
    records = list(records)
    overrides = _normalize_alias_table(alias_table) if alias_table else {}
    spellings: dict[str, set[str]] = {}
    resolved: list[str] = []
    for record in records:
        base = normalize_journal_name(record.citing_journal_raw)
        canonical = overrides.get(base, base)
        if not canonical:
            raise ParseError(
                "journal name is empty after normalization",
                line=record.source_line,
                column="citing_journal",
            )
        spellings.setdefault(canonical, set()).add(record.citing_journal_raw)
        resolved.append(canonical)
    journals = {
        name: JournalId(name, frozenset(raws)) for name, raws in spellings.items()
    }
    events = [
        CitationEvent(
            cited_article_id=record.cited_article_id,
            cited_pub_year=record.cited_pub_year,
            citing_journal=journals[name],
            citing_year=record.citing_year,
            citing_article_id=record.citing_article_id,
        )
        for record, name in zip(records, resolved)
    ]
    return set(journals.values()), events


def deduplicate_events(events: Iterable[CitationEvent]) -> tuple[set[CitationEvent], int]:
    """Drop exact duplicate events. Returns the survivors and the removed count.

    Two events are duplicates only when every field agrees, including
    ``citing_article_id``; two citing articles in the same journal and year
    are real, distinct citations and both survive.
    """
    events = list(events)
    unique = set(events)
    return unique, len(events) - len(unique)


def backdated_records(records: Iterable[RawCitationRecord]) -> list[RawCitationRecord]:
    """Records whose citing year precedes the cited publication year.

    These are usually data errors (or early online versions); they are kept,
    and callers decide whether to report them.
    """
    return [r for r in records if r.citing_year < r.cited_pub_year]

"""Publication-citation matrices and their unique-new-journal augmentations.

A matrix cell (k, i) counts citations made in year k to articles published in
year i. The two augmentations annotate each cell with how many *journals*
appear there for the first time, under two different reading orders:

* synchronous: within each citation-year row, scanning from the most recent
  publication year backwards, so a journal is counted at the newest
  publication year it cites that year;
* diachronous: within each publication-year column, scanning forward in
  citation time, so a journal is counted at the earliest year it cites that
  column.

Cells above the diagonal (citation year before publication year) are never
scanned; any unique-new count there stays zero even if citations exist.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .ingest import CitationEvent, JournalId, PublicationLedger

SYNCHRONOUS = "synchronous"
DIACHRONOUS = "diachronous"

YearSpan = tuple[int, int]
Cell = tuple[int, int]  # (citation year, publication year)


def year_range(span: YearSpan) -> range:
    """Iterate an inclusive (first, last) year span."""
    return range(span[0], span[1] + 1)


@dataclass(frozen=True)
class PubCitMatrix:
    """Citation counts on a (citation year, publication year) grid.

    ``citations`` holds every cell of the grid, zero-filled. ``n_clipped``
    records how many source events fell outside the grid during the build; it
    is bookkeeping, not data, and is excluded from equality.
    """

    pub_years: YearSpan
    cite_years: YearSpan
    publications: PublicationLedger
    citations: Mapping[Cell, int]
    n_clipped: int = field(default=0, compare=False)

    def _check_cell(self, citation_year: int, pub_year: int) -> Cell:
        cell = (citation_year, pub_year)
        if cell not in self.citations:
            raise ValueError(
                f"cell ({citation_year}, {pub_year}) is outside the matrix "
                f"(citation years {self.cite_years}, publication years {self.pub_years})"
            )
        return cell

    def cit(self, citation_year: int, pub_year: int) -> int:
        return self.citations[self._check_cell(citation_year, pub_year)]

    def pub(self, year: int) -> int:
        lo, hi = self.pub_years
        if not lo <= year <= hi:
            raise ValueError(f"{year} is outside the publication years {self.pub_years}")
        return self.publications.count(year)

    def covers_pub_year(self, year: int) -> bool:
        return self.pub_years[0] <= year <= self.pub_years[1]

    def covers_cite_year(self, year: int) -> bool:
        return self.cite_years[0] <= year <= self.cite_years[1]

    def column_total(self, pub_year: int) -> int:
        """All citations received by one publication year."""
        return sum(self.cit(k, pub_year) for k in year_range(self.cite_years))

    def row_total(self, citation_year: int) -> int:
        """All citations given in one citation year."""
        return sum(self.cit(citation_year, i) for i in year_range(self.pub_years))


@dataclass(frozen=True)
class AugmentedMatrix:
    """A matrix plus per-cell first-appearance journal counts for one variant."""

    variant: str
    unique_new: Mapping[Cell, int]
    base: PubCitMatrix

    def __post_init__(self):
        if self.variant not in (SYNCHRONOUS, DIACHRONOUS):
            raise ValueError(f"unknown augmentation variant {self.variant!r}")

    def unique(self, citation_year: int, pub_year: int) -> int:
        return self.unique_new[self.base._check_cell(citation_year, pub_year)]


def _check_span(span: YearSpan, what: str) -> YearSpan:
    lo, hi = span
    if lo > hi:
        raise ValueError(f"{what} span {span} is empty")
    return (lo, hi)


def build_pc_matrix(
    events: Iterable[CitationEvent],
    ledger: PublicationLedger,
    pub_years: YearSpan,
    cite_years: YearSpan,
) -> PubCitMatrix:
    """Tally events onto the grid.

    Events whose years fall outside the grid are not an error; they are
    dropped and counted in ``n_clipped``. The ledger must supply a count for
    every publication year of the grid.
    """
    pub_years = _check_span(pub_years, "publication year")
    cite_years = _check_span(cite_years, "citation year")
    for year in year_range(pub_years):
        if year not in ledger.counts:
            raise ValueError(f"publication ledger has no count for {year}")
    cells = {(k, i): 0 for k in year_range(cite_years) for i in year_range(pub_years)}
    clipped = 0
    for event in events:
        cell = (event.citing_year, event.cited_pub_year)
        if cell in cells:
            cells[cell] += 1
        else:
            clipped += 1
    return PubCitMatrix(pub_years, cite_years, ledger, cells, n_clipped=clipped)


def _journals_per_cell(
    matrix: PubCitMatrix, events: Iterable[CitationEvent]
) -> dict[Cell, set[JournalId]]:
    """Group in-grid events by cell, verifying they recount the matrix."""
    counts: Counter[Cell] = Counter()
    journals: defaultdict[Cell, set[JournalId]] = defaultdict(set)
    for event in events:
        cell = (event.citing_year, event.cited_pub_year)
        if cell in matrix.citations:
            counts[cell] += 1
            journals[cell].add(event.citing_journal)
    if dict(counts) != {cell: n for cell, n in matrix.citations.items() if n}:
        raise ValueError("event set is inconsistent with the matrix cell counts")
    return journals


def augment_synchronous(matrix: PubCitMatrix, events: Iterable[CitationEvent]) -> AugmentedMatrix:
    """Count each journal once per citation year, at the newest publication
    year it cites within that year."""
    journals = _journals_per_cell(matrix, events)
    unique = {cell: 0 for cell in matrix.citations}
    pub_lo, pub_hi = matrix.pub_years
    for k in year_range(matrix.cite_years):
        seen: set[JournalId] = set()
        for i in range(min(k, pub_hi), pub_lo - 1, -1):
            here = journals.get((k, i), ())
            unique[(k, i)] = sum(1 for j in here if j not in seen)
            seen.update(here)
    return AugmentedMatrix(SYNCHRONOUS, unique, matrix)


def augment_diachronous(matrix: PubCitMatrix, events: Iterable[CitationEvent]) -> AugmentedMatrix:
    """Count each journal once per publication year, at the earliest year it
    cites that publication year."""
    journals = _journals_per_cell(matrix, events)
    unique = {cell: 0 for cell in matrix.citations}
    cite_lo, cite_hi = matrix.cite_years
    for i in year_range(matrix.pub_years):
        seen: set[JournalId] = set()
        for k in range(max(i, cite_lo), cite_hi + 1):
            here = journals.get((k, i), ())
            unique[(k, i)] = sum(1 for j in here if j not in seen)
            seen.update(here)
    return AugmentedMatrix(DIACHRONOUS, unique, matrix)


def distinct_journals_block(
    events: Iterable[CitationEvent], pub_years: YearSpan, cite_years: YearSpan
) -> int:
    """Number of distinct citing journals in a rectangular year block.

    This is the brute-force ground truth the augmentations must agree with:
    summing unique-new counts along a full scan line equals the distinct
    count over the same cells.
    """
    (pub_lo, pub_hi), (cite_lo, cite_hi) = pub_years, cite_years
    return len(
        {
            event.citing_journal
            for event in events
            if pub_lo <= event.cited_pub_year <= pub_hi
            and cite_lo <= event.citing_year <= cite_hi
        }
    )

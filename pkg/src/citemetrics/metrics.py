"""Impact and diffusion indicators over a publication-citation matrix.

Every indicator is a ratio of two cell/ledger sums, so each result is an
exact rational: a :class:`MetricValue` keeps the raw numerator and
denominator (never reduced) plus the cells that were summed. Rounding is the
rendering layer's problem.

Window conventions, shared by the whole family:

* ``window=None`` means "the largest window this matrix supports" for the
  given year, resolved per indicator;
* ``clip=True`` (the default) truncates a window at the matrix boundary and
  computes over what remains; ``clip=False`` insists on every requested year
  and raises :class:`UndefinedMetricError` when one is missing.

The impact factors look *backwards* from a citation year at the publications
of the preceding years, while the diachronous family looks *forwards* from a
publication year at the citations it accumulates. Diffusion factors divide
first-appearance journal counts by publications (JDF) or by citations (RDF,
"relative"), so an RDF is always in (0, 1] whenever it is defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UndefinedMetricError
from .ingest import CitationEvent
from .matrix import (
    DIACHRONOUS,
    SYNCHRONOUS,
    AugmentedMatrix,
    Cell,
    PubCitMatrix,
    YearSpan,
    distinct_journals_block,
    year_range,
)

KINDS = (
    "garfield_if",
    "sync_if",
    "diach_if",
    "sync_jdf",
    "diach_jdf",
    "sync_rdf",
    "diach_rdf",
    "rowlands_jdf",
)


@dataclass(frozen=True)
class MetricValue:
    """An exact indicator value: raw sums plus the cells they came from."""

    numerator: int
    denominator: int
    effective_window: tuple[Cell, ...]

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class MetricRequest:
    """A single indicator request, as the CLI and report layer express it."""

    kind: str
    year: int
    window: int | None = None
    shift: int = 1
    clip: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown metric kind {self.kind!r}")
        _check_window(self.window)
        if self.shift < 0:
            raise ValueError("shift must be non-negative")


def _check_window(window: int | None) -> None:
    if window is not None and window < 1:
        raise ValueError("window must be a positive number of years (or None for max)")


def _undefined(message: str, missing: Sequence[int] = ()) -> None:
    raise UndefinedMetricError(message, missing_years=tuple(missing))


def _backward_years(
    matrix: PubCitMatrix, year: int, window: int | None, clip: bool, newest_offset: int
) -> list[int]:
    """Publication years for a row-wise window, newest first.

    The window starts at ``year - newest_offset`` and extends ``window`` years
    into the past (offset 1 for impact factors, 0 for the diffusion family,
    which includes the in-year diagonal cell).
    """
    _check_window(window)
    pub_lo, pub_hi = matrix.pub_years
    newest = year - newest_offset
    if window is None:
        if newest < pub_lo:
            _undefined(
                f"no publication years at or before {newest} in {pub_lo}-{pub_hi}",
                [newest],
            )
        return list(range(min(newest, pub_hi), pub_lo - 1, -1))
    wanted = [newest - j for j in range(window)]
    inside = [y for y in wanted if pub_lo <= y <= pub_hi]
    if clip:
        if not inside:
            _undefined(
                f"window {wanted[-1]}-{wanted[0]} has no overlap with publication years "
                f"{pub_lo}-{pub_hi}",
                wanted,
            )
        return inside
    missing = [y for y in wanted if not pub_lo <= y <= pub_hi]
    if missing:
        _undefined(
            f"publication years {missing} are outside {pub_lo}-{pub_hi} and clipping is off",
            missing,
        )
    return wanted


def _forward_years(
    matrix: PubCitMatrix, year: int, window: int | None, shift: int, clip: bool
) -> list[int]:
    """Citation years for a column-wise window: year+shift onwards."""
    _check_window(window)
    cite_lo, cite_hi = matrix.cite_years
    first = year + shift
    if window is None:
        if first > cite_hi:
            _undefined(
                f"no citation years at or after {first} in {cite_lo}-{cite_hi}",
                [first],
            )
        return list(range(max(first, cite_lo), cite_hi + 1))
    wanted = [first + j for j in range(window)]
    inside = [k for k in wanted if cite_lo <= k <= cite_hi]
    if clip:
        if not inside:
            _undefined(
                f"window {wanted[0]}-{wanted[-1]} has no overlap with citation years "
                f"{cite_lo}-{cite_hi}",
                wanted,
            )
        return inside
    missing = [k for k in wanted if not cite_lo <= k <= cite_hi]
    if missing:
        _undefined(
            f"citation years {missing} are outside {cite_lo}-{cite_hi} and clipping is off",
            missing,
        )
    return wanted


def _require_citation_year(matrix: PubCitMatrix, year: int) -> None:
    if not matrix.covers_cite_year(year):
        _undefined(
            f"{year} is outside the citation years {matrix.cite_years[0]}-{matrix.cite_years[1]}",
            [year],
        )


def _require_publication_year(matrix: PubCitMatrix, year: int, *, need_articles: bool) -> None:
    if not matrix.covers_pub_year(year):
        _undefined(
            f"{year} is outside the publication years {matrix.pub_years[0]}-{matrix.pub_years[1]}",
            [year],
        )
    if need_articles and matrix.pub(year) == 0:
        _undefined(f"no articles were published in {year}", [year])


def _require_variant(augmented: AugmentedMatrix, variant: str) -> None:
    if augmented.variant != variant:
        raise ValueError(f"this metric needs the {variant} augmentation, got {augmented.variant}")


def garfield_if(matrix: PubCitMatrix, year: int) -> MetricValue:
    """Classic two-year impact factor: citations in ``year`` to the two prior
    years' articles, divided by those years' article counts. No clipping;
    both prior years must exist."""
    _require_citation_year(matrix, year)
    pub_lo, pub_hi = matrix.pub_years
    prior = (year - 1, year - 2)
    missing = [y for y in prior if not pub_lo <= y <= pub_hi]
    if missing:
        _undefined(
            f"impact factor for {year} needs publications in {year - 2} and {year - 1}; "
            f"{missing} outside {pub_lo}-{pub_hi}",
            missing,
        )
    denominator = matrix.pub(year - 1) + matrix.pub(year - 2)
    if denominator == 0:
        _undefined(f"no articles were published in {year - 2}-{year - 1}", prior)
    cells = tuple((year, y) for y in prior)
    numerator = sum(matrix.cit(*cell) for cell in cells)
    return MetricValue(numerator, denominator, cells)


def sync_if(matrix: PubCitMatrix, year: int, window: int | None, *, clip: bool = True) -> MetricValue:
    """Synchronous impact factor: one citation year's citations to the
    previous ``window`` years, divided by the articles of those years."""
    _require_citation_year(matrix, year)
    years = _backward_years(matrix, year, window, clip, newest_offset=1)
    denominator = sum(matrix.pub(i) for i in years)
    if denominator == 0:
        _undefined(f"no articles were published in {sorted(years)}", years)
    cells = tuple((year, i) for i in years)
    numerator = sum(matrix.cit(*cell) for cell in cells)
    return MetricValue(numerator, denominator, cells)


def diach_if(
    matrix: PubCitMatrix,
    year: int,
    window: int | None,
    *,
    shift: int = 1,
    clip: bool = True,
) -> MetricValue:
    """Diachronous impact factor: citations accumulated by ``year``'s articles
    over ``window`` citation years starting at ``year + shift``, divided by
    the articles published in ``year``."""
    if shift < 0:
        raise ValueError("shift must be non-negative")
    _require_publication_year(matrix, year, need_articles=True)
    citing = _forward_years(matrix, year, window, shift, clip)
    cells = tuple((k, year) for k in citing)
    numerator = sum(matrix.cit(*cell) for cell in cells)
    return MetricValue(numerator, matrix.pub(year), cells)


def sync_jdf(
    augmented: AugmentedMatrix, year: int, window: int | None, *, clip: bool = True
) -> MetricValue:
    """Synchronous journal diffusion factor: first-appearance journals in one
    citation year's row (window includes the in-year cell) per article
    published in the window."""
    _require_variant(augmented, SYNCHRONOUS)
    matrix = augmented.base
    _require_citation_year(matrix, year)
    years = _backward_years(matrix, year, window, clip, newest_offset=0)
    denominator = sum(matrix.pub(i) for i in years)
    if denominator == 0:
        _undefined(f"no articles were published in {sorted(years)}", years)
    cells = tuple((year, i) for i in years)
    numerator = sum(augmented.unique(*cell) for cell in cells)
    return MetricValue(numerator, denominator, cells)


def sync_rdf(
    augmented: AugmentedMatrix, year: int, window: int | None, *, clip: bool = True
) -> MetricValue:
    """Relative synchronous diffusion: first-appearance journals per citation
    over the same row window as :func:`sync_jdf`."""
    _require_variant(augmented, SYNCHRONOUS)
    matrix = augmented.base
    _require_citation_year(matrix, year)
    years = _backward_years(matrix, year, window, clip, newest_offset=0)
    cells = tuple((year, i) for i in years)
    denominator = sum(matrix.cit(*cell) for cell in cells)
    if denominator == 0:
        _undefined(f"no citations were made in {year} within the window", [year])
    numerator = sum(augmented.unique(*cell) for cell in cells)
    return MetricValue(numerator, denominator, cells)


def diach_jdf(
    augmented: AugmentedMatrix, year: int, window: int | None, *, clip: bool = True
) -> MetricValue:
    """Diachronous journal diffusion factor: journals newly citing ``year``'s
    articles (earliest appearance per journal) per article published."""
    _require_variant(augmented, DIACHRONOUS)
    matrix = augmented.base
    _require_publication_year(matrix, year, need_articles=True)
    citing = _forward_years(matrix, year, window, shift=0, clip=clip)
    cells = tuple((k, year) for k in citing)
    numerator = sum(augmented.unique(*cell) for cell in cells)
    return MetricValue(numerator, matrix.pub(year), cells)


def diach_rdf(
    augmented: AugmentedMatrix, year: int, window: int | None, *, clip: bool = True
) -> MetricValue:
    """Relative diachronous diffusion: journals newly citing ``year``'s
    articles per citation received in the window."""
    _require_variant(augmented, DIACHRONOUS)
    matrix = augmented.base
    _require_publication_year(matrix, year, need_articles=False)
    citing = _forward_years(matrix, year, window, shift=0, clip=clip)
    cells = tuple((k, year) for k in citing)
    denominator = sum(matrix.cit(*cell) for cell in cells)
    if denominator == 0:
        _undefined(f"articles published in {year} received no citations in the window", [year])
    numerator = sum(augmented.unique(*cell) for cell in cells)
    return MetricValue(numerator, denominator, cells)


def rowlands_jdf(
    events: Iterable[CitationEvent],
    matrix: PubCitMatrix,
    pub_window: YearSpan,
    cite_window: YearSpan,
) -> MetricValue:
    """Distinct citing journals per 100 citations over a rectangular block.

    Unlike the scan-based diffusion factors this one needs the events
    themselves: a journal citing in two different years of the block must
    still count once. The caller is trusted to pass the same event set the
    matrix was built from; cell counts are read from the matrix. Windows are
    clipped to the matrix spans.
    """
    pub_clipped = (max(pub_window[0], matrix.pub_years[0]), min(pub_window[1], matrix.pub_years[1]))
    cite_clipped = (
        max(cite_window[0], matrix.cite_years[0]),
        min(cite_window[1], matrix.cite_years[1]),
    )
    if pub_clipped[0] > pub_clipped[1] or cite_clipped[0] > cite_clipped[1]:
        _undefined("the requested block has no overlap with the matrix year spans")
    cells = tuple((k, i) for k in year_range(cite_clipped) for i in year_range(pub_clipped))
    denominator = sum(matrix.cit(*cell) for cell in cells)
    if denominator == 0:
        _undefined("no citations fall inside the block")
    numerator = 100 * distinct_journals_block(events, pub_clipped, cite_clipped)
    return MetricValue(numerator, denominator, cells)


def evaluate(
    request: MetricRequest,
    matrix: PubCitMatrix,
    sync: AugmentedMatrix | None = None,
    diach: AugmentedMatrix | None = None,
) -> MetricValue:
    """Dispatch a request to the right indicator.

    ``rowlands_jdf`` is excluded: it works on raw events, not on a matrix, so
    it has no meaningful request form here.
    """
    kind, year = request.kind, request.year
    if kind == "garfield_if":
        return garfield_if(matrix, year)
    if kind == "sync_if":
        return sync_if(matrix, year, request.window, clip=request.clip)
    if kind == "diach_if":
        return diach_if(matrix, year, request.window, shift=request.shift, clip=request.clip)
    if kind in ("sync_jdf", "sync_rdf"):
        if sync is None:
            raise ValueError(f"{kind} needs the synchronous augmented matrix")
        fn = sync_jdf if kind == "sync_jdf" else sync_rdf
        return fn(sync, year, request.window, clip=request.clip)
    if kind in ("diach_jdf", "diach_rdf"):
        if diach is None:
            raise ValueError(f"{kind} needs the diachronous augmented matrix")
        fn = diach_jdf if kind == "diach_jdf" else diach_rdf
        return fn(diach, year, request.window, clip=request.clip)
    raise ValueError("rowlands_jdf works on citation events; call rowlands_jdf() directly")

"""Journal impact and diffusion indicators from publication-citation data."""

from .errors import (
    AliasTableError,
    CiteMetricsError,
    FixtureError,
    ParseError,
    UndefinedCorrelationError,
    UndefinedMetricError,
)
from .ingest import (
    CitationEvent,
    JournalId,
    PublicationLedger,
    RawCitationRecord,
    backdated_records,
    deduplicate_events,
    load_alias_table,
    normalize_journal_name,
    normalize_journal_names,
    parse_citations,
    parse_publications,
    parse_records,
)
from .matrix import (
    DIACHRONOUS,
    SYNCHRONOUS,
    AugmentedMatrix,
    PubCitMatrix,
    augment_diachronous,
    augment_synchronous,
    build_pc_matrix,
    distinct_journals_block,
    year_range,
)
from .fixture import MatrixFixture, load_document, load_fixture, save_fixture, to_document
from .metrics import (
    KINDS,
    MetricRequest,
    MetricValue,
    diach_if,
    diach_jdf,
    diach_rdf,
    evaluate,
    garfield_if,
    rowlands_jdf,
    sync_if,
    sync_jdf,
    sync_rdf,
)
from .stats import Series, average_ranks, pearson, spearman
from .report import ReportRow, build_report, format_ratio, render_csv, render_structured, render_table

__version__ = "0.1.0"

__all__ = [
    "AliasTableError",
    "AugmentedMatrix",
    "CitationEvent",
    "CiteMetricsError",
    "DIACHRONOUS",
    "FixtureError",
    "JournalId",
    "KINDS",
    "MatrixFixture",
    "MetricRequest",
    "MetricValue",
    "ParseError",
    "PubCitMatrix",
    "PublicationLedger",
    "RawCitationRecord",
    "ReportRow",
    "SYNCHRONOUS",
    "Series",
    "UndefinedCorrelationError",
    "UndefinedMetricError",
    "augment_diachronous",
    "augment_synchronous",
    "average_ranks",
    "backdated_records",
    "build_pc_matrix",
    "build_report",
    "deduplicate_events",
    "diach_if",
    "diach_jdf",
    "diach_rdf",
    "distinct_journals_block",
    "evaluate",
    "format_ratio",
    "garfield_if",
    "load_alias_table",
    "load_document",
    "load_fixture",
    "normalize_journal_name",
    "normalize_journal_names",
    "parse_citations",
    "parse_publications",
    "parse_records",
    "pearson",
    "render_csv",
    "render_structured",
    "render_table",
    "rowlands_jdf",
    "save_fixture",
    "spearman",
    "sync_if",
    "sync_jdf",
    "sync_rdf",
    "to_document",
    "year_range",
]

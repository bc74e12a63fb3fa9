"""Exception types shared across the package."""

from __future__ import annotations


class CiteMetricsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CiteMetricsError):
    """Malformed input data. Carries file-position context when known."""

    def __init__(self, message: str, *, line: int | None = None, column: str | None = None):
        self.line = line
        self.column = column
        prefix = ""
        if line is not None:
            prefix = f"line {line}"
            if column is not None:
                prefix += f", column {column!r}"
            prefix += ": "
        super().__init__(prefix + message)


class AliasTableError(CiteMetricsError):
    """The journal alias table is inconsistent (e.g. one alias, two targets)."""


class FixtureError(CiteMetricsError):
    """A matrix fixture file failed structural validation."""


class UndefinedMetricError(CiteMetricsError):
    """The requested indicator is undefined for this matrix.

    ``missing_years`` lists the years whose absence (or emptiness) caused it,
    when that is the reason.
    """

    def __init__(self, message: str, missing_years: tuple[int, ...] = ()):
        self.missing_years = tuple(missing_years)
        super().__init__(message)


class UndefinedCorrelationError(CiteMetricsError):
    """Correlation is undefined, e.g. because one series is constant."""

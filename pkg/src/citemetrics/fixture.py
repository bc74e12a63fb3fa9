"""Matrix fixture files.

A fixture is a JSON object with exactly these fields:

* ``pub_years``, ``cite_years``: inclusive ``[first, last]`` spans;
* ``publications``: per-year article counts, keys as year strings, covering
  the publication span exactly;
* ``citations``: ``[citation_year, pub_year, count]`` triples for the
  non-zero cells;
* ``unique_new_sync`` / ``unique_new_diach`` (optional): triples of
  first-appearance journal counts for each augmentation variant.

Unknown fields are rejected rather than ignored, so a typo in a hand-edited
fixture fails loudly instead of silently dropping data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .errors import FixtureError
from .ingest import PublicationLedger
from .matrix import (
    DIACHRONOUS,
    SYNCHRONOUS,
    AugmentedMatrix,
    Cell,
    PubCitMatrix,
    YearSpan,
    year_range,
)

_FIELDS = {
    "pub_years",
    "cite_years",
    "publications",
    "citations",
    "unique_new_sync",
    "unique_new_diach",
}
_REQUIRED = ("pub_years", "cite_years", "publications", "citations")


@dataclass(frozen=True)
class MatrixFixture:
    matrix: PubCitMatrix
    sync: AugmentedMatrix | None = None
    diach: AugmentedMatrix | None = None


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _span(value: Any, name: str) -> YearSpan:
    if not (isinstance(value, list) and len(value) == 2 and all(_is_int(v) for v in value)):
        raise FixtureError(f"{name} must be a [first, last] pair of integers")
    lo, hi = value
    if lo > hi:
        raise FixtureError(f"{name} span [{lo}, {hi}] is empty")
    return (lo, hi)


def _triples(
    value: Any,
    name: str,
    cite_years: YearSpan,
    pub_years: YearSpan,
    *,
    allow_backdated: bool,
) -> dict[Cell, int]:
    if not isinstance(value, list):
        raise FixtureError(f"{name} must be a list of [citation_year, pub_year, count] triples")
    out: dict[Cell, int] = {}
    for entry in value:
        if not (isinstance(entry, list) and len(entry) == 3 and all(_is_int(v) for v in entry)):
            raise FixtureError(f"{name} entry {entry!r} is not an integer triple")
        k, i, count = entry
        if not cite_years[0] <= k <= cite_years[1]:
            raise FixtureError(f"{name} entry {entry!r}: citation year {k} outside {cite_years}")
        if not pub_years[0] <= i <= pub_years[1]:
            raise FixtureError(f"{name} entry {entry!r}: publication year {i} outside {pub_years}")
        if count < 0:
            raise FixtureError(f"{name} entry {entry!r}: negative count")
        if not allow_backdated and k < i:
            raise FixtureError(
                f"{name} entry {entry!r}: citation year precedes publication year"
            )
        if (k, i) in out:
            raise FixtureError(f"{name} has two entries for cell ({k}, {i})")
        out[(k, i)] = count
    return out


def load_document(doc: Any) -> MatrixFixture:
    """Validate a parsed JSON document and build the matrices it describes."""
    if not isinstance(doc, dict):
        raise FixtureError("fixture must be a JSON object")
    unknown = set(doc) - _FIELDS
    if unknown:
        raise FixtureError(f"unknown fixture fields: {', '.join(sorted(unknown))}")
    for name in _REQUIRED:
        if name not in doc:
            raise FixtureError(f"missing required field {name!r}")

    pub_years = _span(doc["pub_years"], "pub_years")
    cite_years = _span(doc["cite_years"], "cite_years")

    raw_pubs = doc["publications"]
    if not isinstance(raw_pubs, dict):
        raise FixtureError("publications must be an object of year -> count")
    counts: dict[int, int] = {}
    for key, value in raw_pubs.items():
        try:
            year = int(key)
        except (TypeError, ValueError):
            raise FixtureError(f"publications key {key!r} is not a year") from None
        if not _is_int(value) or value < 0:
            raise FixtureError(f"publications[{key}] must be a non-negative integer")
        counts[year] = value
    if set(counts) != set(year_range(pub_years)):
        raise FixtureError("publications must cover exactly the pub_years span")

    citations = _triples(doc["citations"], "citations", cite_years, pub_years, allow_backdated=True)
    cells = {(k, i): 0 for k in year_range(cite_years) for i in year_range(pub_years)}
    cells.update(citations)
    matrix = PubCitMatrix(pub_years, cite_years, PublicationLedger(counts), cells)

    def augmented(field: str, variant: str) -> AugmentedMatrix | None:
        if field not in doc:
            return None
        unique = _triples(doc[field], field, cite_years, pub_years, allow_backdated=False)
        for cell, u in unique.items():
            if u > cells[cell]:
                raise FixtureError(
                    f"{field} cell {list(cell)}: unique count {u} exceeds {cells[cell]} citations"
                )
        filled = {cell: 0 for cell in cells}
        filled.update(unique)
        return AugmentedMatrix(variant, filled, matrix)

    return MatrixFixture(
        matrix=matrix,
        sync=augmented("unique_new_sync", SYNCHRONOUS),
        diach=augmented("unique_new_diach", DIACHRONOUS),
    )


def _triple_list(cells: Mapping[Cell, int]) -> list[list[int]]:
    return [[k, i, n] for (k, i), n in sorted(cells.items()) if n]


def to_document(
    matrix: PubCitMatrix,
    sync: AugmentedMatrix | None = None,
    diach: AugmentedMatrix | None = None,
) -> dict:
    """Serialize matrices into the fixture document shape."""
    doc: dict[str, Any] = {
        "pub_years": list(matrix.pub_years),
        "cite_years": list(matrix.cite_years),
        "publications": {str(y): matrix.pub(y) for y in year_range(matrix.pub_years)},
        "citations": _triple_list(matrix.citations),
    }
    if sync is not None:
        if sync.variant != SYNCHRONOUS:
            raise ValueError("sync argument must carry the synchronous variant")
        doc["unique_new_sync"] = _triple_list(sync.unique_new)
    if diach is not None:
        if diach.variant != DIACHRONOUS:
            raise ValueError("diach argument must carry the diachronous variant")
        doc["unique_new_diach"] = _triple_list(diach.unique_new)
    return doc


def load_fixture(path: str | Path) -> MatrixFixture:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FixtureError(f"{path}: not valid JSON ({exc})") from None
    return load_document(doc)


def save_fixture(
    path: str | Path,
    matrix: PubCitMatrix,
    sync: AugmentedMatrix | None = None,
    diach: AugmentedMatrix | None = None,
) -> None:
    doc = to_document(matrix, sync, diach)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")

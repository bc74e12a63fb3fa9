"""Correlation between indicator series.

The series here are short (one point per year, typically five to seven), so
these coefficients are descriptive summaries of co-movement, not inferential
statistics. No p-values are computed and none should be imputed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import UndefinedCorrelationError


@dataclass(frozen=True)
class Series:
    """Values indexed by strictly increasing integer labels (years)."""

    labels: tuple[int, ...]
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.labels) != len(self.values):
            raise ValueError("labels and values differ in length")
        if any(b <= a for a, b in zip(self.labels, self.labels[1:])):
            raise ValueError("labels must be strictly increasing")

    def __len__(self) -> int:
        return len(self.labels)


def _check_pair(x: Series, y: Series) -> None:
    if x.labels != y.labels:
        raise ValueError("series labels differ; correlate points from the same years")
    if len(x) < 2:
        raise ValueError("need at least two points")


def pearson(x: Series, y: Series) -> float:
    """Pearson's r, clamped to [-1, 1] against float round-off."""
    _check_pair(x, y)
    xs = [float(v) for v in x.values]
    ys = [float(v) for v in y.values]
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    var_x = sum((v - mean_x) ** 2 for v in xs)
    var_y = sum((v - mean_y) ** 2 for v in ys)
    if var_x == 0.0 or var_y == 0.0:
        raise UndefinedCorrelationError("correlation is undefined for a constant series")
    cov = sum((a - mean_x) * (b - mean_y) for a, b in zip(xs, ys))
    r = cov / math.sqrt(var_x * var_y)
    return max(-1.0, min(1.0, r))


def average_ranks(values: Sequence) -> list[float]:
    """Ranks starting at 1, ties sharing the average of their positions."""
    n = len(values)
    order = sorted(range(n), key=lambda idx: values[idx])
    ranks = [0.0] * n
    start = 0
    while start < n:
        stop = start
        while stop + 1 < n and values[order[stop + 1]] == values[order[start]]:
            stop += 1
        shared = (start + stop) / 2 + 1
        for pos in range(start, stop + 1):
            ranks[order[pos]] = shared
        start = stop + 1
    return ranks


def spearman(x: Series, y: Series) -> float:
    """Spearman's rho: Pearson's r over average ranks."""
    _check_pair(x, y)
    return pearson(
        Series(x.labels, tuple(average_ranks(x.values))),
        Series(y.labels, tuple(average_ranks(y.values))),
    )

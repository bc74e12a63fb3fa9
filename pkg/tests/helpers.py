"""Shared builders and independent rendering helpers for the test suite.

The rendering helpers go through the decimal module on purpose: the package
renders with integer arithmetic, so agreement between the two is itself a
check that neither side smuggles in binary floating point.
"""

from __future__ import annotations

import random
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from citemetrics.ingest import CitationEvent, JournalId, PublicationLedger
from citemetrics.matrix import (
    augment_diachronous,
    augment_synchronous,
    build_pc_matrix,
)


def journal(name: str) -> JournalId:
    return JournalId(name)


def ev(journal_name, citing_year, pub_year, cid=None, cited="art"):
    """Terse event constructor for literal test data."""
    return CitationEvent(
        cited_article_id=cited,
        cited_pub_year=pub_year,
        citing_journal=JournalId(journal_name),
        citing_year=citing_year,
        citing_article_id=cid,
    )


def build_all(events, ledger, pub_span, cite_span):
    matrix = build_pc_matrix(events, ledger, pub_span, cite_span)
    return matrix, augment_synchronous(matrix, events), augment_diachronous(matrix, events)


def random_corpus(rng: random.Random, big: bool = False):
    """A randomized event set with its ledger and spans.

    Bounds: at most 50 journals, 8 distinct years, 2000 events (250 unless
    ``big``). Event years deliberately spill one year past the spans so that
    clipping and backdated cells both occur.
    """
    base = 2000
    span = rng.randint(1, 8)
    pub_lo, pub_hi = sorted((rng.randrange(base, base + span), rng.randrange(base, base + span)))
    cite_lo, cite_hi = sorted((rng.randrange(base, base + span), rng.randrange(base, base + span)))
    journals = [JournalId(f"j{i:02d}") for i in range(rng.randint(1, 50))]
    events = []
    for idx in range(rng.randint(0, 2000 if big else 250)):
        pub_year = rng.randint(pub_lo - 1, pub_hi + 1)
        citing_year = rng.randint(cite_lo - 1, cite_hi + 1)
        events.append(
            CitationEvent(
                cited_article_id=f"a{pub_year}",
                cited_pub_year=pub_year,
                citing_journal=rng.choice(journals),
                citing_year=citing_year,
                citing_article_id=f"c{idx}",
            )
        )
    ledger = PublicationLedger({y: rng.randint(0, 40) for y in range(pub_lo, pub_hi + 1)})
    return events, ledger, (pub_lo, pub_hi), (cite_lo, cite_hi)


def column_events(pub_year, rows):
    """Events for a single publication-year column with prescribed counts.

    ``rows`` lists (citing_year, citations, first_appearances) going forward
    in time; repeats beyond the first appearances are assigned to an
    already-introduced journal, so the diachronous scan reproduces the
    prescription exactly.
    """
    events = []
    introduced: list[JournalId] = []
    serial = 0
    for citing_year, total, new in rows:
        assert 0 <= new <= total, "cannot have more first appearances than citations"
        fresh = [JournalId(f"q{citing_year}n{i}") for i in range(new)]
        for j in fresh:
            events.append(CitationEvent("art", pub_year, j, citing_year, f"s{serial}"))
            serial += 1
        if total > new:
            pool = introduced + fresh
            assert pool, "repeat citations need at least one journal introduced"
            for _ in range(total - new):
                events.append(CitationEvent("art", pub_year, pool[0], citing_year, f"s{serial}"))
                serial += 1
        introduced.extend(fresh)
    return events


def decimal_text(numerator: int, denominator: int, places: int, rounding) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        quotient = Decimal(numerator) / Decimal(denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-places), rounding=rounding))


def matches_printed(numerator: int, denominator: int, printed: str) -> bool:
    """True when the fraction reproduces the printed digits under half-up
    rounding or plain truncation at the printed precision (reference values
    demonstrably mix the two)."""
    places = len(printed.partition(".")[2])
    return printed in {
        decimal_text(numerator, denominator, places, ROUND_HALF_UP),
        decimal_text(numerator, denominator, places, ROUND_DOWN),
    }


def as_fraction(value) -> Fraction:
    return Fraction(value.numerator, value.denominator)

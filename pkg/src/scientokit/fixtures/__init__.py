"""Embedded reference fixtures.

The data files transcribe the aggregate statistics of a coronary artery
disease research corpus of the BRICS countries, 1990-2019, as indexed in Web
of Science (50,036 records at source; the raw records are not
redistributable, so analyses reproduce the aggregate tables instead).
Files named ``*_expected.csv`` carry published table values the verification
suite compares recomputed results against; the rest are inputs.
"""

from __future__ import annotations

import csv
import io
from importlib import resources

from ..records import parse_distribution, parse_ranked_list, parse_year_table
from ..series import ProductivityDistribution, RankedList, YearSeries

_DATA = "data"


def fixture_names() -> list[str]:
    root = resources.files(__package__) / _DATA
    return sorted(p.name for p in root.iterdir() if p.suffix in (".csv", ".txt"))


def read_text(name: str) -> str:
    path = resources.files(__package__) / _DATA / name
    return path.read_text(encoding="utf-8")


def load_table(name: str) -> list[dict[str, str]]:
    """Generic reader: comment-aware CSV into a list of row dicts."""
    lines = [ln for ln in read_text(name).splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def year_series(name: str) -> YearSeries:
    return parse_year_table(read_text(name))


def distribution(name: str) -> ProductivityDistribution:
    return parse_distribution(read_text(name))


def ranked_list(name: str) -> RankedList:
    return parse_ranked_list(read_text(name))


def annual_publications() -> YearSeries:
    return year_series("annual_publications.csv")


def annual_citations() -> YearSeries:
    return year_series("annual_citations.csv")


def global_output() -> YearSeries:
    return year_series("global_output.csv")


def country_year_series(country: str) -> YearSeries:
    """Per-country annual counts from the by-country table."""
    rows = load_table("annual_publications_by_country.csv")
    key = country.lower().replace(" ", "_")
    return YearSeries.from_pairs((int(r["year"]), int(r[key])) for r in rows)


def author_productivity() -> ProductivityDistribution:
    return distribution("author_productivity.csv")


def keyword_frequencies() -> RankedList:
    return ranked_list("keyword_frequencies.csv")


def bradford_journals() -> RankedList:
    """Productivity-ranked journal list.

    Core-zone journals carry their real names; the long tail keeps synthetic
    labels since the source data set only names the core.
    """
    named = {int(r["rank"]): r["journal"] for r in load_table("core_journals.csv")}
    entries = []
    rank = 0
    for row in load_table("journal_productivity_groups.csv"):
        journals, articles = int(row["journals"]), int(row["articles_each"])
        for _ in range(journals):
            rank += 1
            label = named.get(rank, f"Journal {rank:04d}")
            entries.append((label, articles))
    return RankedList.from_entries(entries)


def export_1990() -> str:
    return read_text("export_1990.txt")

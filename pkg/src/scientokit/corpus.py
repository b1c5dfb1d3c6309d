"""Immutable analysis corpus and the frequency aggregations derived from it."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .records import BibRecord
from .series import ProductivityDistribution, RankedList, YearSeries

FILTER_FIELDS = ("country", "doc_type", "language")
FIELDS = ("doc_type", "language", "journal", "keyword")
OVERFLOW_AT = 10


@dataclass(frozen=True)
class Corpus:
    records: tuple[BibRecord, ...]
    year_range: tuple[int, int] | None

    @property
    def total(self) -> int:
        return len(self.records)

    def years(self) -> list[int]:
        if self.year_range is None:
            return []
        return list(range(self.year_range[0], self.year_range[1] + 1))


def build_corpus(records) -> Corpus:
    recs = tuple(records)
    if recs:
        years = [r.year for r in recs]
        year_range = (min(years), max(years))
    else:
        year_range = None
    return Corpus(records=recs, year_range=year_range)


def _matches(record: BibRecord, filters: dict) -> bool:
    for key, wanted in filters.items():
        if key == "country":
            if wanted not in record.countries:
                return False
        elif key == "doc_type":
            if record.doc_type != wanted:
                return False
        elif key == "language":
            if record.language != wanted:
                return False
    return True


def yearly_counts(corpus: Corpus, **filters) -> YearSeries:
    """Per-year record counts; missing years inside the range appear as 0.

    Filters: country=..., doc_type=..., language=...  A record with several
    countries counts once for each of them.
    """
    unknown = set(filters) - set(FILTER_FIELDS)
    if unknown:
        raise ValueError(f"unknown filter field(s): {sorted(unknown)}")
    if corpus.total == 0:
        return YearSeries(())
    counts = Counter(r.year for r in corpus.records if _matches(r, filters))
    return YearSeries(tuple((y, counts.get(y, 0)) for y in corpus.years()))


def field_distribution(corpus: Corpus, field_name: str) -> RankedList:
    """Frequency table over one record field (keyword counts token occurrences)."""
    if field_name not in FIELDS:
        raise ValueError(f"unknown field {field_name!r}; expected one of {FIELDS}")
    counts: Counter = Counter()
    for rec in corpus.records:
        if field_name == "keyword":
            counts.update(rec.keywords)
        else:
            counts[getattr(rec, field_name)] += 1
    return RankedList.from_counts(counts)


@dataclass(frozen=True)
class AuthorshipDistribution:
    """Papers bucketed by author count, with an overflow bucket at >= overflow_at.

    ``exact`` keeps the true author-count tally so that indicator functions can
    use real j values even when the display buckets overflow.
    """

    buckets: tuple[tuple[int, int], ...]  # (j, papers); j == overflow_at means ">= overflow_at"
    total_papers: int
    total_authors: int
    overflow_at: int = OVERFLOW_AT
    exact: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if sum(c for _, c in self.buckets) != self.total_papers:
            raise ValueError("bucket counts must sum to total_papers")

    def bucket(self, j: int) -> int:
        for jj, c in self.buckets:
            if jj == j:
                return c
        return 0

    def single(self) -> int:
        return self.bucket(1)

    def multi(self) -> int:
        return self.total_papers - self.single()

    @classmethod
    def from_author_counts(cls, author_counts, overflow_at: int = OVERFLOW_AT,
                           total_authors: int | None = None) -> "AuthorshipDistribution":
        exact = Counter()
        for j in author_counts:
            exact[j] += 1
        buckets = Counter()
        for j, papers in exact.items():
            buckets[min(j, overflow_at)] += papers
        total_papers = sum(exact.values())
        if total_authors is None:
            total_authors = sum(j * papers for j, papers in exact.items())
        return cls(
            buckets=tuple(sorted(buckets.items())),
            total_papers=total_papers,
            total_authors=total_authors,
            overflow_at=overflow_at,
            exact=tuple(sorted(exact.items())),
        )

    @classmethod
    def from_buckets(cls, bucket_counts, total_authors: int = 0,
                     overflow_at: int = OVERFLOW_AT) -> "AuthorshipDistribution":
        """Build from an already-bucketed table (no exact tail available)."""
        items = dict(bucket_counts)
        buckets = tuple(sorted((int(j), int(c)) for j, c in items.items()))
        return cls(
            buckets=buckets,
            total_papers=sum(c for _, c in buckets),
            total_authors=total_authors,
            overflow_at=overflow_at,
            exact=(),
        )


def authorship_distribution(corpus: Corpus, by: str | None = None,
                            overflow_at: int = OVERFLOW_AT):
    """Authorship pattern overall, or keyed per year / per country."""
    if by is None:
        return AuthorshipDistribution.from_author_counts(
            (len(r.authors) for r in corpus.records), overflow_at)
    if by not in ("year", "country"):
        raise ValueError("by must be None, 'year' or 'country'")
    groups: dict = defaultdict(list)
    for rec in corpus.records:
        if by == "year":
            groups[rec.year].append(len(rec.authors))
        else:
            for country in rec.countries:
                groups[country].append(len(rec.authors))
    return {
        key: AuthorshipDistribution.from_author_counts(counts, overflow_at)
        for key, counts in sorted(groups.items())
    }


def author_productivity(corpus: Corpus) -> ProductivityDistribution:
    """Papers-per-author distribution; author identity is the exact name string."""
    per_author: Counter = Counter()
    for rec in corpus.records:
        for author in rec.authors:
            per_author[author] += 1
    histogram: Counter = Counter(per_author.values())
    return ProductivityDistribution.from_pairs(histogram.items())


def journal_rank(corpus: Corpus, doc_type: str | None = None) -> RankedList:
    counts = Counter(
        r.journal for r in corpus.records
        if r.journal and (doc_type is None or r.doc_type == doc_type)
    )
    return RankedList.from_counts(counts)


@dataclass(frozen=True)
class PageStatsRow:
    year: int
    articles: int
    pages: int
    average: float


def page_stats(corpus: Corpus, strict: bool = False) -> list[PageStatsRow]:
    """Per-year article count, page sum and mean pages per article.

    Records without a page count contribute to the article count unless
    ``strict`` is set, and never to the page sum.
    """
    articles: Counter = Counter()
    pages: Counter = Counter()
    for rec in corpus.records:
        if rec.page_count is not None:
            articles[rec.year] += 1
            pages[rec.year] += rec.page_count
        elif not strict:
            articles[rec.year] += 1
    rows = []
    for year in corpus.years():
        n = articles.get(year, 0)
        p = pages.get(year, 0)
        rows.append(PageStatsRow(year, n, p, p / n if n else 0.0))
    return rows

"""Shared data containers: year series, productivity distributions, ranked lists."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class YearSeries:
    """Ordered (year, count) points with strictly increasing years."""

    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        years = [y for y, _ in self.points]
        if years != sorted(set(years)):
            raise ValueError("years must be strictly increasing")
        if any(c < 0 for _, c in self.points):
            raise ValueError("counts must be non-negative")

    @classmethod
    def from_pairs(cls, pairs) -> "YearSeries":
        ordered = sorted(pairs)
        return cls(tuple((int(y), int(c)) for y, c in ordered))

    def years(self) -> list[int]:
        return [y for y, _ in self.points]

    def counts(self) -> list[int]:
        return [c for _, c in self.points]

    def total(self) -> int:
        return sum(c for _, c in self.points)

    def count_for(self, year: int) -> int:
        for y, c in self.points:
            if y == year:
                return c
        raise KeyError(year)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class ProductivityDistribution:
    """(x papers, y authors) pairs, x distinct and ascending."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        xs = [x for x, _ in self.pairs]
        if any(x < 1 for x in xs):
            raise ValueError("x must be positive")
        if xs != sorted(set(xs)):
            raise ValueError("x values must be distinct and ascending")
        if any(y < 1 for _, y in self.pairs):
            raise ValueError("y must be positive")

    @classmethod
    def from_pairs(cls, pairs) -> "ProductivityDistribution":
        return cls(tuple(sorted((int(x), int(y)) for x, y in pairs)))

    def total_authors(self) -> int:
        """Sum of y: number of distinct contributors."""
        return sum(y for _, y in self.pairs)

    def total_credits(self) -> int:
        """Sum of x*y: total authorship credits (one per author-paper incidence)."""
        return sum(x * y for x, y in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class RankedList:
    """(label, frequency) entries with non-increasing frequencies.

    Aggregation operations produce the canonical order: frequency descending,
    ties broken by label ascending.  Lists parsed from files keep their stated
    order (stable-sorted by frequency only), since published rank tables
    sometimes order ties by convention rather than alphabetically.
    """

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        freqs = [f for _, f in self.entries]
        if any(freqs[i] < freqs[i + 1] for i in range(len(freqs) - 1)):
            raise ValueError("frequencies must be non-increasing")

    @classmethod
    def from_counts(cls, counts) -> "RankedList":
        items = counts.items() if hasattr(counts, "items") else counts
        ordered = sorted(items, key=lambda kv: (-kv[1], kv[0]))
        return cls(tuple((str(k), int(v)) for k, v in ordered))

    @classmethod
    def from_entries(cls, entries) -> "RankedList":
        """Stable frequency-descending order; ties keep input order."""
        ordered = sorted(entries, key=lambda kv: -kv[1])
        return cls(tuple((str(k), int(v)) for k, v in ordered))

    def total(self) -> int:
        return sum(f for _, f in self.entries)

    def top(self, k: int) -> "RankedList":
        return RankedList(self.entries[:k])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

"""Keyword/term frequency extraction feeding the Zipf analysis."""

from __future__ import annotations

from collections import Counter, defaultdict

from .corpus import Corpus
from .series import RankedList

SOURCE_FIELDS = ("keywords", "title")


def term_frequencies(corpus: Corpus, source_fields=("keywords",),
                     min_frequency: int = 1, top_k: int | None = None) -> RankedList:
    """Case-insensitive phrase counts over the chosen record fields.

    Keyword phrases are counted whole (hyphens preserved, no tokenisation);
    title words are split on whitespace.  The display casing of each term is
    its most frequent original spelling.
    """
    for f in source_fields:
        if f not in SOURCE_FIELDS:
            raise ValueError(f"unknown source field {f!r}")
    counts: Counter = Counter()
    spellings: dict[str, Counter] = defaultdict(Counter)
    for rec in corpus.records:
        terms = []
        if "keywords" in source_fields:
            terms.extend(rec.keywords)
        if "title" in source_fields:
            terms.extend(rec.title.split())
        for term in terms:
            key = term.casefold()
            counts[key] += 1
            spellings[key][term] += 1
    entries = {}
    for key, freq in counts.items():
        if freq < min_frequency:
            continue
        display = min(spellings[key].items(), key=lambda kv: (-kv[1], kv[0]))[0]
        entries[display] = freq
    ranked = RankedList.from_counts(entries)
    if top_k is not None:
        ranked = ranked.top(top_k)
    return ranked

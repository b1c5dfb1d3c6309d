"""Citation indices for authors and countries: h, g, e, a, R, AR and the
derived m, h_nom, hg, p and q2, plus citations-per-paper and histograms."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

from .corpus import Corpus

DEFAULT_CAREER_YEARS = 30


@dataclass(frozen=True)
class CitationProfile:
    """Per-paper citation counts sorted descending, with optional paper ages.

    Ages stay aligned with the sorted citation vector.  Papers tied at the
    h-core boundary are ordered youngest first, so the age-discounted core
    favours the most recent work.
    """

    cites: tuple[int, ...]
    ages: tuple[int, ...] | None = None
    career_years: int = DEFAULT_CAREER_YEARS

    def __post_init__(self):
        if any(c < 0 for c in self.cites):
            raise ValueError("citation counts must be >= 0")
        if self.ages is not None:
            if len(self.ages) != len(self.cites):
                raise ValueError("ages must align with cites")
            if any(a < 1 for a in self.ages):
                raise ValueError("ages must be >= 1")
        if self.career_years < 1:
            raise ValueError("career_years must be >= 1")

    @classmethod
    def from_counts(cls, cites, ages=None,
                    career_years: int = DEFAULT_CAREER_YEARS) -> "CitationProfile":
        cites = [int(c) for c in cites]
        if ages is None:
            order = sorted(range(len(cites)), key=lambda i: -cites[i])
            return cls(tuple(cites[i] for i in order), None, career_years)
        ages = [int(a) for a in ages]
        if len(ages) != len(cites):
            raise ValueError("ages must align with cites")
        order = sorted(range(len(cites)), key=lambda i: (-cites[i], ages[i]))
        return cls(tuple(cites[i] for i in order),
                   tuple(ages[i] for i in order), career_years)

    @property
    def papers(self) -> int:
        return len(self.cites)

    @property
    def citations(self) -> int:
        return sum(self.cites)


def h_index(profile: CitationProfile) -> int:
    """Largest h such that the h-th most cited paper has at least h citations."""
    h = 0
    for i, c in enumerate(profile.cites, start=1):
        if c >= i:
            h = i
        else:
            break
    return h


def g_index(profile: CitationProfile, zero_pad: bool = False) -> int:
    """Largest g whose top-g papers together hold at least g² citations.

    g is capped at the paper count unless ``zero_pad`` extends the citation
    vector with zeros (the unbounded variant).
    """
    prefix = 0
    g = 0
    for i, c in enumerate(profile.cites, start=1):
        prefix += c
        if prefix >= i * i:
            g = i
    if zero_pad:
        i = profile.papers
        while prefix >= (i + 1) * (i + 1):
            i += 1
            g = i
    return g


@dataclass(frozen=True)
class CoreIndices:
    core_sum: int           # S(h), citations held by the h-core
    e: float                # sqrt(S(h) - h²), excess beyond the square
    r: float                # sqrt(S(h))
    a_core: float | None    # S(h)/h, the literature definition
    a_paper: float | None   # C/h, the variant the reference tables print


def core_indices(profile: CitationProfile) -> CoreIndices:
    h = h_index(profile)
    core_sum = sum(profile.cites[:h])
    e = math.sqrt(core_sum - h * h)
    r = math.sqrt(core_sum)
    if h == 0:
        return CoreIndices(core_sum, e, r, None, None)
    return CoreIndices(core_sum, e, r, core_sum / h, profile.citations / h)


def ar_index(profile: CitationProfile) -> float:
    """Age-discounted core index: sqrt of the h-core's cites/age sum."""
    if profile.ages is None:
        raise ValueError("profile has no ages")
    h = h_index(profile)
    return math.sqrt(sum(c / a for c, a in zip(profile.cites[:h], profile.ages[:h])))


@dataclass(frozen=True)
class DerivedIndices:
    m: float       # h per career year
    h_nom: float   # h normalised by paper count
    hg: float      # geometric mean of h and g
    p: float       # (C²/P)^(1/3), quality-quantity balance
    q2: float      # sqrt(h * m)


def derived_indices(profile: CitationProfile) -> DerivedIndices:
    if profile.papers < 1:
        raise ValueError("profile must contain at least one paper")
    h = h_index(profile)
    g = g_index(profile)
    m = h / profile.career_years
    return DerivedIndices(
        m=m,
        h_nom=h / profile.papers,
        hg=math.sqrt(h * g),
        p=(profile.citations ** 2 / profile.papers) ** (1.0 / 3.0),
        q2=math.sqrt(h * m),
    )


@dataclass(frozen=True)
class IndexBundle:
    h: int
    g: int
    core_sum: int
    e: float
    r: float
    a_core: float | None
    a_paper: float | None
    ar: float | None
    m: float
    h_nom: float
    hg: float
    p: float
    q2: float
    papers: int
    citations: int


def index_bundle(profile: CitationProfile) -> IndexBundle:
    """All indices of one profile; AR is absent without ages."""
    h = h_index(profile)
    g = g_index(profile)
    core = core_indices(profile)
    derived = derived_indices(profile)
    ar = ar_index(profile) if profile.ages is not None else None
    return IndexBundle(
        h=h, g=g, core_sum=core.core_sum, e=core.e, r=core.r,
        a_core=core.a_core, a_paper=core.a_paper, ar=ar,
        m=derived.m, h_nom=derived.h_nom, hg=derived.hg,
        p=derived.p, q2=derived.q2,
        papers=profile.papers, citations=profile.citations,
    )


def summary_indices(h: int, core_sum: int, citations: int, papers: int,
                    career_years: int = DEFAULT_CAREER_YEARS) -> dict[str, float]:
    """Indices recomputable from (h, S(h), C, P) alone, without the full
    citation vector: r, e, a_paper, h_nom, m, q2 and p."""
    if h < 1 or papers < 1 or career_years < 1:
        raise ValueError("h, papers and career_years must be >= 1")
    if core_sum < h * h:
        raise ValueError("core sum cannot undercut h²")
    m = h / career_years
    return {
        "r": math.sqrt(core_sum),
        "e": math.sqrt(core_sum - h * h),
        "a_paper": citations / h,
        "h_nom": h / papers,
        "m": m,
        "q2": math.sqrt(h * m),
        "p": (citations ** 2 / papers) ** (1.0 / 3.0),
    }


def cpp(citations: int, papers: int) -> float:
    """Citations per paper (plain ratio)."""
    if papers <= 0:
        raise ValueError("papers must be positive")
    return citations / papers


def default_citation_bins(max_cite: int) -> list[tuple[int, int]]:
    bins = [(0, 0)]
    bins += [(lo, lo + 99) for lo in range(1, 1001, 100)]
    bins.append((1001, max(max_cite, 1001)))
    return bins


def citation_histogram(cites, bins=None):
    """Counts and shares of citation counts over inclusive [lo, hi] ranges."""
    cites = list(cites)
    max_cite = max(cites, default=0)
    if bins is None:
        bins = default_citation_bins(max_cite)
    bins = [(int(lo), int(hi)) for lo, hi in bins]
    for lo, hi in bins:
        if lo > hi:
            raise ValueError(f"bad bin [{lo}, {hi}]")
    ordered = sorted(bins)
    for (lo1, hi1), (lo2, hi2) in zip(ordered, ordered[1:]):
        if lo2 <= hi1:
            raise ValueError(f"overlapping bins [{lo1},{hi1}] and [{lo2},{hi2}]")
    if ordered[0][0] > 0 or ordered[-1][1] < max_cite:
        raise ValueError("bins must cover [0, max]")
    for (_, hi1), (lo2, _) in zip(ordered, ordered[1:]):
        if lo2 != hi1 + 1:
            raise ValueError("bins must cover [0, max] without gaps")
    total = len(cites)
    rows = []
    for lo, hi in bins:
        n = sum(1 for c in cites if lo <= c <= hi)
        rows.append(((lo, hi), n, (n / total * 100.0) if total else 0.0))
    return rows


def entity_profiles(corpus: Corpus, group_by: str = "author",
                    career_from_first_pub: bool = True) -> dict[str, tuple[CitationProfile, IndexBundle]]:
    """Per-author or per-country citation profiles with their index bundles.

    Paper ages count back from the corpus's latest year with a floor of one;
    career length is measured from each entity's first publication.
    """
    if group_by not in ("author", "country"):
        raise ValueError("group_by must be 'author' or 'country'")
    if corpus.total == 0:
        return {}
    latest = corpus.year_range[1]
    grouped: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for rec in corpus.records:
        keys = rec.authors if group_by == "author" else rec.countries
        for key in keys:
            grouped[key].append((rec.citation_count, rec.year))
    out = {}
    for key, papers in sorted(grouped.items()):
        cites = [c for c, _ in papers]
        ages = [max(1, latest - y) for _, y in papers]
        if career_from_first_pub:
            career = latest - min(y for _, y in papers) + 1
        else:
            career = DEFAULT_CAREER_YEARS
        profile = CitationProfile.from_counts(cites, ages, career)
        out[key] = (profile, index_bundle(profile))
    return out

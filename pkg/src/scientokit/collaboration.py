"""Authorship-pattern and collaboration indicators: DC, CI, CC, MCC, CAI,
activity index, partner shares and the inter-country matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import AuthorshipDistribution, Corpus
from .series import YearSeries

STUDY_SPAN_YEARS = 30


def degree_of_collaboration(dist: AuthorshipDistribution) -> float:
    """Multi-authored share N_m / (N_s + N_m)."""
    if dist.total_papers == 0:
        raise ValueError("empty distribution")
    return dist.multi() / dist.total_papers


def collaborative_index(papers: int, authors: int) -> float:
    """Mean number of authors per paper."""
    if papers <= 0:
        raise ValueError("papers must be positive")
    return authors / papers


def collaborative_coefficient(dist: AuthorshipDistribution,
                              overflow_policy: str = "exact") -> float:
    """CC = 1 - mean reciprocal author count.

    With exact author counts available the true j is used for every paper.
    For display-bucketed input use overflow_policy='bucket_as_j', which lets
    the overflow bucket contribute 1/overflow_at per paper.
    """
    if dist.total_papers == 0:
        raise ValueError("empty distribution")
    if overflow_policy not in ("exact", "bucket_as_j"):
        raise ValueError("overflow_policy must be 'exact' or 'bucket_as_j'")
    if overflow_policy == "exact":
        if not dist.exact:
            raise ValueError("exact author counts unavailable; use bucket_as_j")
        acc = sum(papers / j for j, papers in dist.exact if j > 0)
    else:
        acc = sum(papers / j for j, papers in dist.buckets)
    return 1.0 - acc / dist.total_papers


def modified_cc(cc: float, papers: int) -> float:
    """MCC = CC * A / (A - 1), so a fully collaborative set can reach 1."""
    if papers < 2:
        raise ValueError("papers must be >= 2")
    return cc * papers / (papers - 1)


def co_authorship_index(per_block: dict, totals: dict,
                        variant: str = "standard") -> dict:
    """CAI per (block, authorship class), scaled so 100 is the all-block average.

    standard:          ((N_ij/N_io) / (N_oj/N_oo)) * 100
    paper_complement:  the same ratio computed on complement shares
                       (((N_io-N_ij)/N_io) / ((N_oo-N_oj)/N_oo)) * 100,
    which is the arithmetic behind the reference year-wise CAI table.
    """
    if variant not in ("standard", "paper_complement"):
        raise ValueError("variant must be 'standard' or 'paper_complement'")
    n_oo = sum(totals.values())
    if n_oo <= 0:
        raise ValueError("empty totals")
    out: dict = {}
    for block, classes in per_block.items():
        n_io = sum(classes.values())
        if n_io <= 0:
            raise ValueError(f"block {block!r} has no papers")
        row = {}
        for cls, n_ij in classes.items():
            n_oj = totals[cls]
            if variant == "standard":
                if n_oj == 0:
                    raise ValueError(f"class {cls!r} absent overall")
                row[cls] = (n_ij / n_io) / (n_oj / n_oo) * 100.0
            else:
                if n_oo == n_oj:
                    raise ValueError(f"class {cls!r} covers all papers; complement undefined")
                row[cls] = ((n_io - n_ij) / n_io) / ((n_oo - n_oj) / n_oo) * 100.0
        out[block] = row
    return out


def cai_benchmark(cai_table: dict) -> dict:
    """Benchmark view: '++' for CAI >= 100, '--' below."""
    return {
        block: {cls: "++" if value >= 100.0 else "--" for cls, value in row.items()}
        for block, row in cai_table.items()
    }


def activity_index(country_series: YearSeries,
                   reference_series: YearSeries) -> tuple[tuple[int, float], ...]:
    """AI per year: the country's share of its own total relative to the
    reference share of the reference total, times 100."""
    if country_series.years() != reference_series.years():
        raise ValueError("country and reference series must cover the same years")
    c_total = country_series.total()
    w_total = reference_series.total()
    if c_total <= 0 or any(w <= 0 for w in reference_series.counts()):
        raise ValueError("totals and reference counts must be positive")
    out = []
    for (year, c), (_, w) in zip(country_series, reference_series):
        out.append((year, (c / c_total) / (w / w_total) * 100.0))
    return tuple(out)


@dataclass(frozen=True)
class CollaborationShare:
    partner: str
    papers: int
    pct: float
    cum_pct: float
    per_year: float


def tabulate_shares(partner_counts, home_total: int,
                    span_years: int = STUDY_SPAN_YEARS) -> list[CollaborationShare]:
    """Share table from (partner -> papers) counts against the home total."""
    if home_total <= 0:
        raise ValueError("home_total must be positive")
    items = list(partner_counts.items() if hasattr(partner_counts, "items") else partner_counts)
    cum = 0
    rows = []
    for partner, papers in items:
        cum += papers
        rows.append(CollaborationShare(
            partner=partner,
            papers=papers,
            pct=papers / home_total * 100.0,
            cum_pct=cum / home_total * 100.0,
            per_year=papers / span_years,
        ))
    return rows


def collaboration_shares(corpus: Corpus, home: str, top_k: int = 10,
                         span_years: int = STUDY_SPAN_YEARS):
    """Partner-country share list for one home country, plus its solo count.

    A partner row counts papers carrying both the home and partner labels;
    solo papers have {home} as their entire country set.  Whatever the top-k
    partner rows leave uncovered (minor partners and solo output alike) lands
    in an 'Other Countries' remainder row, mirroring the reference share
    tables, so the cumulative share ends at 100.
    """
    home_papers = [r for r in corpus.records if home in r.countries]
    if not home_papers:
        raise ValueError(f"unknown country {home!r}")
    solo = sum(1 for r in home_papers if r.countries == {home})
    partner_counts: dict[str, int] = {}
    for rec in home_papers:
        for country in rec.countries:
            if country != home:
                partner_counts[country] = partner_counts.get(country, 0) + 1
    if not partner_counts:
        return [], solo
    ordered = sorted(partner_counts.items(), key=lambda kv: (-kv[1], kv[0]))
    counts = dict(ordered[:top_k])
    remainder = len(home_papers) - sum(counts.values())
    if remainder > 0:
        counts["Other Countries"] = remainder
    return tabulate_shares(counts, len(home_papers), span_years), solo


def inter_collaboration_matrix(corpus: Corpus, members) -> dict[str, dict[str, int]]:
    """Pairwise collaboration counts among member countries.

    Off-diagonal cell (i, j) counts papers carrying both labels; the diagonal
    holds each member's solo output (its country set restricted to the member
    list is exactly itself).
    """
    members = list(members)
    if not members:
        raise ValueError("members must be nonempty")
    matrix = {i: {j: 0 for j in members} for i in members}
    member_set = set(members)
    for rec in corpus.records:
        inside = rec.countries & member_set
        if not inside:
            continue
        if len(inside) == 1:
            (only,) = inside
            matrix[only][only] += 1
        else:
            ordered = sorted(inside)
            for a_i, i in enumerate(ordered):
                for j in ordered[a_i + 1:]:
                    matrix[i][j] += 1
                    matrix[j][i] += 1
    return matrix

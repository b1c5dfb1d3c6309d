"""Assemble emission-ready tables from analysis results.

Numeric columns carry fixed decimals matching the reference tables: four for
growth rates and doubling times, two for projections, shares and ratios, five
for the collaboration coefficients.
"""

from __future__ import annotations

from . import collaboration, fixtures, growth, laws, metrics
from .corpus import AuthorshipDistribution
from .report import ReportDocument, Table, fmt
from .series import ProductivityDistribution, RankedList, YearSeries


def growth_rate_table(series: YearSeries, convention: str = "paper") -> Table:
    rows = []
    for row in growth.rgr_table(series, convention):
        rows.append([row.year, row.count, row.cumulative,
                     fmt(row.w1, 4), fmt(row.w2, 4), fmt(row.rgr, 4),
                     fmt(row.dt, 4)])
    return Table("growth_rates", ["year", "count", "cumulative", "w1", "w2", "rgr", "dt"], rows)


def block_growth_table(series: YearSeries, width: int, convention: str = "paper") -> Table:
    agg = growth.block_aggregate(series, width)
    labels = growth.block_labels(series, width)
    rows = []
    for label, row in zip(labels, growth.rgr_table(agg, convention)):
        rows.append([label, row.count, row.cumulative,
                     fmt(row.w1, 4), fmt(row.w2, 4), fmt(row.rgr, 4), fmt(row.dt, 4)])
    return Table("growth_blocks", ["block", "count", "cumulative", "w1", "w2", "rgr", "dt"], rows)


def projection_table(series: YearSeries, targets) -> Table:
    proj = growth.linear_projection(series, targets)
    rows = [[year, fmt(value, 2)] for year, value in proj.projected]
    table = Table("projection", ["year", "value"], rows)
    table.rows.insert(0, ["a", fmt(proj.a, 5)])
    table.rows.insert(1, ["b", fmt(proj.b, 6)])
    return table


def exponential_table(series: YearSeries) -> Table:
    rates = growth.exponential_rates(series)
    rows = [[year, fmt(rate, 6)] for year, rate in rates.per_year]
    rows.append(["fitted", fmt(rates.fitted, 6)])
    return Table("exponential_rates", ["year", "rate"], rows)


def collaboration_table(per_year: dict[int, AuthorshipDistribution]) -> Table:
    """Year-wise DC/CI/CC/MCC from per-year authorship distributions."""
    rows = []
    for year, dist in per_year.items():
        cc_val = collaboration.collaborative_coefficient(
            dist, "exact" if dist.exact else "bucket_as_j")
        rows.append([
            year, dist.total_papers, dist.total_authors,
            fmt(collaboration.collaborative_index(dist.total_papers, dist.total_authors), 2),
            fmt(collaboration.degree_of_collaboration(dist), 2),
            fmt(cc_val, 5),
            fmt(collaboration.modified_cc(cc_val, dist.total_papers), 5)
            if dist.total_papers >= 2 else "",
        ])
    return Table("collaboration_indices",
                 ["year", "papers", "authors", "ci", "dc", "cc", "mcc"], rows)


def cai_table(per_block: dict, totals: dict, variant: str) -> Table:
    cai = collaboration.co_authorship_index(per_block, totals, variant)
    classes = list(totals)
    rows = [[block] + [fmt(cai[block][cls], 2) for cls in classes] for block in cai]
    return Table(f"cai_{variant}", ["block"] + [str(c) for c in classes], rows)


def activity_index_table(named_series: dict[str, YearSeries],
                         reference: YearSeries) -> Table:
    columns = ["year"] + list(named_series)
    by_year: dict[int, list] = {y: [y] for y in reference.years()}
    for name, series in named_series.items():
        for year, value in collaboration.activity_index(series, reference):
            by_year[year].append(fmt(value, 2))
    return Table("activity_index", columns, [by_year[y] for y in reference.years()])


def lotka_table(dist: ProductivityDistribution) -> Table:
    fit = laws.lotka_fit(dist)
    rows = [
        ["n_pairs", fit.n_pairs],
        ["sum_log_x", fmt(fit.sum_x, 4)],
        ["sum_log_y", fmt(fit.sum_y, 4)],
        ["sum_log_xy", fmt(fit.sum_xy, 4)],
        ["sum_log_x2", fmt(fit.sum_x2, 4)],
        ["exponent_n", fmt(fit.n, 4)],
        ["constant_c", fmt(fit.c, 4) if fit.c is not None else ""],
    ]
    return Table("lotka_fit", ["quantity", "value"], rows)


def ks_table(dist: ProductivityDistribution, fit: laws.LotkaFit,
             paper_mode: bool = False) -> Table:
    result = laws.ks_test(dist, fit, paper_mode=paper_mode)
    rows = [[r.x, fmt(r.observed, 5), fmt(r.observed_cum, 5),
             fmt(r.expected, 5), fmt(r.expected_cum, 5), fmt(r.diff, 5)]
            for r in result.rows]
    rows.append(["d_max", fmt(result.d_max, 5), "", "critical",
                 fmt(result.critical_value, 5), result.verdict])
    return Table("ks_test",
                 ["x", "observed", "observed_cum", "expected", "expected_cum", "diff"],
                 rows)


def bradford_table(journals: RankedList, zone_count: int = 3,
                   boundary_policy: str = "tie_floor") -> Table:
    result = laws.bradford_zones(journals, zone_count, boundary_policy)
    rows = []
    for i, (j, a) in enumerate(result.zones):
        mult = fmt(result.multipliers[i - 1], 2) if i else ""
        rows.append([i + 1, j, a, mult])
    rows.append(["mean", "", "", fmt(result.mean_multiplier, 2)])
    return Table("bradford_zones", ["zone", "journals", "articles", "multiplier"], rows)


def zipf_table(words: RankedList) -> Table:
    rows = [[r.rank, r.term, r.frequency, fmt(r.log_f, 4), fmt(r.log_r, 4), fmt(r.c, 4)]
            for r in laws.zipf_constants(words)]
    return Table("zipf_constants", ["rank", "word", "frequency", "log_f", "log_r", "c"], rows)


def price_table(dist: ProductivityDistribution, selection: str = "class_rows") -> Table:
    r = laws.price_sqrt_check(dist, selection)
    rows = [
        ["total_authors", r.total_authors],
        ["total_credits", r.total_credits],
        ["sqrt_quota", r.sqrt_authors],
        ["selected_authors", r.selected_authors],
        ["top_credits", r.top_credits],
        ["share_pct", fmt(r.share * 100, 2)],
        ["satisfied", "yes" if r.satisfied else "no"],
    ]
    return Table("price_sqrt", ["quantity", "value"], rows)


def pareto_table(dist: ProductivityDistribution, fraction: float = 0.2) -> Table:
    r = laws.pareto_check(dist, fraction)
    rows = [
        ["top_authors", r.top_author_count],
        ["credit_share_pct", fmt(r.credit_share * 100, 2)],
        ["gap_to_80", fmt(r.gap_to_target * 100, 2)],
    ]
    return Table("pareto", ["quantity", "value"], rows)


def histogram_table(cites, bins=None) -> Table:
    rows = [[lo, hi, n, fmt(share, 2)]
            for (lo, hi), n, share in metrics.citation_histogram(cites, bins)]
    return Table("citation_histogram", ["lo", "hi", "count", "share"], rows)


def index_bundle_table(bundles: dict[str, metrics.IndexBundle]) -> Table:
    rows = []
    for name, b in bundles.items():
        rows.append([name, b.core_sum, b.citations, b.papers, b.h, b.g,
                     fmt(b.r, 3), fmt(b.ar, 3) if b.ar is not None else "",
                     fmt(b.h_nom, 3), fmt(b.a_paper, 3) if b.a_paper is not None else "",
                     fmt(b.m, 3), fmt(b.q2, 3), fmt(b.e, 3), fmt(b.p, 3), fmt(b.hg, 3)])
    return Table("metric_indices",
                 ["entity", "core_citations", "citations", "papers", "h", "g",
                  "r", "ar", "h_nom", "a", "m", "q2", "e", "p", "hg"], rows)


def fixture_report(convention: str = "paper", deterministic: bool = True) -> ReportDocument:
    """The full analysis over the embedded fixtures as one report document."""
    doc = ReportDocument(configuration={"convention": convention},
                         deterministic=deterministic)
    pubs = fixtures.annual_publications()
    doc.add_input("annual_publications", fixtures.read_text("annual_publications.csv"))
    doc.add(growth_rate_table(pubs, convention))
    doc.add(block_growth_table(pubs, 5, convention))
    doc.add(projection_table(pubs, [2022, 2037]))
    doc.add(exponential_table(pubs))

    dist = fixtures.author_productivity()
    doc.add_input("author_productivity", fixtures.read_text("author_productivity.csv"))
    fit = laws.lotka_fit(dist)
    doc.add(lotka_table(dist))
    doc.add(ks_table(dist, fit, paper_mode=(convention == "paper")))
    doc.add(price_table(dist, "class_rows" if convention == "paper" else "top_authors"))
    doc.add(pareto_table(dist))

    journals = fixtures.bradford_journals()
    doc.add(bradford_table(journals))
    words = fixtures.keyword_frequencies()
    doc.add(zipf_table(words))

    classes = fixtures.load_table("coauthorship_classes.csv")
    class_names = ["single", "two", "three", "four", "five_plus"]
    per_block = {int(r["year"]): {c: int(r[c]) for c in class_names} for r in classes}
    totals = {c: sum(int(r[c]) for r in classes) for c in class_names}
    variant = "paper_complement" if convention == "paper" else "standard"
    doc.add(cai_table(per_block, totals, variant))

    named = {c: fixtures.country_year_series(c)
             for c in ("brazil", "russia", "india", "china", "south_africa")}
    doc.add(activity_index_table({"brics": pubs, **named}, fixtures.global_output()))

    cites = fixtures.annual_citations()
    ratio_rows = [[y, fmt(v, 2)] for y, v in growth.annual_growth_ratio(cites)]
    doc.add(Table("citation_growth_ratio", ["year", "ratio"], ratio_rows))
    cpp_rows = [[y, p, c, fmt(metrics.cpp(c, p), 2)]
                for (y, p), (_, c) in zip(pubs, cites)]
    doc.add(Table("citations_per_paper", ["year", "papers", "citations", "cpp"], cpp_rows))
    return doc

"""Growth mathematics: exponential and relative rates, doubling time, blocks,
straight-line projection, and growth ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import YearSeries

#: Doubling-time numerator.  The reference tables use 0.693 rather than ln 2
#: at full precision; pass ``math.log(2)`` for the exact constant.
DOUBLING_CONSTANT = 0.693


@dataclass(frozen=True)
class GrowthRow:
    year: int | str
    count: int
    cumulative: int
    w1: float  # ln(count)
    w2: float  # ln(cumulative)
    rgr: float
    dt: float | None


@dataclass(frozen=True)
class ExponentialRates:
    per_year: tuple[tuple[int, float], ...]  # year -> ln(N_t / N_{t-1}); first year absent
    fitted: float  # least-squares slope of ln N_t against t


@dataclass(frozen=True)
class ProjectionResult:
    a: float  # mean of counts
    b: float  # slope ΣXY / ΣX²
    origin_year: int
    projected: tuple[tuple[int, float], ...]

    def value_for(self, year: int) -> float:
        return self.a + self.b * (year - self.origin_year)


def _positive_counts(series: YearSeries) -> None:
    if any(c <= 0 for _, c in series):
        raise ValueError("all counts must be positive")


def exponential_rates(series: YearSeries) -> ExponentialRates:
    """Year-over-year log growth rates plus a fitted whole-series rate."""
    _positive_counts(series)
    pts = list(series)
    per_year = tuple(
        (pts[i][0], math.log(pts[i][1] / pts[i - 1][1]))
        for i in range(1, len(pts))
    )
    if len(pts) >= 2:
        # least squares of ln N against t with intercept
        ts = [y for y, _ in pts]
        ls = [math.log(c) for _, c in pts]
        n = len(pts)
        tbar = sum(ts) / n
        lbar = sum(ls) / n
        sxx = sum((t - tbar) ** 2 for t in ts)
        sxy = sum((t - tbar) * (l - lbar) for t, l in zip(ts, ls))
        fitted = sxy / sxx
    else:
        fitted = 0.0
    return ExponentialRates(per_year=per_year, fitted=fitted)


def rgr_table(series: YearSeries, convention: str = "paper",
              doubling_constant: float = DOUBLING_CONSTANT) -> list[GrowthRow]:
    """Relative growth rate and doubling time per year.

    convention='paper' compares the log of the annual count against the log
    of the cumulative count (W1 vs W2); convention='standard' uses the usual
    log-difference of consecutive cumulative totals.  Doubling time is
    ``doubling_constant / rgr`` and is absent when rgr is zero.
    """
    if convention not in ("paper", "standard"):
        raise ValueError("convention must be 'paper' or 'standard'")
    _positive_counts(series)
    rows: list[GrowthRow] = []
    cumulative = 0
    prev_cum = None
    for year, count in series:
        cumulative += count
        w1 = math.log(count)
        w2 = math.log(cumulative)
        if convention == "paper":
            rgr = w2 - w1
        else:
            rgr = 0.0 if prev_cum is None else w2 - math.log(prev_cum)
        dt = doubling_constant / rgr if rgr > 0 else None
        rows.append(GrowthRow(year, count, cumulative, w1, w2, rgr, dt))
        prev_cum = cumulative
    return rows


def block_aggregate(series: YearSeries, width: int) -> YearSeries:
    """Sum counts over consecutive blocks of ``width`` years from the minimum year.

    The returned series is keyed by each block's starting year; blocks tile
    the whole range, so totals are conserved for any width.
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    if len(series) == 0:
        return YearSeries(())
    start = series.points[0][0]
    blocks: dict[int, int] = {}
    for year, count in series:
        block_start = start + ((year - start) // width) * width
        blocks[block_start] = blocks.get(block_start, 0) + count
    return YearSeries(tuple(sorted(blocks.items())))


def block_labels(series: YearSeries, width: int) -> list[str]:
    """Display labels ('1990-1994', ...) matching block_aggregate's blocks."""
    agg = block_aggregate(series, width)
    last = series.points[-1][0]
    return [f"{y}-{min(y + width - 1, last)}" for y, _ in agg]


def linear_projection(series: YearSeries, targets) -> ProjectionResult:
    """Straight-line trend Yc = a + bX with consecutive-integer X coding.

    X is the year offset from the origin year at index ceil(N/2) - 1, the
    coding used in the reference time-series table (origin 2004 for
    1990-2019).  a is the plain mean of the counts and b = ΣXY / ΣX².
    """
    n = len(series)
    if n < 2:
        raise ValueError("need at least two points")
    origin = series.points[(n + 1) // 2 - 1][0]
    xs = [year - origin for year, _ in series]
    ys = series.counts()
    sx2 = sum(x * x for x in xs)
    if sx2 == 0:
        raise ValueError("degenerate X coding")
    a = sum(ys) / n
    b = sum(x * y for x, y in zip(xs, ys)) / sx2
    projected = tuple((t, a + b * (t - origin)) for t in targets)
    return ProjectionResult(a=a, b=b, origin_year=origin, projected=projected)


def growth_ratio_matrix(totals: dict[str, int]) -> dict[str, dict[str, float]]:
    """Pairwise output ratios: cell (i, j) = total_i / total_j; diagonal 1.0."""
    if any(t <= 0 for t in totals.values()):
        raise ValueError("totals must be positive")
    return {
        i: {j: ti / tj for j, tj in totals.items()}
        for i, ti in totals.items()
    }


def annual_growth_ratio(series: YearSeries) -> tuple[tuple[int, float], ...]:
    """Ratio of the next year's count to the current one; last year has none."""
    _positive_counts(series)
    pts = list(series)
    return tuple(
        (pts[i][0], pts[i + 1][1] / pts[i][1])
        for i in range(len(pts) - 1)
    )

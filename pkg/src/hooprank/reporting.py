"""Summary tables: denominator comparisons and experiment win rates.

CSV and markdown renders share one number formatter, so both formats carry
identical numeric strings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .categories import ALL_CATEGORIES, PERCENTAGE_CATEGORIES
from .simulate import SeatOutcome, normalize_format, standard_error
from .valuation import LeagueAggregates


@dataclass(frozen=True)
class DenominatorRow:
    """Scale comparison for one category: how much the week-to-week term
    shrinks the classic score."""

    category: str
    sigma_sq: float          # player-to-player variance
    tau_sq: float            # week-to-week variance (RMS basis)
    z_denominator: float     # sigma
    g_denominator: float     # sqrt(sigma^2 + kappa * tau^2)
    ratio: float             # z_denominator / g_denominator


@dataclass(frozen=True)
class DenominatorReport:
    kappa: float
    rows: tuple[DenominatorRow, ...]


def denominator_ratio(sigma_sq: float, tau_sq: float, kappa: float) -> float:
    """sigma / sqrt(sigma^2 + kappa * tau^2): the down-weighting applied to
    a category by the variance-aware denominator."""
    return math.sqrt(sigma_sq) / math.sqrt(sigma_sq + kappa * tau_sq)


def denominator_table(agg: LeagueAggregates) -> DenominatorReport:
    """One row per category. Percentage rows are on the weighted rate
    deviation scale, the same scale their scores are computed on."""
    kappa = float(agg.kappa)
    rows = []
    for c in ALL_CATEGORIES:
        if c in PERCENTAGE_CATEGORIES:
            sigma, tau = agg.rate_std[c], agg.rate_week_rms[c]
        else:
            sigma, tau = agg.counting_std[c], agg.counting_week_rms[c]
        sigma_sq, tau_sq = sigma * sigma, tau * tau
        rows.append(DenominatorRow(
            category=c,
            sigma_sq=sigma_sq,
            tau_sq=tau_sq,
            z_denominator=sigma,
            g_denominator=math.sqrt(sigma_sq + kappa * tau_sq),
            ratio=denominator_ratio(sigma_sq, tau_sq, kappa),
        ))
    return DenominatorReport(kappa=kappa, rows=tuple(rows))


@dataclass(frozen=True)
class SeatRate:
    seat: int
    n_seasons: int
    win_rate: float
    std_error: float


@dataclass(frozen=True)
class ExperimentReport:
    """Per-seat and aggregate win rates for one experiment configuration."""

    metric_under_test: str
    field_metric: str
    format: str
    rows: tuple[SeatRate, ...]
    total_seasons: int
    aggregate_rate: float
    aggregate_std_error: float


def experiment_report(outcomes: Sequence[SeatOutcome], metric: str, field: str,
                      format: str) -> ExperimentReport:
    format = normalize_format(format)
    rows = tuple(
        SeatRate(seat=o.seat, n_seasons=o.n_seasons,
                 win_rate=o.win_rate(format),
                 std_error=standard_error(o.win_rate(format), o.n_seasons))
        for o in outcomes
    )
    total = sum(o.n_seasons for o in outcomes)
    wins = sum(o.wins_each if format == "each" else o.wins_most for o in outcomes)
    rate = wins / total if total else 0.0
    return ExperimentReport(
        metric_under_test=metric, field_metric=field, format=format,
        rows=rows, total_seasons=total, aggregate_rate=rate,
        aggregate_std_error=standard_error(rate, total) if total else 0.0,
    )


# ---------------------------------------------------------------------------
# Rendering


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _fmt_pct(value: float) -> str:
    return f"{100.0 * value:.2f}%"


def format_table(header: list[str], body: list[list[str]], format: str) -> str:
    """Render rows of pre-formatted strings as CSV or a markdown pipe table."""
    if format == "csv":
        lines = [",".join(header)] + [",".join(row) for row in body]
        return "\n".join(lines) + "\n"
    if format == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "| " + " | ".join("---" for _ in header) + " |"]
        lines += ["| " + " | ".join(row) + " |" for row in body]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown render format: {format!r}")


def render(report: Union[DenominatorReport, ExperimentReport], format: str) -> str:
    if isinstance(report, DenominatorReport):
        header = ["category", "sigma_sq", "tau_sq",
                  "z_denominator", "g_denominator", "ratio"]
        body = [
            [r.category, _fmt(r.sigma_sq), _fmt(r.tau_sq),
             _fmt(r.z_denominator), _fmt(r.g_denominator), _fmt_pct(r.ratio)]
            for r in report.rows
        ]
        return format_table(header, body, format)
    if isinstance(report, ExperimentReport):
        header = ["seat", "n_seasons", "win_rate", "std_error"]
        body = [
            [str(r.seat), str(r.n_seasons), _fmt_pct(r.win_rate), _fmt_pct(r.std_error)]
            for r in report.rows
        ]
        if report.rows:
            body.append(["aggregate", str(report.total_seasons),
                         _fmt_pct(report.aggregate_rate),
                         _fmt_pct(report.aggregate_std_error)])
        return format_table(header, body, format)
    raise TypeError(f"cannot render {type(report).__name__}")


# ---------------------------------------------------------------------------
# Result files


def save_outcomes(path: Union[str, Path], outcomes: Sequence[SeatOutcome],
                  metadata: dict) -> None:
    """Persist raw experiment outcomes (both formats' counts) as JSON."""
    payload = {
        "metadata": metadata,
        "seats": [
            {"seat": o.seat, "n_seasons": o.n_seasons,
             "wins_each": o.wins_each, "wins_most": o.wins_most}
            for o in outcomes
        ],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_outcomes(path: Union[str, Path]) -> tuple[list[SeatOutcome], dict]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    outcomes = [
        SeatOutcome(seat=row["seat"], n_seasons=row["n_seasons"],
                    wins_each=row["wins_each"], wins_most=row["wins_most"])
        for row in payload["seats"]
    ]
    return outcomes, payload.get("metadata", {})

"""Player valuation: category moments, Z-scores, G-scores, and the
closed-form win-probability model they feed.

Counting categories standardize each player's weekly mean against the pool.
The variance-aware score (G) widens the denominator with the kappa-weighted
week-to-week variance; the classic score (Z) is the same formula with every
week-to-week term set to zero. Percentage categories weight the player's
rate edge by attempt volume. Turnovers are sign-flipped so higher is always
better.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from .categories import (
    ALL_CATEGORIES,
    COUNTING_CATEGORIES,
    INVERTED_CATEGORIES,
    NUM_CATEGORIES,
    PERCENTAGE_CATEGORIES,
    PERCENTAGE_COMPONENTS,
    STAT_INDEX,
)
from .gamelog import PlayerHistory

KappaMode = Literal["exact", "fixed_1_04", "one"]
MetricKind = Literal["z", "g"]


class DegenerateCategoryError(ValueError):
    """A category's denominator is zero over the chosen pool, so scores in
    that category are undefined."""

    def __init__(self, category: str, message: str):
        self.category = category
        super().__init__(f"{category}: {message}")


def kappa(team_size: int) -> Fraction:
    """Correction factor for the drafted player's own week-to-week variance.

    Exact value 2N/(2N-1) for N players per team, returned as a rational.
    """
    if team_size < 1:
        raise ValueError(f"team_size must be >= 1, got {team_size}")
    return Fraction(2 * team_size, 2 * team_size - 1)


def resolve_kappa(mode: KappaMode, team_size: int) -> Fraction:
    """Map a kappa mode to its numeric value for a given roster size."""
    if mode == "exact":
        return kappa(team_size)
    if mode == "fixed_1_04":
        return Fraction(26, 25)
    if mode == "one":
        return Fraction(1)
    raise ValueError(f"unknown kappa mode: {mode!r}")


# ---------------------------------------------------------------------------
# Moments


@dataclass(frozen=True)
class CountingMoments:
    """Per-player and pool-level moments for one counting category."""

    category: str
    player_mean: dict[str, float]       # mean weekly total per player
    player_week_std: dict[str, float]   # week-to-week population std per player
    pool_mean: float                    # mean of the player means
    pool_std: float                     # population std of the player means
    week_rms: float                     # root-mean-square of the week stds


@dataclass(frozen=True)
class PercentageMoments:
    """Per-player and pool-level moments for one percentage category."""

    category: str
    player_attempts_mean: dict[str, float]      # mean weekly attempts
    player_rate: dict[str, Optional[float]]     # total made / total attempts
    player_week_dev_std: dict[str, float]       # std of weighted rate deviations
    pool_attempts_mean: float
    pool_rate: float        # attempt-weighted mean of player rates
    rate_std: float         # population std of player rates around pool_rate
    week_dev_rms: float     # root-mean-square of the weekly deviation stds


def _category_weeks(history: PlayerHistory, category: str) -> np.ndarray:
    matrix = history.stat_matrix()
    return matrix[:, STAT_INDEX[category]]


def _component_weeks(history: PlayerHistory, category: str) -> tuple[np.ndarray, np.ndarray]:
    made_col, att_col = PERCENTAGE_COMPONENTS[category]
    matrix = history.stat_matrix()
    return matrix[:, STAT_INDEX[made_col]], matrix[:, STAT_INDEX[att_col]]


def counting_moments(pool: Sequence[PlayerHistory], category: str) -> CountingMoments:
    """Weekly mean and week-to-week spread per player, plus pool-level
    mean, player-to-player spread, and RMS week-to-week spread.

    All standard deviations are population (divide by n) to match the
    summation definitions the scores are built on.
    """
    if not pool:
        raise ValueError("pool must be non-empty")
    player_mean: dict[str, float] = {}
    player_week_std: dict[str, float] = {}
    for history in pool:
        if not history.weeks:
            raise ValueError(f"player {history.player_id} has zero weeks")
        values = _category_weeks(history, category)
        player_mean[history.player_id] = float(values.mean())
        player_week_std[history.player_id] = float(values.std())
    means = np.array(list(player_mean.values()))
    week_stds = np.array(list(player_week_std.values()))
    return CountingMoments(
        category=category,
        player_mean=player_mean,
        player_week_std=player_week_std,
        pool_mean=float(means.mean()),
        pool_std=float(means.std()),
        week_rms=float(np.sqrt(np.mean(week_stds**2))),
    )


def _weekly_rate_deviations(made: np.ndarray, att: np.ndarray,
                            pool_att_mean: float, pool_rate: float) -> np.ndarray:
    # (att_w / pool mean attempts) * (rate_w - pool rate), which reduces to
    # (made_w - att_w * pool rate) / pool mean attempts; zero-attempt weeks
    # contribute 0 in both readings.
    return (made - att * pool_rate) / pool_att_mean


def percentage_moments(pool: Sequence[PlayerHistory], category: str) -> PercentageMoments:
    """Volume and rate moments per player, plus pool-level constants.

    The pool rate is the attempt-weighted mean of player rates, so players
    who never attempt carry zero weight. A zero-attempt player's rate is
    undefined (stored as None) and contributes zero deviation to the
    player-to-player rate spread.
    """
    if not pool:
        raise ValueError("pool must be non-empty")
    attempts_mean: dict[str, float] = {}
    made_mean: dict[str, float] = {}
    rate: dict[str, Optional[float]] = {}
    weeks: dict[str, tuple[np.ndarray, np.ndarray]] = {}
    for history in pool:
        if not history.weeks:
            raise ValueError(f"player {history.player_id} has zero weeks")
        made, att = _component_weeks(history, category)
        weeks[history.player_id] = (made, att)
        attempts_mean[history.player_id] = float(att.mean())
        made_mean[history.player_id] = float(made.mean())
        total_att = float(att.sum())
        rate[history.player_id] = float(made.sum() / total_att) if total_att > 0 else None

    pool_att_mean = float(np.mean(list(attempts_mean.values())))
    if pool_att_mean <= 0:
        raise DegenerateCategoryError(category, "no player in the pool has any attempts")
    # Attempt-weighted mean rate: sum of mean weekly makes over sum of mean
    # weekly attempts (identical to weighting each rate by mean attempts).
    pool_rate = float(sum(made_mean.values()) / sum(attempts_mean.values()))

    deviations = np.array([
        0.0 if rate[pid] is None else rate[pid] - pool_rate
        for pid in attempts_mean
    ])
    rate_std = float(np.sqrt(np.mean(deviations**2)))

    week_dev_std: dict[str, float] = {}
    for pid, (made, att) in weeks.items():
        devs = _weekly_rate_deviations(made, att, pool_att_mean, pool_rate)
        week_dev_std[pid] = float(devs.std())
    week_dev_rms = float(np.sqrt(np.mean(np.array(list(week_dev_std.values())) ** 2)))

    return PercentageMoments(
        category=category,
        player_attempts_mean=attempts_mean,
        player_rate=rate,
        player_week_dev_std=week_dev_std,
        pool_attempts_mean=pool_att_mean,
        pool_rate=pool_rate,
        rate_std=rate_std,
        week_dev_rms=week_dev_rms,
    )


# ---------------------------------------------------------------------------
# Profiles and aggregates


@dataclass(frozen=True)
class PlayerProfile:
    """One player's moments, measured against a fixed reference pool."""

    player_id: str
    counting_mean: dict[str, float]
    counting_week_std: dict[str, float]
    attempts_mean: dict[str, float]
    rate: dict[str, Optional[float]]
    rate_week_dev_std: dict[str, float]


@dataclass(frozen=True)
class LeagueAggregates:
    """Pool-level constants every score is standardized against."""

    pool_ids: tuple[str, ...]
    team_size: int
    counting_mean: dict[str, float]
    counting_std: dict[str, float]
    counting_week_rms: dict[str, float]
    attempts_mean: dict[str, float]
    rate_mean: dict[str, float]
    rate_std: dict[str, float]
    rate_week_rms: dict[str, float]
    kappa: Fraction

    @property
    def num_categories(self) -> int:
        return NUM_CATEGORIES


def build_league(pool: Sequence[PlayerHistory], team_size: int,
                 kappa_mode: KappaMode = "exact") -> tuple[dict[str, PlayerProfile], LeagueAggregates]:
    """Compute every pool member's profile and the pool-level aggregates."""
    counting = {c: counting_moments(pool, c) for c in COUNTING_CATEGORIES}
    percentage = {c: percentage_moments(pool, c) for c in PERCENTAGE_CATEGORIES}
    agg = LeagueAggregates(
        pool_ids=tuple(h.player_id for h in pool),
        team_size=team_size,
        counting_mean={c: m.pool_mean for c, m in counting.items()},
        counting_std={c: m.pool_std for c, m in counting.items()},
        counting_week_rms={c: m.week_rms for c, m in counting.items()},
        attempts_mean={c: m.pool_attempts_mean for c, m in percentage.items()},
        rate_mean={c: m.pool_rate for c, m in percentage.items()},
        rate_std={c: m.rate_std for c, m in percentage.items()},
        rate_week_rms={c: m.week_dev_rms for c, m in percentage.items()},
        kappa=resolve_kappa(kappa_mode, team_size),
    )
    profiles = {
        h.player_id: PlayerProfile(
            player_id=h.player_id,
            counting_mean={c: counting[c].player_mean[h.player_id] for c in COUNTING_CATEGORIES},
            counting_week_std={c: counting[c].player_week_std[h.player_id] for c in COUNTING_CATEGORIES},
            attempts_mean={c: percentage[c].player_attempts_mean[h.player_id] for c in PERCENTAGE_CATEGORIES},
            rate={c: percentage[c].player_rate[h.player_id] for c in PERCENTAGE_CATEGORIES},
            rate_week_dev_std={c: percentage[c].player_week_dev_std[h.player_id] for c in PERCENTAGE_CATEGORIES},
        )
        for h in pool
    }
    return profiles, agg


def profile_against(history: PlayerHistory, agg: LeagueAggregates) -> PlayerProfile:
    """Profile any player (pool member or not) against existing aggregates.

    Needed because the weekly rate-deviation spread is defined relative to
    the pool's volume and rate constants.
    """
    counting_mean: dict[str, float] = {}
    counting_week_std: dict[str, float] = {}
    for c in COUNTING_CATEGORIES:
        values = _category_weeks(history, c)
        counting_mean[c] = float(values.mean())
        counting_week_std[c] = float(values.std())
    attempts_mean: dict[str, float] = {}
    rate: dict[str, Optional[float]] = {}
    week_dev_std: dict[str, float] = {}
    for c in PERCENTAGE_CATEGORIES:
        made, att = _component_weeks(history, c)
        attempts_mean[c] = float(att.mean())
        total_att = float(att.sum())
        rate[c] = float(made.sum() / total_att) if total_att > 0 else None
        devs = _weekly_rate_deviations(made, att, agg.attempts_mean[c], agg.rate_mean[c])
        week_dev_std[c] = float(devs.std())
    return PlayerProfile(
        player_id=history.player_id,
        counting_mean=counting_mean,
        counting_week_std=counting_week_std,
        attempts_mean=attempts_mean,
        rate=rate,
        rate_week_dev_std=week_dev_std,
    )


# ---------------------------------------------------------------------------
# Scores


@dataclass(frozen=True)
class ValueScore:
    """Per-category and total score for one player under one metric."""

    player_id: str
    metric_kind: MetricKind
    per_category: dict[str, float]
    total: float


def _category_scores(profile: PlayerProfile, agg: LeagueAggregates,
                     kappa_value: float) -> dict[str, float]:
    scores: dict[str, float] = {}
    for c in COUNTING_CATEGORIES:
        sigma = agg.counting_std[c]
        tau = agg.counting_week_rms[c]
        denom = math.sqrt(sigma * sigma + kappa_value * tau * tau)
        if denom <= 0.0:
            raise DegenerateCategoryError(c, "zero denominator over the pool")
        edge = profile.counting_mean[c] - agg.counting_mean[c]
        if c in INVERTED_CATEGORIES:
            edge = -edge
        scores[c] = edge / denom
    for c in PERCENTAGE_CATEGORIES:
        sigma = agg.rate_std[c]
        tau = agg.rate_week_rms[c]
        denom = math.sqrt(sigma * sigma + kappa_value * tau * tau)
        if denom <= 0.0:
            raise DegenerateCategoryError(c, "zero denominator over the pool")
        pool_att = agg.attempts_mean[c]
        if pool_att <= 0.0:
            raise DegenerateCategoryError(c, "pool has no attempts")
        att = profile.attempts_mean[c]
        player_rate = profile.rate[c]
        # A zero-attempt player has zero volume weight, hence zero edge.
        edge = 0.0 if player_rate is None else att * (player_rate - agg.rate_mean[c])
        scores[c] = edge / (pool_att * denom)
    return scores


def g_score(profile: PlayerProfile, agg: LeagueAggregates,
            kappa_mode: Optional[KappaMode] = None) -> ValueScore:
    """Variance-aware score: denominators blend player-to-player variance
    with kappa-weighted week-to-week variance. kappa_mode overrides the
    aggregates' stored kappa when given."""
    kappa_value = (agg.kappa if kappa_mode is None
                   else resolve_kappa(kappa_mode, agg.team_size))
    per_category = _category_scores(profile, agg, float(kappa_value))
    return ValueScore(
        player_id=profile.player_id,
        metric_kind="g",
        per_category=per_category,
        total=sum(per_category[c] for c in ALL_CATEGORIES),
    )


def z_score(profile: PlayerProfile, agg: LeagueAggregates) -> ValueScore:
    """Classic score: identical formula with every week-to-week variance
    term set to zero, leaving pure player-to-player denominators."""
    per_category = _category_scores(profile, agg, 0.0)
    return ValueScore(
        player_id=profile.player_id,
        metric_kind="z",
        per_category=per_category,
        total=sum(per_category[c] for c in ALL_CATEGORIES),
    )


def rank_players(profiles: Iterable[PlayerProfile], agg: LeagueAggregates,
                 metric: MetricKind,
                 kappa_mode: Optional[KappaMode] = None) -> list[ValueScore]:
    """Score every profile and sort by total descending, ties by player id."""
    if metric == "z":
        scores = [z_score(p, agg) for p in profiles]
    elif metric == "g":
        scores = [g_score(p, agg, kappa_mode) for p in profiles]
    else:
        raise ValueError(f"unknown metric: {metric!r}")
    scores.sort(key=lambda s: (-s.total, s.player_id))
    return scores


# ---------------------------------------------------------------------------
# Closed-form win model


def win_probability_raw(score: float, team_size: int) -> float:
    """First-order win-probability approximation, unbounded (no clamp)."""
    if team_size < 1:
        raise ValueError(f"team_size must be >= 1, got {team_size}")
    return 0.5 * (1.0 + score / math.sqrt(math.pi * (team_size - 0.5)))


def win_probability_counting(score: float, team_size: int) -> float:
    """Probability a team built around this player's category score wins the
    category against a random opponent, clamped to [0, 1]."""
    return min(1.0, max(0.0, win_probability_raw(score, team_size)))


@dataclass(frozen=True)
class DifferentialMoments:
    """Moments of the opponent-minus-own-team differential for one
    percentage category, plus the implied win probability."""

    mean: float
    variance: float
    win_probability: float


def percentage_differential_moments(profile: PlayerProfile, agg: LeagueAggregates,
                                    category: str, team_size: int) -> DifferentialMoments:
    """Closed-form moments of the percentage differential when the player
    joins a random team facing another random team.

    Sign convention: the differential is opponent minus own team, so a
    negative mean favors the player's team.
    """
    if category not in PERCENTAGE_CATEGORIES:
        raise ValueError(f"not a percentage category: {category!r}")
    if team_size < 1:
        raise ValueError(f"team_size must be >= 1, got {team_size}")
    sigma = agg.rate_std[category]
    tau = agg.rate_week_rms[category]
    if sigma == 0.0 and tau == 0.0:
        raise DegenerateCategoryError(category, "zero-variance differential")
    pool_att = agg.attempts_mean[category]
    if pool_att <= 0.0:
        raise DegenerateCategoryError(category, "pool has no attempts")
    att = profile.attempts_mean[category]
    player_rate = profile.rate[category]
    rate_edge = 0.0 if player_rate is None else player_rate - agg.rate_mean[category]
    mean = -(att / (team_size * pool_att)) * rate_edge
    variance = ((2 * team_size - 1) * sigma * sigma
                + 2 * team_size * tau * tau) / (team_size * team_size)
    kappa_value = float(agg.kappa)
    score = (att / pool_att) * rate_edge / math.sqrt(sigma * sigma + kappa_value * tau * tau)
    return DifferentialMoments(
        mean=mean,
        variance=variance,
        win_probability=win_probability_counting(score, team_size),
    )


def expected_categories_won(score: ValueScore, team_size: int,
                            num_categories: int = NUM_CATEGORIES) -> tuple[float, float]:
    """Expected categories won against a random opponent, and the margin
    over the coin-flip baseline of half the categories."""
    if team_size < 1:
        raise ValueError(f"team_size must be >= 1, got {team_size}")
    if num_categories < 1:
        raise ValueError(f"num_categories must be >= 1, got {num_categories}")
    marginal = score.total / (2.0 * math.sqrt(math.pi * (team_size - 0.5)))
    return num_categories / 2.0 + marginal, marginal

"""Shared fixtures: hand-built players, a continuous synthetic oracle pool,
and the packaged realistic league."""

from __future__ import annotations

import numpy as np
import pytest

from hooprank.categories import STAT_COLUMNS
from hooprank.gamelog import PlayerHistory, PlayerWeek, filter_eligible
from hooprank.synth import generate_league


# one PASS/FAIL line per shipping criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance scorecard")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_week(player_id: str, week: int, injured: bool = False, **stats) -> PlayerWeek:
    """PlayerWeek with unspecified stats zeroed (attempts included)."""
    values = {name: 0.0 for name in STAT_COLUMNS}
    values.update(stats)
    return PlayerWeek(player_id, week, injured, **values)


def make_history(player_id: str, weekly_stats: list[dict]) -> PlayerHistory:
    weeks = tuple(
        make_week(player_id, w, **stats) for w, stats in enumerate(weekly_stats)
    )
    return PlayerHistory(player_id, weeks)


def constant_player(player_id: str, num_weeks: int, **stats) -> PlayerHistory:
    """A player whose weekly line never varies."""
    return make_history(player_id, [dict(stats) for _ in range(num_weeks)])


# STAT_COLUMNS order: pts reb ast stl blk tpm tov fgm fga ftm fta
CENTER_LINE = (30.0, 10.0, 6.0, 2.0, 1.5, 2.5, 3.0, 5.0, 10.0, 6.0, 8.0)


def offset_line(d: float) -> tuple[float, ...]:
    """The center line pushed d spread-units up (or down for negative d)."""
    pts, reb, ast, stl, blk, tpm, tov, _, fga, _, fta = CENTER_LINE
    fg_rate, ft_rate = 0.5 + 0.03 * d, 0.75 + 0.04 * d
    return (pts + 4 * d, reb + 2 * d, ast + 1.5 * d, stl + 0.4 * d,
            blk + 0.3 * d, tpm + 0.6 * d, tov + 0.5 * d,
            fga * fg_rate, fga, fta * ft_rate, fta)


def symmetric_pool(pairs: int = 5, num_weeks: int = 12) -> list[PlayerHistory]:
    """Mirrored plus/minus pairs around two exactly-average players, so every
    pool mean lands on the center line and the center players score zero."""
    from hooprank.synth import generate_uniform_player

    rng = np.random.default_rng(0)
    # |d| < 4 keeps every stat on the line nonnegative
    offsets = [3.8 * (i + 1) / pairs for i in range(pairs)]
    players = []
    for i, d in enumerate(offsets):
        players.append(generate_uniform_player(
            f"plus{i}", num_weeks, rng, offset_line(d)))
        players.append(generate_uniform_player(
            f"minus{i}", num_weeks, rng, offset_line(-d)))
    players.append(generate_uniform_player("center0", num_weeks, rng, CENTER_LINE))
    players.append(generate_uniform_player("center1", num_weeks, rng, CENTER_LINE))
    return players


def random_pool(seed: int, num_players: int, num_weeks: int,
                constant_weeks: bool = False) -> list[PlayerHistory]:
    """Seeded pool with nondegenerate variation in every category."""
    from hooprank.categories import COUNTING_CATEGORIES

    rng = np.random.default_rng(seed)
    pool = []
    for i in range(num_players):
        base = {
            "pts": rng.uniform(10, 60), "reb": rng.uniform(2, 30),
            "ast": rng.uniform(1, 20), "stl": rng.uniform(0.5, 6),
            "blk": rng.uniform(0.2, 5), "tpm": rng.uniform(0, 10),
            "tov": rng.uniform(1, 9),
        }
        fga = rng.uniform(8, 60)
        fg_rate = rng.uniform(0.35, 0.62)
        fta = rng.uniform(1, 18)
        ft_rate = rng.uniform(0.5, 0.95)
        weeks = []
        for _ in range(num_weeks):
            jitter = (lambda v: v) if constant_weeks else (
                lambda v: max(v * rng.uniform(0.6, 1.4), 0.0))
            week = {c: jitter(base[c]) for c in COUNTING_CATEGORIES}
            week["fga"] = jitter(fga)
            week["fgm"] = week["fga"] * min(jitter(fg_rate), 1.0)
            week["fta"] = jitter(fta)
            week["ftm"] = week["fta"] * min(jitter(ft_rate), 1.0)
            weeks.append(week)
        pool.append(make_history(f"p{i:03d}", weeks))
    return pool


def build_oracle_pool(seed: int = 42, num_players: int = 156, num_weeks: int = 20):
    """Continuous-valued synthetic pool for Monte Carlo oracle tests.

    Built directly from numpy draws, independent of the package's own
    generator: per-player weekly means with known spreads, per-player week
    noise, and percentage stats with near-uniform attempt volume so the
    ratio approximations behind the closed forms apply.
    """
    rng = np.random.default_rng(seed)
    P, W = num_players, num_weeks
    base = {"pts": (50, 18, 18), "reb": (20, 7, 7.5), "ast": (12, 6, 5.5),
            "stl": (3.5, 1.0, 2.0), "blk": (2.2, 1.4, 1.6), "tpm": (6, 3, 3),
            "tov": (6, 2.3, 2.9)}
    cols = {}
    for c, (mean, spread, week_sd) in base.items():
        means = np.maximum(rng.normal(mean, spread, P), 0.3)
        scale = rng.uniform(0.8, 1.2, P)[:, None] * week_sd
        cols[c] = np.maximum(means[:, None] + scale * rng.standard_normal((P, W)), 0.0)
    fga = np.maximum(40 + 6 * rng.standard_normal((P, W)), 5.0)
    fg_rate = np.clip(rng.normal(0.48, 0.05, P)[:, None]
                      + 0.08 * rng.standard_normal((P, W)), 0.05, 0.95)
    cols["fga"], cols["fgm"] = fga, fga * fg_rate
    fta = np.maximum(11 + 3 * rng.standard_normal((P, W)), 1.0)
    ft_rate = np.clip(rng.normal(0.78, 0.08, P)[:, None]
                      + 0.10 * rng.standard_normal((P, W)), 0.05, 0.98)
    cols["fta"], cols["ftm"] = fta, fta * ft_rate

    histories = []
    for i in range(P):
        pid = f"q{i:03d}"
        weeks = tuple(
            PlayerWeek(pid, w, False,
                       **{c: float(cols[c][i, w]) for c in STAT_COLUMNS})
            for w in range(W)
        )
        histories.append(PlayerHistory(pid, weeks))
    return histories, cols


@pytest.fixture(scope="session")
def oracle_pool():
    return build_oracle_pool()


@pytest.fixture(scope="session")
def league():
    return generate_league()


@pytest.fixture(scope="session")
def eligible(league):
    return filter_eligible(league, 10)

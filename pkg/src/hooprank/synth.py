"""Synthetic league generator.

Produces weekly game logs with the moment structure of real professional
seasons: players differ in weekly means (player-to-player spread), weeks
differ around each player's mean (week-to-week noise, much larger than the
player spread in categories like steals), stats move together within a week
through the number of games played, and percentage categories get their
weekly noise from binomial make/attempt sampling. Better players also carry
higher turnover counts, mirroring usage.

The output is integer-valued, includes injured weeks (zeroed lines flagged
injured), and is deterministic for a given seed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gamelog import PlayerHistory, PlayerWeek

# Per counting category: population mean of player weekly means, population
# spread of those means, and week-to-week noise around a player's own mean.
# Spreads are wider than the top-of-pool spread they induce, since rankings
# truncate the population.
_COUNTING_PARAMS: dict[str, tuple[float, float, float]] = {
    "pts": (46.0, 18.0, 22.5),
    "reb": (17.0, 7.1, 8.1),
    "ast": (10.0, 6.3, 6.0),
    "stl": (3.1, 0.96, 2.2),
    "blk": (1.8, 1.9, 1.75),
    "tpm": (5.0, 3.0, 3.2),
    "tov": (5.6, 2.25, 3.2),
}

# How strongly each stat follows overall player quality. Turnovers load
# positively: high-usage stars cough the ball up more, not less.
_SKILL_LOADING: dict[str, float] = {
    "pts": 0.75, "reb": 0.45, "ast": 0.40, "stl": 0.35,
    "blk": 0.30, "tpm": 0.45, "tov": 0.55,
    "fga": 0.70, "fta": 0.60,
}

_GAMES_CHOICES = (3, 4)
_MEAN_GAMES = 3.5

_FGA_MEAN, _FGA_SPREAD, _FGA_NOISE = 38.0, 13.0, 4.0
_FTA_MEAN, _FTA_SPREAD, _FTA_NOISE = 10.0, 5.5, 2.5
_FG_RATE_MEAN, _FG_RATE_SPREAD = 0.48, 0.055
_FT_RATE_MEAN, _FT_RATE_SPREAD = 0.77, 0.10
# Week-to-week shooting form on top of binomial make noise.
_FG_FORM_SD, _FT_FORM_SD = 0.030, 0.075

DEFAULT_SEED = 2024
DEFAULT_PLAYERS = 300
DEFAULT_WEEKS = 24


def _player_means(rng: np.random.Generator, skill: np.ndarray, mean: float,
                  spread: float, loading: float, floor: float) -> np.ndarray:
    idio = rng.standard_normal(len(skill))
    mixed = loading * skill + np.sqrt(1.0 - loading**2) * idio
    return np.maximum(mean + spread * mixed, floor)


def generate_league(num_players: int = DEFAULT_PLAYERS,
                    num_weeks: int = DEFAULT_WEEKS,
                    seed: int = DEFAULT_SEED) -> list[PlayerHistory]:
    """Generate a full league of player histories.

    A small slice of the league is injury-prone (about half their weeks
    lost) so eligibility filtering has something to remove; everyone else
    misses roughly one week in twelve.
    """
    if num_players < 1 or num_weeks < 1:
        raise ValueError("num_players and num_weeks must be >= 1")
    rng = np.random.default_rng(seed)
    skill = rng.standard_normal(num_players)

    means = {
        c: _player_means(rng, skill, mean, spread, _SKILL_LOADING[c], floor=0.2)
        for c, (mean, spread, _) in _COUNTING_PARAMS.items()
    }
    fga_mean = _player_means(rng, skill, _FGA_MEAN, _FGA_SPREAD,
                             _SKILL_LOADING["fga"], floor=4.0)
    fta_mean = _player_means(rng, skill, _FTA_MEAN, _FTA_SPREAD,
                             _SKILL_LOADING["fta"], floor=1.0)
    fg_rate = np.clip(_FG_RATE_MEAN + _FG_RATE_SPREAD * rng.standard_normal(num_players),
                      0.32, 0.64)
    ft_rate = np.clip(_FT_RATE_MEAN + _FT_RATE_SPREAD * rng.standard_normal(num_players),
                      0.42, 0.95)

    # Games played per (player, week): the shared factor that moves every
    # stat in a week together.
    games = rng.choice(_GAMES_CHOICES, size=(num_players, num_weeks))
    games_scale = games / _MEAN_GAMES

    weekly: dict[str, np.ndarray] = {}
    for c, (_, _, week_noise) in _COUNTING_PARAMS.items():
        base = means[c][:, None] * games_scale
        # The games factor already contributes (mean/3.5)^2 * Var(games) of
        # week-to-week variance; idiosyncratic noise supplies the rest.
        factor_var = (means[c] / _MEAN_GAMES) ** 2 * np.var(_GAMES_CHOICES)
        idio_sd = np.sqrt(np.maximum(week_noise**2 - factor_var, 0.25))
        values = base + idio_sd[:, None] * rng.standard_normal((num_players, num_weeks))
        weekly[c] = np.rint(np.maximum(values, 0.0))

    fga = np.rint(np.maximum(
        fga_mean[:, None] * games_scale
        + _FGA_NOISE * rng.standard_normal((num_players, num_weeks)), 0.0))
    fta = np.rint(np.maximum(
        fta_mean[:, None] * games_scale
        + _FTA_NOISE * rng.standard_normal((num_players, num_weeks)), 0.0))
    fg_form = np.clip(fg_rate[:, None]
                      + _FG_FORM_SD * rng.standard_normal((num_players, num_weeks)),
                      0.05, 0.95)
    ft_form = np.clip(ft_rate[:, None]
                      + _FT_FORM_SD * rng.standard_normal((num_players, num_weeks)),
                      0.05, 0.98)
    fgm = rng.binomial(fga.astype(np.int64), fg_form).astype(float)
    ftm = rng.binomial(fta.astype(np.int64), ft_form).astype(float)

    injury_rate = np.full(num_players, 1.0 / 12.0)
    prone = rng.choice(num_players, size=max(num_players // 40, 1), replace=False)
    injury_rate[prone] = 0.55
    injured = rng.random((num_players, num_weeks)) < injury_rate[:, None]

    histories = []
    for p in range(num_players):
        pid = f"p{p:03d}"
        weeks = []
        for w in range(num_weeks):
            if injured[p, w]:
                weeks.append(PlayerWeek(pid, w, True, *([0.0] * 11)))
                continue
            weeks.append(PlayerWeek(
                pid, w, False,
                pts=weekly["pts"][p, w], reb=weekly["reb"][p, w],
                ast=weekly["ast"][p, w], stl=weekly["stl"][p, w],
                blk=weekly["blk"][p, w], tpm=weekly["tpm"][p, w],
                tov=weekly["tov"][p, w],
                fgm=fgm[p, w], fga=fga[p, w],
                ftm=ftm[p, w], fta=fta[p, w],
            ))
        histories.append(PlayerHistory(pid, tuple(weeks)))
    return histories


def generate_uniform_player(player_id: str, num_weeks: int,
                            rng: np.random.Generator,
                            base: Sequence[float]) -> PlayerHistory:
    """One player whose weekly lines equal a fixed base line (no noise).
    Useful for constructing exactly-average or degenerate fixtures."""
    weeks = tuple(
        PlayerWeek(player_id, w, False, *[float(v) for v in base])
        for w in range(num_weeks)
    )
    return PlayerHistory(player_id, weeks)

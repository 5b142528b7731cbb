"""Snake drafts and head-to-head season simulation.

A season samples each player's weekly lines uniformly with replacement from
their healthy weeks, pairs teams by a rotating round-robin schedule, and
scores every week in all nine categories. Two weekly formats are tracked:

- "each": standings by aggregate category record (wins minus losses).
- "most": a week is won by taking strictly more categories than the
  opponent (equal splits count half for both); standings by weeks won.

Rotisserie ranks season-long totals instead of weekly matchups.

The batch engine (SeasonSimulator) vectorizes sampling and scoring with
numpy; play_season is the readable object-path reference. Both consume the
random stream identically (one batched index draw, then one tie-break
draw), so equal seeds give equal results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

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
from .gamelog import PlayerHistory, PlayerWeek
from .pool import select_q_by_z
from .valuation import (
    KappaMode,
    MetricKind,
    build_league,
    profile_against,
    rank_players,
)

WIN, TIE, LOSS = 1, 0, -1

# Weekly scoring formats (rotisserie is season-long and handled separately).
FORMATS = ("each", "most")

_FORMAT_ALIASES = {
    "each": "each", "each_category": "each",
    "most": "most", "most_categories": "most",
}


def normalize_format(name: str) -> str:
    try:
        return _FORMAT_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown scoring format: {name!r}") from None


@dataclass(frozen=True)
class DraftConfig:
    """One head-to-head experiment configuration."""

    num_teams: int = 12
    roster_size: int = 13
    seat_under_test: int = 0
    metric_under_test: MetricKind = "g"
    field_metric: MetricKind = "z"

    def __post_init__(self):
        if self.num_teams < 2:
            raise ValueError(f"num_teams must be >= 2, got {self.num_teams}")
        if self.roster_size < 1:
            raise ValueError(f"roster_size must be >= 1, got {self.roster_size}")
        if not 0 <= self.seat_under_test < self.num_teams:
            raise ValueError(
                f"seat_under_test must be in [0, {self.num_teams}), "
                f"got {self.seat_under_test}"
            )
        for name in (self.metric_under_test, self.field_metric):
            if name not in ("z", "g"):
                raise ValueError(f"unknown metric {name!r}")


# ---------------------------------------------------------------------------
# Draft


def snake_order(num_teams: int, rounds: int) -> list[int]:
    """Seat on the clock for every overall pick: forward on even rounds,
    reversed on odd rounds (0-based)."""
    if num_teams < 1:
        raise ValueError(f"num_teams must be >= 1, got {num_teams}")
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    order: list[int] = []
    for r in range(rounds):
        seats = range(num_teams)
        order.extend(seats if r % 2 == 0 else reversed(seats))
    return order


def run_draft(rankings: Sequence[Sequence[str]], roster_size: int) -> list[list[str]]:
    """Greedy snake draft: each seat takes its highest-ranked available
    player. rankings[seat] is that seat's full preference list."""
    num_teams = len(rankings)
    teams: list[list[str]] = [[] for _ in range(num_teams)]
    taken: set[str] = set()
    for seat in snake_order(num_teams, roster_size):
        pick = next((pid for pid in rankings[seat] if pid not in taken), None)
        if pick is None:
            raise ValueError(f"ranking list for seat {seat} exhausted")
        taken.add(pick)
        teams[seat].append(pick)
    return teams


# ---------------------------------------------------------------------------
# Single-week domain operations


def sample_season(history: PlayerHistory, weeks: int, rng: np.random.Generator) -> tuple[PlayerWeek, ...]:
    """Draw a simulated season: weeks independent uniform draws with
    replacement from the player's healthy weeks."""
    healthy = history.healthy_weeks()
    if not healthy:
        raise ValueError(f"player {history.player_id} has no healthy weeks")
    idx = rng.integers(0, len(healthy), size=weeks)
    return tuple(healthy[i] for i in idx)


@dataclass(frozen=True)
class TeamWeek:
    """One team's aggregate line for one week: counting categories summed,
    percentage categories kept as (made, attempted) totals."""

    counting: dict[str, float]
    shooting: dict[str, tuple[float, float]]


def aggregate_team_week(player_weeks: Sequence[PlayerWeek]) -> TeamWeek:
    if not player_weeks:
        raise ValueError("cannot aggregate an empty team week")
    counting = {
        c: float(sum(getattr(w, c) for w in player_weeks))
        for c in COUNTING_CATEGORIES
    }
    shooting = {}
    for c, (made_col, att_col) in PERCENTAGE_COMPONENTS.items():
        shooting[c] = (
            float(sum(getattr(w, made_col) for w in player_weeks)),
            float(sum(getattr(w, att_col) for w in player_weeks)),
        )
    return TeamWeek(counting=counting, shooting=shooting)


def compare_rates(made_a: float, att_a: float, made_b: float, att_b: float) -> int:
    """Outcome for side a of a percentage category, by exact
    cross-multiplication (no division).

    Degenerate volumes: two zero-attempt teams tie; a zero-attempt team
    loses to any team that made at least one shot and ties a team that
    attempted but made none.
    """
    if att_a > 0 and att_b > 0:
        cross = made_a * att_b - made_b * att_a
        return WIN if cross > 0 else LOSS if cross < 0 else TIE
    if att_a == 0 and att_b == 0:
        return TIE
    if att_a == 0:
        return LOSS if made_b > 0 else TIE
    return WIN if made_a > 0 else TIE


def score_matchup(a: TeamWeek, b: TeamWeek) -> dict[str, int]:
    """Per-category outcome for team a: 1 win, 0 tie, -1 loss. Higher total
    wins counting categories except turnovers, where lower wins."""
    outcome: dict[str, int] = {}
    for c in COUNTING_CATEGORIES:
        diff = a.counting[c] - b.counting[c]
        if c in INVERTED_CATEGORIES:
            diff = -diff
        outcome[c] = WIN if diff > 0 else LOSS if diff < 0 else TIE
    for c in PERCENTAGE_CATEGORIES:
        made_a, att_a = a.shooting[c]
        made_b, att_b = b.shooting[c]
        outcome[c] = compare_rates(made_a, att_a, made_b, att_b)
    return outcome


# ---------------------------------------------------------------------------
# Schedule


def round_robin_pairings(num_teams: int, weeks: int) -> list[list[tuple[int, int]]]:
    """Rotating round-robin (circle method) repeated until `weeks` weeks.

    Team 0 stays fixed while the others rotate, so each block of
    num_teams - 1 weeks plays every pair exactly once.
    """
    if num_teams < 2 or num_teams % 2 != 0:
        raise ValueError(f"num_teams must be even and >= 2, got {num_teams}")
    if weeks < 1:
        raise ValueError(f"weeks must be >= 1, got {weeks}")
    rotating = list(range(1, num_teams))
    rounds: list[list[tuple[int, int]]] = []
    for _ in range(num_teams - 1):
        line = [0] + rotating
        rounds.append([
            (line[i], line[num_teams - 1 - i]) for i in range(num_teams // 2)
        ])
        rotating = rotating[-1:] + rotating[:-1]
    return [rounds[w % (num_teams - 1)] for w in range(weeks)]


# ---------------------------------------------------------------------------
# Season results and standings


@dataclass(frozen=True, eq=False)
class SeasonResult:
    """Full outcome of one simulated season.

    weekly_outcomes[w, t, c] is team t's result (1/0/-1) in category c of
    its week-w matchup, categories in ALL_CATEGORIES order. Standings are
    seat indices ordered best first, one per weekly format.
    """

    weekly_outcomes: np.ndarray
    wins: np.ndarray
    losses: np.ndarray
    ties: np.ndarray
    weeks_won: np.ndarray
    standings_each: tuple[int, ...]
    standings_most: tuple[int, ...]

    @property
    def champion_each(self) -> int:
        return self.standings_each[0]

    @property
    def champion_most(self) -> int:
        return self.standings_most[0]


def _standings(wins: np.ndarray, losses: np.ndarray, weeks_won: np.ndarray,
               tie_noise: np.ndarray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    teams = range(len(wins))
    each = sorted(teams, key=lambda t: (-(wins[t] - losses[t]), -wins[t], tie_noise[t]))
    most = sorted(teams, key=lambda t: (-weeks_won[t], -(wins[t] - losses[t]), tie_noise[t]))
    return tuple(each), tuple(most)


def play_season(teams: Sequence[Sequence[PlayerHistory]], weeks: int,
                rng: np.random.Generator) -> SeasonResult:
    """Readable reference implementation of one season.

    Stream contract shared with SeasonSimulator.play: first a single
    batched draw of healthy-week indices for all players (teams
    concatenated in seat order), then one tie-break draw per team.
    """
    num_teams = len(teams)
    flat = [p for team in teams for p in team]
    healthy = [p.healthy_weeks() for p in flat]
    for player, weeks_list in zip(flat, healthy):
        if not weeks_list:
            raise ValueError(f"player {player.player_id} has no healthy weeks")
    counts = np.array([len(w) for w in healthy])
    idx = rng.integers(0, counts[:, None], size=(len(flat), weeks))
    tie_noise = rng.random(num_teams)

    pairings = round_robin_pairings(num_teams, weeks)
    roster_size = len(teams[0])
    wins = np.zeros(num_teams, dtype=np.int64)
    losses = np.zeros(num_teams, dtype=np.int64)
    ties = np.zeros(num_teams, dtype=np.int64)
    weeks_won = np.zeros(num_teams)
    weekly = np.zeros((weeks, num_teams, NUM_CATEGORIES), dtype=np.int8)

    for w in range(weeks):
        lineups = []
        for t in range(num_teams):
            players = range(t * roster_size, (t + 1) * roster_size)
            lineups.append(aggregate_team_week([healthy[p][idx[p, w]] for p in players]))
        for a, b in pairings[w]:
            outcome = score_matchup(lineups[a], lineups[b])
            won = sum(1 for v in outcome.values() if v == WIN)
            lost = sum(1 for v in outcome.values() if v == LOSS)
            wins[a] += won
            losses[a] += lost
            ties[a] += NUM_CATEGORIES - won - lost
            wins[b] += lost
            losses[b] += won
            ties[b] += NUM_CATEGORIES - won - lost
            if won > lost:
                weeks_won[a] += 1.0
            elif won < lost:
                weeks_won[b] += 1.0
            else:
                weeks_won[a] += 0.5
                weeks_won[b] += 0.5
            for k, c in enumerate(ALL_CATEGORIES):
                weekly[w, a, k] = outcome[c]
                weekly[w, b, k] = -outcome[c]

    each, most = _standings(wins, losses, weeks_won, tie_noise)
    return SeasonResult(weekly, wins, losses, ties, weeks_won, each, most)


class SeasonSimulator:
    """Batch season engine: one matrix of all healthy weeks, one gather per
    season. Produces results identical to play_season for equal seeds."""

    def __init__(self, teams: Sequence[Sequence[PlayerHistory]], weeks: int):
        if len(teams) < 2 or len(teams) % 2 != 0:
            raise ValueError(f"need an even number of teams, got {len(teams)}")
        roster_sizes = {len(t) for t in teams}
        if len(roster_sizes) != 1:
            raise ValueError("all teams must have the same roster size")
        self.num_teams = len(teams)
        self.roster_size = roster_sizes.pop()
        self.weeks = weeks
        flat = [p for team in teams for p in team]
        matrices = [p.stat_matrix(healthy_only=True) for p in flat]
        counts = np.array([m.shape[0] for m in matrices])
        if (counts == 0).any():
            bad = flat[int(np.argmin(counts))].player_id
            raise ValueError(f"player {bad} has no healthy weeks")
        self._values = np.concatenate(matrices, axis=0)
        self._offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
        self._counts = counts
        pairings = round_robin_pairings(self.num_teams, weeks)
        self._a_idx = np.array([[a for a, _ in week] for week in pairings])
        self._b_idx = np.array([[b for _, b in week] for week in pairings])

    def play(self, rng: np.random.Generator) -> SeasonResult:
        idx = rng.integers(0, self._counts[:, None],
                           size=(len(self._counts), self.weeks))
        tie_noise = rng.random(self.num_teams)
        return self.play_indices(idx, tie_noise)

    def play_indices(self, idx: np.ndarray, tie_noise: np.ndarray) -> SeasonResult:
        """Score a season from pre-drawn healthy-week indices."""
        sampled = self._values[self._offsets[:, None] + idx]
        team_stats = sampled.reshape(
            self.num_teams, self.roster_size, self.weeks, -1
        ).sum(axis=1)
        week_col = np.arange(self.weeks)[:, None]
        a_stats = team_stats[self._a_idx, week_col]
        b_stats = team_stats[self._b_idx, week_col]
        outcomes = matchup_outcomes(a_stats, b_stats)

        a_won = (outcomes == WIN).sum(axis=2)
        a_lost = (outcomes == LOSS).sum(axis=2)
        wins = np.zeros(self.num_teams, dtype=np.int64)
        losses = np.zeros(self.num_teams, dtype=np.int64)
        np.add.at(wins, self._a_idx, a_won)
        np.add.at(losses, self._a_idx, a_lost)
        np.add.at(wins, self._b_idx, a_lost)
        np.add.at(losses, self._b_idx, a_won)
        ties = self.weeks * NUM_CATEGORIES - wins - losses

        week_points_a = np.where(a_won > a_lost, 1.0,
                                 np.where(a_won == a_lost, 0.5, 0.0))
        weeks_won = np.zeros(self.num_teams)
        np.add.at(weeks_won, self._a_idx, week_points_a)
        np.add.at(weeks_won, self._b_idx, 1.0 - week_points_a)

        weekly = np.zeros((self.weeks, self.num_teams, NUM_CATEGORIES), dtype=np.int8)
        weekly[week_col, self._a_idx] = outcomes
        weekly[week_col, self._b_idx] = -outcomes

        each, most = _standings(wins, losses, weeks_won, tie_noise)
        return SeasonResult(weekly, wins, losses, ties, weeks_won, each, most)


def matchup_outcomes(a_stats: np.ndarray, b_stats: np.ndarray) -> np.ndarray:
    """Vectorized score_matchup over stacked team stat lines.

    Inputs are (..., len(STAT_COLUMNS)) arrays; output is (..., 9) int8 in
    ALL_CATEGORIES order with side-a outcomes.
    """
    out = np.empty(a_stats.shape[:-1] + (NUM_CATEGORIES,), dtype=np.int8)
    for k, c in enumerate(COUNTING_CATEGORIES):
        col = STAT_INDEX[c]
        diff = np.sign(a_stats[..., col] - b_stats[..., col])
        if c in INVERTED_CATEGORIES:
            diff = -diff
        out[..., k] = diff
    for j, c in enumerate(PERCENTAGE_CATEGORIES):
        made_col, att_col = (STAT_INDEX[n] for n in PERCENTAGE_COMPONENTS[c])
        a_made, a_att = a_stats[..., made_col], a_stats[..., att_col]
        b_made, b_att = b_stats[..., made_col], b_stats[..., att_col]
        diff = np.sign(a_made * b_att - b_made * a_att)
        a_zero, b_zero = a_att == 0, b_att == 0
        diff = np.where(a_zero & ~b_zero, -(b_made > 0).astype(np.int8), diff)
        diff = np.where(b_zero & ~a_zero, (a_made > 0).astype(np.int8), diff)
        out[..., len(COUNTING_CATEGORIES) + j] = diff
    return out


# ---------------------------------------------------------------------------
# Rotisserie


@dataclass(frozen=True)
class RotisserieStandings:
    """Season-long rank-sum standings. ranks[c][t] is team t's rank in
    category c (1 is best; ties share the mean of their positions)."""

    ranks: dict[str, tuple[float, ...]]
    totals: tuple[float, ...]
    order: tuple[int, ...]


def rotisserie_standings(category_values, inverted=INVERTED_CATEGORIES) -> RotisserieStandings:
    """Rank each category across teams, sum the ranks, lowest total wins.

    category_values maps category name to the per-team season values;
    categories named in `inverted` rank ascending (lower value is better).
    Ties in the total are broken by team index.
    """
    category_values = dict(category_values)
    num_teams = {len(v) for v in category_values.values()}
    if len(num_teams) != 1:
        raise ValueError("all categories must cover the same teams")
    n = num_teams.pop()
    ranks: dict[str, tuple[float, ...]] = {}
    totals = np.zeros(n)
    for c, values in category_values.items():
        sign = -1.0 if c in inverted else 1.0
        cat_ranks = []
        for t in range(n):
            better = sum(1 for u in range(n) if sign * values[u] > sign * values[t])
            tied = sum(1 for u in range(n) if u != t and values[u] == values[t])
            cat_ranks.append(better + 1 + tied / 2.0)
        ranks[c] = tuple(cat_ranks)
        totals += np.array(cat_ranks)
    order = tuple(sorted(range(n), key=lambda t: (totals[t], t)))
    return RotisserieStandings(ranks=ranks, totals=tuple(float(x) for x in totals),
                               order=order)


# ---------------------------------------------------------------------------
# Experiment protocol


def season_rng(base_seed: int, seat: int, season_index: int) -> np.random.Generator:
    """Seed-split rule for experiment seasons: one independent stream per
    (root seed, draft seat, season index) triple."""
    return np.random.default_rng([base_seed, seat, season_index])


@dataclass(frozen=True)
class SeatOutcome:
    """Championship counts for one seat's simulated seasons, both formats."""

    seat: int
    n_seasons: int
    wins_each: int
    wins_most: int

    def win_rate(self, format: str) -> float:
        wins = self.wins_each if normalize_format(format) == "each" else self.wins_most
        return wins / self.n_seasons


@dataclass(frozen=True)
class ExperimentResult:
    """Win-rate estimate for the seat under test in one configuration."""

    config: DraftConfig
    format: str
    n_seasons: int
    wins: int
    win_rate: float
    std_error: float


def standard_error(win_rate: float, n_seasons: int) -> float:
    """Binomial standard error of an estimated win rate."""
    return float(np.sqrt(win_rate * (1.0 - win_rate) / n_seasons))


def experiment_rankings(players: Sequence[PlayerHistory], num_teams: int,
                        roster_size: int, kappa_mode: KappaMode = "one",
                        ) -> dict[MetricKind, list[str]]:
    """Both metrics' draft boards under the experiment protocol: reference
    pool chosen by full-league Z-scores, aggregates over that pool, every
    eligible player scored against those aggregates."""
    q = select_q_by_z(players, num_teams * roster_size, roster_size, kappa_mode)
    by_id = {h.player_id: h for h in players}
    _, agg = build_league([by_id[pid] for pid in q.pool_ids], roster_size, kappa_mode)
    profiles = [profile_against(h, agg) for h in players]
    return {
        metric: [s.player_id for s in rank_players(profiles, agg, metric, kappa_mode)]
        for metric in ("z", "g")
    }


def draft_teams(players: Sequence[PlayerHistory], config: DraftConfig,
                boards: Mapping[MetricKind, list[str]]) -> list[list[PlayerHistory]]:
    """Run the snake draft once: the seat under test drafts off its metric's
    board, every other seat drafts off the field metric's board."""
    rankings = [
        boards[config.metric_under_test if seat == config.seat_under_test
               else config.field_metric]
        for seat in range(config.num_teams)
    ]
    ids = run_draft(rankings, config.roster_size)
    by_id = {h.player_id: h for h in players}
    return [[by_id[pid] for pid in team] for team in ids]


def simulate_seat(teams: Sequence[Sequence[PlayerHistory]], seat: int,
                  n_seasons: int, base_seed: int, weeks: int = 20) -> SeatOutcome:
    """Play n_seasons re-sampled seasons of one drafted league and count
    how often the given seat takes the championship in each format."""
    sim = SeasonSimulator(teams, weeks)
    wins_each = wins_most = 0
    for s in range(n_seasons):
        result = sim.play(season_rng(base_seed, seat, s))
        wins_each += result.champion_each == seat
        wins_most += result.champion_most == seat
    return SeatOutcome(seat=seat, n_seasons=n_seasons,
                       wins_each=wins_each, wins_most=wins_most)


def run_experiment(players: Sequence[PlayerHistory], config: DraftConfig,
                   n_seasons: int, format: str, base_seed: int,
                   weeks: int = 20, kappa_mode: KappaMode = "one",
                   boards: Optional[Mapping[MetricKind, list[str]]] = None,
                   ) -> ExperimentResult:
    """Full protocol for one seat: choose the reference pool, build both
    draft boards, draft once, then re-sample seasons."""
    if n_seasons < 1:
        raise ValueError(f"n_seasons must be >= 1, got {n_seasons}")
    format = normalize_format(format)
    if boards is None:
        boards = experiment_rankings(players, config.num_teams,
                                     config.roster_size, kappa_mode)
    teams = draft_teams(players, config, boards)
    outcome = simulate_seat(teams, config.seat_under_test, n_seasons,
                            base_seed, weeks)
    wins = outcome.wins_each if format == "each" else outcome.wins_most
    rate = wins / n_seasons
    return ExperimentResult(config=config, format=format, n_seasons=n_seasons,
                            wins=wins, win_rate=rate,
                            std_error=standard_error(rate, n_seasons))


def run_experiment_sweep(players: Sequence[PlayerHistory], num_teams: int,
                         roster_size: int, metric: MetricKind,
                         field: MetricKind, n_seasons: int, base_seed: int,
                         weeks: int = 20, kappa_mode: KappaMode = "one",
                         ) -> list[SeatOutcome]:
    """One full experiment: the metric under test tried at every seat
    against a uniform field, n_seasons seasons per seat."""
    boards = experiment_rankings(players, num_teams, roster_size, kappa_mode)
    outcomes = []
    for seat in range(num_teams):
        config = DraftConfig(num_teams=num_teams, roster_size=roster_size,
                             seat_under_test=seat, metric_under_test=metric,
                             field_metric=field)
        teams = draft_teams(players, config, boards)
        outcomes.append(simulate_seat(teams, seat, n_seasons, base_seed, weeks))
    return outcomes

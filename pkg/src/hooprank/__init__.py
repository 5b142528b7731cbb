"""Category-league fantasy basketball valuation and season simulation."""

from .categories import (
    ALL_CATEGORIES,
    COUNTING_CATEGORIES,
    INVERTED_CATEGORIES,
    NUM_CATEGORIES,
    PERCENTAGE_CATEGORIES,
)
from .gamelog import (
    GameLogError,
    PlayerHistory,
    PlayerWeek,
    filter_eligible,
    parse_game_log,
    write_game_log,
)
from .pool import PoolSelection, select_q_by_z, select_q_equilibrium
from .reporting import (
    DenominatorReport,
    ExperimentReport,
    denominator_table,
    experiment_report,
    render,
)
from .simulate import (
    DraftConfig,
    SeasonResult,
    SeasonSimulator,
    TeamWeek,
    aggregate_team_week,
    play_season,
    rotisserie_standings,
    round_robin_pairings,
    run_draft,
    run_experiment,
    run_experiment_sweep,
    sample_season,
    score_matchup,
    snake_order,
)
from .valuation import (
    DegenerateCategoryError,
    DifferentialMoments,
    LeagueAggregates,
    PlayerProfile,
    ValueScore,
    build_league,
    counting_moments,
    expected_categories_won,
    g_score,
    kappa,
    percentage_differential_moments,
    percentage_moments,
    profile_against,
    rank_players,
    win_probability_counting,
    win_probability_raw,
    z_score,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"

"""Category definitions shared across the engine.

Nine standard categories: seven counting statistics aggregated by summing
weekly totals, and two percentage statistics aggregated as total makes over
total attempts. Turnovers are inverted (lower is better).
"""

COUNTING_CATEGORIES = ("pts", "reb", "ast", "stl", "blk", "tpm", "tov")
PERCENTAGE_CATEGORIES = ("fg_pct", "ft_pct")
ALL_CATEGORIES = COUNTING_CATEGORIES + PERCENTAGE_CATEGORIES

# Categories won by the team with the LOWER total.
INVERTED_CATEGORIES = frozenset({"tov"})

# (makes column, attempts column) backing each percentage category.
PERCENTAGE_COMPONENTS = {
    "fg_pct": ("fgm", "fga"),
    "ft_pct": ("ftm", "fta"),
}

# Numeric layout used by matrix representations of weekly stat lines.
STAT_COLUMNS = ("pts", "reb", "ast", "stl", "blk", "tpm", "tov",
                "fgm", "fga", "ftm", "fta")
STAT_INDEX = {name: i for i, name in enumerate(STAT_COLUMNS)}

# Game-log CSV schema (header row is mandatory, order is fixed).
CSV_COLUMNS = ("player_id", "week", "injured") + STAT_COLUMNS

NUM_CATEGORIES = len(ALL_CATEGORIES)

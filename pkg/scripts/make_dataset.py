"""Generate a synthetic weekly game log and write it as CSV.

The generator is calibrated so the pool's per-category variance structure
looks like a real season: high-volume categories carry most of their
variance between players, steals carry most of theirs week to week.
"""

import click

from hooprank.gamelog import filter_eligible, write_game_log
from hooprank.synth import DEFAULT_PLAYERS, DEFAULT_SEED, DEFAULT_WEEKS, generate_league


@click.command()
@click.option("--out", required=True, type=click.Path(), help="CSV destination.")
@click.option("--players", default=DEFAULT_PLAYERS, show_default=True)
@click.option("--weeks", default=DEFAULT_WEEKS, show_default=True)
@click.option("--seed", default=DEFAULT_SEED, show_default=True)
def main(out: str, players: int, weeks: int, seed: int):
    league = generate_league(num_players=players, num_weeks=weeks, seed=seed)
    write_game_log(league, out)
    eligible = filter_eligible(league, 10)
    click.echo(f"wrote {len(league)} players x {weeks} weeks to {out} "
               f"({len(eligible)} eligible at 10 healthy weeks)")


if __name__ == "__main__":
    main()

"""Head-to-head draft experiment: one drafter's metric against a uniform
field, every seat tried, seasons re-sampled from observed healthy weeks.

Runs the three canonical sweeps (g vs z field, z vs g field, g self-play)
and prints per-seat and aggregate championship rates for both weekly
formats. Raw outcome counts are saved as JSON next to the tables so the
report command can re-render them later.
"""

from pathlib import Path

import click

from hooprank.gamelog import filter_eligible, parse_game_log
from hooprank.reporting import experiment_report, render, save_outcomes
from hooprank.simulate import run_experiment_sweep

SWEEPS = (("g", "z"), ("z", "g"), ("g", "g"))


@click.command()
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=True), help="Weekly game log CSV.")
@click.option("--teams", default=12, show_default=True)
@click.option("--roster", default=13, show_default=True)
@click.option("--weeks", default=20, show_default=True)
@click.option("--seasons", default=1000, show_default=True,
              help="Seasons per seat.")
@click.option("--seed", default=7, show_default=True, type=click.IntRange(min=0))
@click.option("--min-weeks", default=10, show_default=True)
@click.option("--outdir", default="results", show_default=True,
              type=click.Path(), help="Directory for raw outcome JSON.")
def main(input_path: str, teams: int, roster: int, weeks: int, seasons: int,
         seed: int, min_weeks: int, outdir: str):
    eligible = filter_eligible(parse_game_log(input_path), min_weeks)
    click.echo(f"{len(eligible)} eligible players; {teams} teams x {roster}; "
               f"{seasons} seasons per seat at seed {seed}\n")
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for metric, field in SWEEPS:
        outcomes = run_experiment_sweep(eligible, teams, roster, metric, field,
                                        seasons, seed, weeks)
        save_outcomes(out / f"{metric}_vs_{field}.json", outcomes, metadata={
            "metric": metric, "field": field, "teams": teams, "roster": roster,
            "weeks": weeks, "seasons": seasons, "seed": seed,
        })
        for format in ("each", "most"):
            report = experiment_report(outcomes, metric, field, format)
            click.echo(f"== {metric} drafter vs {field} field, {format} ==")
            click.echo(render(report, "markdown"))


if __name__ == "__main__":
    main()

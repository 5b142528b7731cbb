"""Command-line entry points for the valuation engine."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import click

from .categories import ALL_CATEGORIES
from .gamelog import parse_game_log, filter_eligible
from .pool import select_q_by_z, select_q_equilibrium
from .reporting import (
    denominator_table,
    experiment_report,
    format_table,
    render,
    save_outcomes,
    load_outcomes,
)
from .simulate import (
    DraftConfig,
    draft_teams,
    experiment_rankings,
    run_experiment_sweep,
    simulate_seat,
)
from .valuation import build_league, profile_against, rank_players

logger = logging.getLogger(__name__)

_KAPPA_FLAGS = {"exact": "exact", "1.04": "fixed_1_04", "1": "one"}


def _load_eligible(input_path: str, min_weeks: int):
    histories = parse_game_log(input_path)
    eligible = filter_eligible(histories, min_weeks)
    return histories, eligible


def _select_pool(eligible, pool_mode: str, q_size: int, roster: int, kappa_mode: str):
    if pool_mode == "z":
        return select_q_by_z(eligible, q_size, roster, kappa_mode)
    return select_q_equilibrium(eligible, q_size, roster, kappa_mode=kappa_mode)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@click.group()
def cli():
    """Category-league player valuation and season simulation."""
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--min-weeks", default=10, show_default=True)
def ingest(input_path: str, min_weeks: int):
    """Validate a game log and print a pool summary."""
    histories, eligible = _load_eligible(input_path, min_weeks)
    total_weeks = sum(len(h.weeks) for h in histories)
    healthy_weeks = sum(len(h.healthy_weeks()) for h in histories)
    click.echo(f"players: {len(histories)}")
    click.echo(f"player-weeks: {total_weeks} ({healthy_weeks} healthy)")
    click.echo(f"eligible at >={min_weeks} healthy weeks: {len(eligible)}")


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--metric", type=click.Choice(["z", "g"]), default="g", show_default=True)
@click.option("--teams", default=12, show_default=True)
@click.option("--roster", default=13, show_default=True)
@click.option("--kappa", type=click.Choice(sorted(_KAPPA_FLAGS)), default="exact",
              show_default=True)
@click.option("--pool-mode", type=click.Choice(["z", "equilibrium"]), default="z",
              show_default=True)
@click.option("--min-weeks", default=10, show_default=True)
@click.option("--top", default=0, help="Limit to the top N rows (0 = all).")
@click.option("--output", type=click.Choice(["csv", "md"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
def rank(input_path: str, metric: str, teams: int, roster: int, kappa: str,
         pool_mode: str, min_weeks: int, top: int, output: str, out: Optional[str]):
    """Rank all eligible players with per-category and total scores."""
    _, eligible = _load_eligible(input_path, min_weeks)
    kappa_mode = _KAPPA_FLAGS[kappa]
    selection = _select_pool(eligible, pool_mode, teams * roster, roster, kappa_mode)
    by_id = {h.player_id: h for h in eligible}
    _, agg = build_league([by_id[pid] for pid in selection.pool_ids], roster, kappa_mode)
    profiles = [profile_against(h, agg) for h in eligible]
    scores = rank_players(profiles, agg, metric, kappa_mode)
    if top > 0:
        scores = scores[:top]
    header = ["rank", "player_id"] + list(ALL_CATEGORIES) + ["total"]
    body = [
        [str(i + 1), s.player_id]
        + [f"{s.per_category[c]:.4f}" for c in ALL_CATEGORIES]
        + [f"{s.total:.4f}"]
        for i, s in enumerate(scores)
    ]
    _emit(format_table(header, body, "markdown" if output == "md" else "csv"), out)


@cli.command("pool")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--mode", type=click.Choice(["z", "equilibrium"]), default="z",
              show_default=True)
@click.option("--q-size", default=156, show_default=True)
@click.option("--roster", default=13, show_default=True)
@click.option("--kappa", type=click.Choice(sorted(_KAPPA_FLAGS)), default="exact",
              show_default=True)
@click.option("--min-weeks", default=10, show_default=True)
def pool_cmd(input_path: str, mode: str, q_size: int, roster: int, kappa: str,
             min_weeks: int):
    """Select the reference pool and print it with convergence metadata."""
    _, eligible = _load_eligible(input_path, min_weeks)
    selection = _select_pool(eligible, mode, q_size, roster, _KAPPA_FLAGS[kappa])
    click.echo(f"mode: {selection.mode}")
    click.echo(f"iterations_used: {selection.iterations_used}")
    click.echo(f"converged: {selection.converged}")
    for pid in selection.pool_ids:
        click.echo(pid)


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--teams", default=12, show_default=True)
@click.option("--roster", default=13, show_default=True)
@click.option("--weeks", default=20, show_default=True)
@click.option("--seasons", default=1000, show_default=True)
@click.option("--seat", default="all", show_default=True,
              help="Draft seat under test (0-based) or 'all'.")
@click.option("--metric", type=click.Choice(["z", "g"]), default="g", show_default=True)
@click.option("--field", type=click.Choice(["z", "g"]), default="z", show_default=True)
@click.option("--format", "format_", type=click.Choice(["each", "most"]),
              default="each", show_default=True)
@click.option("--seed", default=7, show_default=True, type=click.IntRange(min=0))
@click.option("--kappa", type=click.Choice(sorted(_KAPPA_FLAGS)), default="1",
              show_default=True)
@click.option("--min-weeks", default=10, show_default=True)
@click.option("--output", type=click.Choice(["csv", "md"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--save", "save_path", type=click.Path(), default=None,
              help="Also write raw outcomes (both formats) as JSON.")
def simulate(input_path: str, teams: int, roster: int, weeks: int, seasons: int,
             seat: str, metric: str, field: str, format_: str, seed: int,
             kappa: str, min_weeks: int, output: str, out: Optional[str],
             save_path: Optional[str]):
    """Draft once per seat and re-sample seasons; report championship rates."""
    _, eligible = _load_eligible(input_path, min_weeks)
    kappa_mode = _KAPPA_FLAGS[kappa]
    if seat == "all":
        outcomes = run_experiment_sweep(eligible, teams, roster, metric, field,
                                        seasons, seed, weeks, kappa_mode)
    else:
        seat_index = int(seat)
        boards = experiment_rankings(eligible, teams, roster, kappa_mode)
        config = DraftConfig(num_teams=teams, roster_size=roster,
                             seat_under_test=seat_index,
                             metric_under_test=metric, field_metric=field)
        rosters = draft_teams(eligible, config, boards)
        outcomes = [simulate_seat(rosters, seat_index, seasons, seed, weeks)]
    if save_path:
        save_outcomes(save_path, outcomes, metadata={
            "metric": metric, "field": field, "teams": teams, "roster": roster,
            "weeks": weeks, "seasons": seasons, "seed": seed, "kappa": kappa,
        })
    report = experiment_report(outcomes, metric, field, format_)
    _emit(render(report, "markdown" if output == "md" else "csv"), out)


@cli.group()
def report():
    """Render summary tables from computed results."""


@report.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--teams", default=12, show_default=True)
@click.option("--roster", default=13, show_default=True)
@click.option("--kappa", type=click.Choice(sorted(_KAPPA_FLAGS)), default="1",
              show_default=True)
@click.option("--pool-mode", type=click.Choice(["z", "equilibrium"]), default="z",
              show_default=True)
@click.option("--min-weeks", default=10, show_default=True)
@click.option("--output", type=click.Choice(["csv", "md"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
def denominators(input_path: str, teams: int, roster: int, kappa: str,
                 pool_mode: str, min_weeks: int, output: str, out: Optional[str]):
    """Per-category variance table: how the two denominators compare."""
    _, eligible = _load_eligible(input_path, min_weeks)
    kappa_mode = _KAPPA_FLAGS[kappa]
    selection = _select_pool(eligible, pool_mode, teams * roster, roster, kappa_mode)
    by_id = {h.player_id: h for h in eligible}
    _, agg = build_league([by_id[pid] for pid in selection.pool_ids], roster, kappa_mode)
    table = denominator_table(agg)
    _emit(render(table, "markdown" if output == "md" else "csv"), out)


@report.command()
@click.option("--results", "results_path", required=True,
              type=click.Path(exists=True), help="JSON written by simulate --save.")
@click.option("--format", "format_", type=click.Choice(["each", "most"]),
              default="each", show_default=True)
@click.option("--output", type=click.Choice(["csv", "md"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
def experiment(results_path: str, format_: str, output: str, out: Optional[str]):
    """Per-seat and aggregate win rates from a saved simulation run."""
    outcomes, metadata = load_outcomes(results_path)
    report_obj = experiment_report(outcomes, metadata.get("metric", "?"),
                                   metadata.get("field", "?"), format_)
    _emit(render(report_obj, "markdown" if output == "md" else "csv"), out)


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--bind", default="127.0.0.1", show_default=True)
@click.option("--port", default=8710, show_default=True)
@click.option("--min-weeks", default=10, show_default=True)
@click.option("--state", "state_path", type=click.Path(), default=None,
              help="Append-only session log (default: <input>.sessions.jsonl).")
@click.option("--frontend", "frontend_dir", type=click.Path(), default=None,
              help="Directory of built UI assets to serve at /.")
def serve(input_path: str, bind: str, port: int, min_weeks: int,
          state_path: Optional[str], frontend_dir: Optional[str]):
    """Run the local draft service."""
    import uvicorn

    from .service import create_app

    if state_path is None:
        state_path = input_path + ".sessions.jsonl"
    app = create_app(parse_game_log(input_path), min_weeks=min_weeks,
                     state_path=Path(state_path),
                     frontend_dir=Path(frontend_dir) if frontend_dir else None)
    logger.info("serving on http://%s:%d", bind, port)
    uvicorn.run(app, host=bind, port=port)


def main():
    cli()


if __name__ == "__main__":
    main()

"""Selection of the reference pool: the set of players the league
aggregates are computed over."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .gamelog import PlayerHistory
from .valuation import (
    KappaMode,
    build_league,
    profile_against,
    rank_players,
)

PoolMode = Literal["z_full_league", "g_equilibrium"]


@dataclass(frozen=True)
class PoolSelection:
    """Chosen reference pool plus how the choice was reached."""

    pool_ids: tuple[str, ...]
    mode: PoolMode
    iterations_used: int
    converged: bool


def _top_ids(players: Sequence[PlayerHistory], reference_ids: Sequence[str],
             q_size: int, team_size: int, metric: str,
             kappa_mode: KappaMode) -> tuple[str, ...]:
    # Aggregates over the reference set; scores for every eligible player.
    by_id = {h.player_id: h for h in players}
    reference = [by_id[pid] for pid in reference_ids]
    _, agg = build_league(reference, team_size, kappa_mode)
    profiles = [profile_against(h, agg) for h in players]
    scores = rank_players(profiles, agg, metric, kappa_mode)
    return tuple(s.player_id for s in scores[:q_size])


def select_q_by_z(players: Sequence[PlayerHistory], q_size: int,
                  team_size: int = 13,
                  kappa_mode: KappaMode = "exact") -> PoolSelection:
    """Top q_size players by total Z-score with aggregates taken over the
    entire eligible set."""
    if q_size > len(players):
        raise ValueError(f"q_size {q_size} exceeds pool of {len(players)} players")
    if q_size < 1:
        raise ValueError(f"q_size must be >= 1, got {q_size}")
    all_ids = [h.player_id for h in players]
    top = _top_ids(players, all_ids, q_size, team_size, "z", kappa_mode)
    return PoolSelection(pool_ids=top, mode="z_full_league",
                         iterations_used=1, converged=True)


def select_q_equilibrium(players: Sequence[PlayerHistory], q_size: int,
                         team_size: int = 13, max_iters: int = 100,
                         kappa_mode: KappaMode = "exact") -> PoolSelection:
    """Iterate toward a self-consistent pool: recompute aggregates over the
    current pool, re-rank all players by the variance-aware score, and take
    the new top q_size until the set stops changing.

    Starts from the full-league Z-score pool. A 2-cycle (the set oscillating
    between two values) stops early with converged=False, returning the
    member of the cycle with the higher total score. iterations_used counts
    re-rank passes, so a pool that is already a fixed point reports 1.
    """
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")
    current = set(select_q_by_z(players, q_size, team_size, kappa_mode).pool_ids)

    def ordered(ids: set[str]) -> tuple[str, ...]:
        return _top_ids(players, sorted(ids), q_size, team_size, "g", kappa_mode)

    def total_score(ids: set[str]) -> float:
        by_id = {h.player_id: h for h in players}
        reference = [by_id[pid] for pid in sorted(ids)]
        profiles, agg = build_league(reference, team_size, kappa_mode)
        scores = rank_players(profiles.values(), agg, "g", kappa_mode)
        return sum(s.total for s in scores)

    previous: set[str] | None = None
    for iteration in range(1, max_iters + 1):
        next_ids = set(ordered(current))
        if next_ids == current:
            return PoolSelection(pool_ids=ordered(current), mode="g_equilibrium",
                                 iterations_used=iteration, converged=True)
        if previous is not None and next_ids == previous:
            # Oscillation between two sets: keep the higher-scoring one.
            pick = max((current, next_ids), key=total_score)
            return PoolSelection(pool_ids=ordered(pick), mode="g_equilibrium",
                                 iterations_used=iteration, converged=False)
        previous = current
        current = next_ids
    return PoolSelection(pool_ids=ordered(current), mode="g_equilibrium",
                         iterations_used=max_iters, converged=False)

/** View models derived from service payloads.
 *
 * Pure functions only: they turn snapshots and score rows into the shapes
 * the renderer consumes, so layout rules (board cells mirror the pick log,
 * drafted players never appear in recommendations) are testable without
 * a browser.
 */

import {
  ALL_CATEGORIES,
  Category,
  ScoreRow,
  SessionSnapshot,
  WhatifPayload,
} from "./api.js";
import { boardLayout } from "./snake.js";

export interface BoardCell {
  overallPick: number;
  round: number;
  seat: number;
  playerId: string | null;
  mine: boolean;
  onClock: boolean;
}

/** cells[round][seat], aligned with the snake layout of the session. */
export function boardCells(session: SessionSnapshot): BoardCell[][] {
  const byOverall = new Map(session.picks.map((p) => [p.overall_pick, p]));
  return boardLayout(session.teams, session.roster).map((row, round) =>
    row.map((overall, seat) => ({
      overallPick: overall,
      round,
      seat,
      playerId: byOverall.get(overall)?.player_id ?? null,
      mine: seat === session.my_seat,
      onClock: session.on_clock?.overall_pick === overall,
    })),
  );
}

export interface RosterSummary {
  playerIds: string[];
  perCategory: Record<Category, number>;
  total: number;
}

function zeroCategories(): Record<Category, number> {
  const zeros = {} as Record<Category, number>;
  for (const category of ALL_CATEGORIES) {
    zeros[category] = 0;
  }
  return zeros;
}

/** My picks in draft order, with category scores summed across the roster. */
export function rosterSummary(
  session: SessionSnapshot,
  scores: ReadonlyMap<string, ScoreRow>,
): RosterSummary {
  const playerIds = session.picks
    .filter((p) => p.seat === session.my_seat)
    .sort((a, b) => a.overall_pick - b.overall_pick)
    .map((p) => p.player_id);
  const perCategory = zeroCategories();
  let total = 0;
  for (const playerId of playerIds) {
    const row = scores.get(playerId);
    if (!row) {
      continue;
    }
    total += row.total;
    for (const category of ALL_CATEGORIES) {
      perCategory[category] += row.per_category[category];
    }
  }
  return { playerIds, perCategory, total };
}

/** Defensive filter: a drafted player must never show up as a suggestion. */
export function visibleRecommendations(
  rows: ScoreRow[],
  drafted: ReadonlySet<string>,
): ScoreRow[] {
  return rows.filter((row) => !drafted.has(row.player_id));
}

export interface WhatifBar {
  category: Category;
  probability: number;
  widthPct: number;
}

/** One bar per category, width proportional to the win probability. */
export function whatifBars(payload: WhatifPayload): WhatifBar[] {
  return ALL_CATEGORIES.map((category) => {
    const probability = payload.probabilities[category];
    return {
      category,
      probability,
      widthPct: Math.round(probability * 1000) / 10,
    };
  });
}

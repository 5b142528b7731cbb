import { describe, expect, it } from "vitest";

import {
  ALL_CATEGORIES,
  Category,
  PickEntry,
  ScoreRow,
  SessionSnapshot,
  WhatifPayload,
} from "../src/api";
import { seatForPick } from "../src/snake";
import {
  boardCells,
  rosterSummary,
  visibleRecommendations,
  whatifBars,
} from "../src/view";

function makeSession(
  teams: number,
  roster: number,
  playerIds: string[],
  mySeat = 0,
): SessionSnapshot {
  const picks: PickEntry[] = playerIds.map((playerId, index) => ({
    overall_pick: index + 1,
    seat: seatForPick(index + 1, teams),
    player_id: playerId,
  }));
  const totalPicks = teams * roster;
  const complete = picks.length >= totalPicks;
  return {
    session_id: "s1",
    teams,
    roster,
    my_seat: mySeat,
    total_picks: totalPicks,
    picks,
    complete,
    on_clock: complete
      ? null
      : { seat: seatForPick(picks.length + 1, teams), overall_pick: picks.length + 1 },
    available_count: 100 - picks.length,
  };
}

function categoryFill(value: number): Record<Category, number> {
  const filled = {} as Record<Category, number>;
  for (const category of ALL_CATEGORIES) {
    filled[category] = value;
  }
  return filled;
}

function makeRow(playerId: string, total: number): ScoreRow {
  return {
    rank: 1,
    player_id: playerId,
    total,
    per_category: categoryFill(total / ALL_CATEGORIES.length),
    marginal_value: total / 10,
  };
}

describe("boardCells", () => {
  it("places every logged pick in its snake cell and nothing else", () => {
    const session = makeSession(4, 3, ["a", "b", "c", "d", "e"]);
    const cells = boardCells(session).flat();
    const filled = cells.filter((cell) => cell.playerId !== null);
    expect(filled.map((cell) => [cell.overallPick, cell.playerId])).toEqual(
      session.picks.map((p) => [p.overall_pick, p.player_id]),
    );
    expect(cells).toHaveLength(12);
  });

  it("marks my column and the on-clock cell", () => {
    const session = makeSession(4, 2, ["a", "b"], 2);
    const cells = boardCells(session).flat();
    const mine = cells.filter((cell) => cell.mine);
    expect(mine.map((cell) => cell.overallPick)).toEqual([3, 6]);
    const onClock = cells.filter((cell) => cell.onClock);
    expect(onClock).toHaveLength(1);
    expect(onClock[0].overallPick).toBe(3);
  });

  it("has no on-clock cell once the draft completes", () => {
    const session = makeSession(2, 1, ["a", "b"]);
    expect(session.complete).toBe(true);
    const cells = boardCells(session).flat();
    expect(cells.every((cell) => !cell.onClock)).toBe(true);
  });
});

describe("rosterSummary", () => {
  it("sums category scores over my picks only, in draft order", () => {
    // 2-team snake: seats 0,1,1,0 so seat 0 owns picks 1 and 4.
    const session = makeSession(2, 2, ["a", "b", "c", "d"]);
    const scores = new Map([
      ["a", makeRow("a", 9)],
      ["b", makeRow("b", 90)],
      ["c", makeRow("c", 90)],
      ["d", makeRow("d", 18)],
    ]);
    const summary = rosterSummary(session, scores);
    expect(summary.playerIds).toEqual(["a", "d"]);
    expect(summary.total).toBeCloseTo(27, 10);
    for (const category of ALL_CATEGORIES) {
      expect(summary.perCategory[category]).toBeCloseTo(3, 10);
    }
  });

  it("keeps unknown ids on the roster but out of the sums", () => {
    const session = makeSession(2, 1, ["mystery"]);
    const summary = rosterSummary(session, new Map());
    expect(summary.playerIds).toEqual(["mystery"]);
    expect(summary.total).toBe(0);
  });
});

describe("visibleRecommendations", () => {
  it("never shows drafted players", () => {
    const rows = [makeRow("a", 3), makeRow("b", 2), makeRow("c", 1)];
    const visible = visibleRecommendations(rows, new Set(["b"]));
    expect(visible.map((row) => row.player_id)).toEqual(["a", "c"]);
  });

  it("passes rows through when nothing is drafted", () => {
    const rows = [makeRow("a", 3)];
    expect(visibleRecommendations(rows, new Set())).toEqual(rows);
  });
});

describe("whatifBars", () => {
  it("emits one bar per category in canonical order", () => {
    const payload: WhatifPayload = {
      player_id: "a",
      probabilities: categoryFill(0.5),
      expected_categories_won: 4.5,
      marginal_value: 0,
      clamped: false,
    };
    payload.probabilities.pts = 0.875;
    payload.probabilities.tov = 0.1234;
    const bars = whatifBars(payload);
    expect(bars.map((bar) => bar.category)).toEqual([...ALL_CATEGORIES]);
    expect(bars[0]).toEqual({ category: "pts", probability: 0.875, widthPct: 87.5 });
    const tov = bars.find((bar) => bar.category === "tov");
    expect(tov?.widthPct).toBe(12.3);
  });
});

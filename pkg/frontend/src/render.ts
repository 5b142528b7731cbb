/** HTML renderers.
 *
 * Each function turns a view model into an HTML string; main.ts assigns
 * the strings to container elements. Keeping renderers string-in/string-out
 * makes them testable without a DOM.
 */

import {
  ALL_CATEGORIES,
  ScoreRow,
  SessionSnapshot,
  WhatifPayload,
} from "./api.js";
import { BoardCell, RosterSummary, WhatifBar } from "./view.js";

const CATEGORY_LABELS: Record<string, string> = {
  fg_pct: "fg%",
  ft_pct: "ft%",
};

export function categoryLabel(category: string): string {
  return CATEGORY_LABELS[category] ?? category;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderStatus(session: SessionSnapshot): string {
  if (session.complete) {
    return `<span class="status-complete">draft complete (${session.picks.length}/${session.total_picks} picks)</span>`;
  }
  const clock = session.on_clock;
  if (clock === null) {
    return "<span>waiting</span>";
  }
  const who = clock.seat === session.my_seat
    ? '<strong class="status-mine">you are on the clock</strong>'
    : `seat ${clock.seat} is on the clock`;
  return `<span>pick ${clock.overall_pick} of ${session.total_picks}: ${who}</span>`;
}

export function renderBoard(cells: BoardCell[][], teams: number): string {
  const header = Array.from({ length: teams }, (_, seat) => `<th>seat ${seat}</th>`).join("");
  const rows = cells
    .map((row, round) => {
      const cols = row
        .map((cell) => {
          const classes = ["cell"];
          if (cell.mine) {
            classes.push("mine");
          }
          if (cell.onClock) {
            classes.push("on-clock");
          }
          if (cell.playerId !== null) {
            classes.push("taken");
          }
          const label = cell.playerId === null ? "&mdash;" : escapeHtml(cell.playerId);
          return `<td class="${classes.join(" ")}" data-overall="${cell.overallPick}">` +
            `<span class="pick-no">${cell.overallPick}</span>` +
            `<span class="pick-player">${label}</span></td>`;
        })
        .join("");
      return `<tr><th>r${round + 1}</th>${cols}</tr>`;
    })
    .join("");
  return `<table class="board"><thead><tr><th></th>${header}</tr></thead><tbody>${rows}</tbody></table>`;
}

export function renderRoster(summary: RosterSummary): string {
  const names = summary.playerIds.length === 0
    ? "<li class=\"empty\">no picks yet</li>"
    : summary.playerIds.map((id) => `<li>${escapeHtml(id)}</li>`).join("");
  const cells = ALL_CATEGORIES
    .map((category) =>
      `<tr><th>${categoryLabel(category)}</th>` +
      `<td>${summary.perCategory[category].toFixed(2)}</td></tr>`)
    .join("");
  return (
    `<ol class="roster-list">${names}</ol>` +
    `<table class="roster-sums"><tbody>${cells}` +
    `<tr class="roster-total"><th>total</th><td>${summary.total.toFixed(2)}</td></tr>` +
    `</tbody></table>`
  );
}

export function renderRecommendations(rows: ScoreRow[], picksDisabled: boolean): string {
  if (rows.length === 0) {
    return '<p class="empty">no players left</p>';
  }
  const disabled = picksDisabled ? " disabled" : "";
  const body = rows
    .map((row) => {
      const id = escapeHtml(row.player_id);
      return (
        `<tr data-player-id="${id}">` +
        `<td>${row.rank}</td>` +
        `<td class="player">${id}</td>` +
        `<td>${row.total.toFixed(2)}</td>` +
        `<td>${row.marginal_value.toFixed(3)}</td>` +
        `<td><button class="pick-btn" data-player-id="${id}"${disabled}>draft</button>` +
        `<button class="whatif-btn" data-player-id="${id}">what if</button></td>` +
        `</tr>`
      );
    })
    .join("");
  return (
    '<table class="recommendations"><thead><tr>' +
    "<th>#</th><th>player</th><th>total</th><th>marginal</th><th></th>" +
    `</tr></thead><tbody>${body}</tbody></table>`
  );
}

export function renderWhatif(payload: WhatifPayload, bars: WhatifBar[]): string {
  const rows = bars
    .map((bar) =>
      `<div class="whatif-row"><span class="whatif-label">${categoryLabel(bar.category)}</span>` +
      `<div class="whatif-track"><div class="whatif-bar" style="width: ${bar.widthPct}%"></div></div>` +
      `<span class="whatif-prob">${(bar.probability * 100).toFixed(1)}%</span></div>`)
    .join("");
  const clamp = payload.clamped
    ? '<p class="whatif-clamped">some probabilities hit the [0, 1] bounds</p>'
    : "";
  return (
    `<h3>what if: ${escapeHtml(payload.player_id)}</h3>` +
    rows +
    `<p>expected categories won: ${payload.expected_categories_won.toFixed(2)}` +
    ` (marginal ${payload.marginal_value.toFixed(3)})</p>` +
    clamp
  );
}

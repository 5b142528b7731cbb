/** Browser entry point: wires the store, the poller, and the DOM together. */

import { ApiError, DraftApi, Metric, ScoreRow } from "./api.js";
import { DraftRoomStore } from "./state.js";
import {
  boardCells,
  rosterSummary,
  visibleRecommendations,
  whatifBars,
} from "./view.js";
import {
  renderBoard,
  renderRecommendations,
  renderRoster,
  renderStatus,
  renderWhatif,
} from "./render.js";

const POLL_INTERVAL_MS = 1000;
const RECOMMENDATION_ROWS = 15;

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

class DraftRoom {
  private readonly api = new DraftApi("");
  private store: DraftRoomStore | null = null;
  private scores = new Map<string, ScoreRow>();
  private recommendations: ScoreRow[] = [];
  private metric: Metric = "g";
  private pollTimer: number | null = null;

  private readonly statusEl = element<HTMLElement>("status");
  private readonly errorEl = element<HTMLElement>("error");
  private readonly boardEl = element<HTMLElement>("board");
  private readonly rosterEl = element<HTMLElement>("roster");
  private readonly recsEl = element<HTMLElement>("recommendations");
  private readonly whatifEl = element<HTMLElement>("whatif");

  async start(): Promise<void> {
    element<HTMLButtonElement>("new-draft").addEventListener("click", () => {
      void this.newDraft();
    });
    element<HTMLSelectElement>("metric").addEventListener("change", (event) => {
      this.metric = (event.target as HTMLSelectElement).value as Metric;
      void this.refreshDerived();
    });
    this.recsEl.addEventListener("click", (event) => {
      void this.onListClick(event);
    });
    const resumeId = window.location.hash.replace(/^#s=/, "");
    if (resumeId) {
      try {
        const snapshot = await this.api.getSession(resumeId);
        await this.adoptSession(snapshot.session_id);
      } catch {
        window.location.hash = "";
      }
    }
  }

  private async newDraft(): Promise<void> {
    const teams = Number(element<HTMLInputElement>("teams").value);
    const roster = Number(element<HTMLInputElement>("roster").value);
    const seat = Number(element<HTMLInputElement>("seat").value);
    try {
      const snapshot = await this.api.createSession(teams, roster, seat);
      window.location.hash = `s=${snapshot.session_id}`;
      await this.adoptSession(snapshot.session_id);
    } catch (cause) {
      this.showError(cause);
    }
  }

  private async adoptSession(sessionId: string): Promise<void> {
    const snapshot = await this.api.getSession(sessionId);
    this.store = new DraftRoomStore(snapshot);
    const rankings = await this.api.rankings("g", snapshot.teams, snapshot.roster, 0);
    this.scores = new Map(rankings.rankings.map((row) => [row.player_id, row]));
    await this.refreshDerived();
    this.render();
    if (this.pollTimer !== null) {
      window.clearInterval(this.pollTimer);
    }
    this.pollTimer = window.setInterval(() => {
      void this.poll();
    }, POLL_INTERVAL_MS);
  }

  private async poll(): Promise<void> {
    if (this.store === null) {
      return;
    }
    try {
      const snapshot = await this.api.getSession(this.store.session.session_id);
      this.store.acceptServer(snapshot);
      await this.refreshDerived();
      this.render();
    } catch (cause) {
      this.showError(cause);
    }
  }

  private async refreshDerived(): Promise<void> {
    if (this.store === null) {
      return;
    }
    try {
      const payload = await this.api.recommendations(
        this.store.session.session_id,
        this.metric,
        RECOMMENDATION_ROWS + this.store.session.picks.length,
      );
      this.recommendations = payload.recommendations;
    } catch (cause) {
      this.showError(cause);
    }
  }

  private async onListClick(event: Event): Promise<void> {
    const target = event.target as HTMLElement;
    const playerId = target.dataset["playerId"];
    if (!playerId || this.store === null) {
      return;
    }
    if (target.classList.contains("pick-btn")) {
      await this.pick(playerId);
    } else if (target.classList.contains("whatif-btn")) {
      await this.whatif(playerId);
    }
  }

  private async pick(playerId: string): Promise<void> {
    if (this.store === null || !this.store.canPick(playerId)) {
      return;
    }
    this.clearError();
    const submission = this.store.submitPick(this.api, playerId);
    this.render(); // optimistic: board and clock advance immediately
    const outcome = await submission;
    if (outcome.status === "rejected") {
      this.showError(outcome.error);
      await this.poll(); // resync with the service after the rollback
      return;
    }
    await this.refreshDerived();
    this.render();
  }

  private async whatif(playerId: string): Promise<void> {
    if (this.store === null) {
      return;
    }
    try {
      const payload = await this.api.whatif(this.store.session.session_id, playerId);
      this.whatifEl.innerHTML = renderWhatif(payload, whatifBars(payload));
    } catch (cause) {
      this.showError(cause);
    }
  }

  private render(): void {
    if (this.store === null) {
      return;
    }
    const session = this.store.session;
    this.statusEl.innerHTML = renderStatus(session);
    this.boardEl.innerHTML = renderBoard(boardCells(session), session.teams);
    this.rosterEl.innerHTML = renderRoster(rosterSummary(session, this.scores));
    const rows = visibleRecommendations(this.recommendations, this.store.draftedIds())
      .slice(0, RECOMMENDATION_ROWS);
    const picksDisabled = session.complete || this.store.hasPending;
    this.recsEl.innerHTML = renderRecommendations(rows, picksDisabled);
  }

  private showError(cause: unknown): void {
    const message = cause instanceof ApiError
      ? `${cause.code}: ${cause.message}`
      : String(cause);
    this.errorEl.textContent = message;
    this.errorEl.classList.remove("hidden");
  }

  private clearError(): void {
    this.errorEl.textContent = "";
    this.errorEl.classList.add("hidden");
  }
}

void new DraftRoom().start();

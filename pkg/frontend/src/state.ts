/** Client-side session state with optimistic picks.
 *
 * The store keeps the last snapshot confirmed by the service plus at most
 * one pending pick. Readers always see the pending pick overlaid, so the
 * board and the on-clock indicator advance the moment the user clicks;
 * if the service rejects the pick the overlay is dropped and the view
 * falls back to confirmed truth.
 */

import { ApiError, DraftApi, PickEntry, SessionSnapshot } from "./api.js";
import { seatForPick } from "./snake.js";

export type PickOutcome =
  | { status: "confirmed"; session: SessionSnapshot }
  | { status: "rejected"; session: SessionSnapshot; error: ApiError };

/** Pure projection: the snapshot as it will look once a pick is accepted. */
export function projectPick(snapshot: SessionSnapshot, playerId: string): SessionSnapshot {
  if (snapshot.complete) {
    return snapshot;
  }
  const overall = snapshot.picks.length + 1;
  const entry: PickEntry = {
    overall_pick: overall,
    seat: seatForPick(overall, snapshot.teams),
    player_id: playerId,
  };
  const picks = [...snapshot.picks, entry];
  const complete = picks.length >= snapshot.total_picks;
  return {
    ...snapshot,
    picks,
    complete,
    on_clock: complete
      ? null
      : {
          seat: seatForPick(picks.length + 1, snapshot.teams),
          overall_pick: picks.length + 1,
        },
    available_count: snapshot.available_count - 1,
  };
}

export class DraftRoomStore {
  private confirmed: SessionSnapshot;
  private pendingPlayerId: string | null = null;

  constructor(initial: SessionSnapshot) {
    this.confirmed = initial;
  }

  /** Confirmed snapshot with the pending pick (if any) overlaid. */
  get session(): SessionSnapshot {
    if (this.pendingPlayerId === null || this.confirmed.complete) {
      return this.confirmed;
    }
    return projectPick(this.confirmed, this.pendingPlayerId);
  }

  get hasPending(): boolean {
    return this.pendingPlayerId !== null;
  }

  draftedIds(): Set<string> {
    return new Set(this.session.picks.map((p) => p.player_id));
  }

  canPick(playerId: string): boolean {
    const view = this.session;
    return !view.complete && !this.hasPending && !this.draftedIds().has(playerId);
  }

  /** Adopt a snapshot from the service (poll or pick response). */
  acceptServer(snapshot: SessionSnapshot): void {
    this.confirmed = snapshot;
    if (
      this.pendingPlayerId !== null &&
      (snapshot.complete ||
        snapshot.picks.some((p) => p.player_id === this.pendingPlayerId))
    ) {
      this.pendingPlayerId = null;
    }
  }

  rollback(): void {
    this.pendingPlayerId = null;
  }

  /** Optimistically apply a pick, then reconcile with the service. */
  async submitPick(api: DraftApi, playerId: string): Promise<PickOutcome> {
    if (this.pendingPlayerId !== null) {
      throw new Error("a pick is already in flight");
    }
    this.pendingPlayerId = playerId;
    try {
      const snapshot = await api.recordPick(this.confirmed.session_id, playerId);
      this.acceptServer(snapshot);
      this.pendingPlayerId = null;
      return { status: "confirmed", session: this.session };
    } catch (cause) {
      this.rollback();
      const error =
        cause instanceof ApiError
          ? cause
          : new ApiError(0, "network_error", String(cause));
      return { status: "rejected", session: this.session, error };
    }
  }
}

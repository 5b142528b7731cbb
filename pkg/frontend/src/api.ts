/** Typed client for the draft service JSON API.
 *
 * Every method maps to one endpoint and resolves to the exact payload the
 * service returns. Non-2xx responses carry a {code, message} body and are
 * raised as ApiError so callers can branch on the machine-readable code.
 */

export const COUNTING_CATEGORIES = [
  "pts", "reb", "ast", "stl", "blk", "tpm", "tov",
] as const;
export const PERCENTAGE_CATEGORIES = ["fg_pct", "ft_pct"] as const;
export const ALL_CATEGORIES = [
  ...COUNTING_CATEGORIES, ...PERCENTAGE_CATEGORIES,
] as const;
export type Category = (typeof ALL_CATEGORIES)[number];

export interface PickEntry {
  overall_pick: number;
  seat: number;
  player_id: string;
}

export interface OnClock {
  seat: number;
  overall_pick: number;
}

export interface SessionSnapshot {
  session_id: string;
  teams: number;
  roster: number;
  my_seat: number;
  total_picks: number;
  picks: PickEntry[];
  complete: boolean;
  on_clock: OnClock | null;
  available_count: number;
}

export interface ScoreRow {
  rank: number;
  player_id: string;
  total: number;
  per_category: Record<Category, number>;
  marginal_value: number;
}

export interface RecommendationsPayload {
  session_id: string;
  metric: string;
  recommendations: ScoreRow[];
}

export interface WhatifPayload {
  player_id: string;
  probabilities: Record<Category, number>;
  expected_categories_won: number;
  marginal_value: number;
  clamped: boolean;
}

export interface PlayerSummary {
  player_id: string;
  healthy_weeks: number;
  weekly_means: Record<string, number>;
}

export interface PlayersPayload {
  players: PlayerSummary[];
}

export interface RankingsPayload {
  metric: string;
  teams: number;
  roster: number;
  rankings: ScoreRow[];
}

export interface ErrorBody {
  code: string;
  message: string;
}

export type Metric = "z" | "g";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class DraftApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      throw new ApiError(0, "network_error", String(cause));
    }
    const body = (await response.json()) as unknown;
    if (!response.ok) {
      const err = body as Partial<ErrorBody>;
      throw new ApiError(
        response.status,
        err.code ?? "unknown_error",
        err.message ?? `request failed with status ${response.status}`,
      );
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createSession(teams: number, roster: number, mySeat: number): Promise<SessionSnapshot> {
    return this.post("/sessions", { teams, roster, my_seat: mySeat });
  }

  getSession(sessionId: string): Promise<SessionSnapshot> {
    return this.request(`/sessions/${encodeURIComponent(sessionId)}`);
  }

  recordPick(sessionId: string, playerId: string): Promise<SessionSnapshot> {
    return this.post(`/sessions/${encodeURIComponent(sessionId)}/picks`, {
      player_id: playerId,
    });
  }

  recommendations(sessionId: string, metric: Metric = "g", top = 25): Promise<RecommendationsPayload> {
    return this.request(
      `/sessions/${encodeURIComponent(sessionId)}/recommendations?metric=${metric}&top=${top}`,
    );
  }

  whatif(sessionId: string, playerId: string): Promise<WhatifPayload> {
    return this.request(
      `/sessions/${encodeURIComponent(sessionId)}/whatif/${encodeURIComponent(playerId)}`,
    );
  }

  players(): Promise<PlayersPayload> {
    return this.request("/players");
  }

  rankings(metric: Metric = "g", teams = 12, roster = 13, top = 0): Promise<RankingsPayload> {
    return this.request(
      `/rankings?metric=${metric}&teams=${teams}&roster=${roster}&top=${top}`,
    );
  }
}

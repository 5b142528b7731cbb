"""Local JSON-over-HTTP draft service.

Exposes rankings, draft sessions, and what-if evaluation so a browser
client can run a live draft. Sessions are event-sourced: every creation and
pick is appended to a JSONL state file and replayed on startup, so a
refresh or restart loses nothing. Mutations to one session are serialized
behind a per-session lock; reads need no coordination.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .categories import (
    ALL_CATEGORIES,
    COUNTING_CATEGORIES,
    PERCENTAGE_CATEGORIES,
    STAT_COLUMNS,
)
from .gamelog import PlayerHistory, parse_game_log, filter_eligible
from .pool import select_q_by_z
from .simulate import snake_order
from .valuation import (
    LeagueAggregates,
    PlayerProfile,
    ValueScore,
    build_league,
    expected_categories_won,
    percentage_differential_moments,
    profile_against,
    rank_players,
    win_probability_counting,
    win_probability_raw,
)


class ApiError(Exception):
    """Client-facing failure with a structured body."""

    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message
        super().__init__(message)


@dataclass
class LeagueView:
    """Everything derived from the dataset for one (teams, roster) shape."""

    num_teams: int
    roster_size: int
    aggregates: LeagueAggregates
    profiles: dict[str, PlayerProfile]
    scores: dict[str, dict[str, ValueScore]]   # metric -> player -> score
    boards: dict[str, list[str]]               # metric -> ids best first


@dataclass
class Session:
    session_id: str
    num_teams: int
    roster_size: int
    my_seat: int
    picks: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def total_picks(self) -> int:
        return self.num_teams * self.roster_size

    @property
    def complete(self) -> bool:
        return len(self.picks) >= self.total_picks

    def drafted_ids(self) -> set[str]:
        return {p["player_id"] for p in self.picks}


class CreateSessionRequest(BaseModel):
    teams: int = 12
    roster: int = 13
    my_seat: int = 0


class PickRequest(BaseModel):
    player_id: str


class DraftService:
    """Engine state shared by all endpoints."""

    def __init__(self, players: Sequence[PlayerHistory], min_weeks: int = 10,
                 state_path: Optional[Path] = None, kappa_mode: str = "exact"):
        self.players = filter_eligible(players, min_weeks)
        if not self.players:
            raise ValueError("no eligible players in dataset")
        self.by_id = {h.player_id: h for h in self.players}
        self.kappa_mode = kappa_mode
        self.state_path = Path(state_path) if state_path else None
        self.sessions: dict[str, Session] = {}
        self._views: dict[tuple[int, int], LeagueView] = {}
        self._registry_lock = threading.Lock()
        if self.state_path and self.state_path.exists():
            self._replay_state()

    # -- league views ------------------------------------------------------

    def view(self, num_teams: int, roster_size: int) -> LeagueView:
        key = (num_teams, roster_size)
        with self._registry_lock:
            if key in self._views:
                return self._views[key]
        q_size = num_teams * roster_size
        if q_size > len(self.players):
            raise ApiError(400, "pool_too_small",
                           f"league needs {q_size} players, dataset has "
                           f"{len(self.players)} eligible")
        selection = select_q_by_z(self.players, q_size, roster_size, self.kappa_mode)
        _, agg = build_league([self.by_id[pid] for pid in selection.pool_ids],
                              roster_size, self.kappa_mode)
        profiles = {h.player_id: profile_against(h, agg) for h in self.players}
        scores = {}
        boards = {}
        for metric in ("z", "g"):
            ranked = rank_players(profiles.values(), agg, metric)
            scores[metric] = {s.player_id: s for s in ranked}
            boards[metric] = [s.player_id for s in ranked]
        view = LeagueView(num_teams=num_teams, roster_size=roster_size,
                          aggregates=agg, profiles=profiles,
                          scores=scores, boards=boards)
        with self._registry_lock:
            return self._views.setdefault(key, view)

    # -- persistence -------------------------------------------------------

    def _append_state(self, event: dict) -> None:
        if self.state_path is None:
            return
        with open(self.state_path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(event) + "\n")

    def _replay_state(self) -> None:
        for line in self.state_path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            if event["type"] == "create":
                session = Session(session_id=event["session_id"],
                                  num_teams=event["teams"],
                                  roster_size=event["roster"],
                                  my_seat=event["my_seat"])
                self.sessions[session.session_id] = session
            elif event["type"] == "pick":
                session = self.sessions[event["session_id"]]
                self._apply_pick(session, event["player_id"])

    # -- sessions ----------------------------------------------------------

    def create_session(self, teams: int, roster: int, my_seat: int) -> Session:
        if teams < 2 or roster < 1:
            raise ApiError(400, "invalid_request",
                           "teams must be >= 2 and roster >= 1")
        if not 0 <= my_seat < teams:
            raise ApiError(400, "invalid_request",
                           f"my_seat must be in [0, {teams})")
        self.view(teams, roster)  # validates pool size, warms the cache
        session = Session(session_id=uuid.uuid4().hex[:12], num_teams=teams,
                          roster_size=roster, my_seat=my_seat)
        with self._registry_lock:
            self.sessions[session.session_id] = session
        self._append_state({"type": "create", "session_id": session.session_id,
                            "teams": teams, "roster": roster, "my_seat": my_seat})
        return session

    def get_session(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise ApiError(404, "unknown_session",
                           f"no session {session_id!r}") from None

    def _apply_pick(self, session: Session, player_id: str) -> None:
        if session.complete:
            raise ApiError(409, "session_complete", "draft is already complete")
        if player_id not in self.by_id:
            raise ApiError(404, "unknown_player", f"no player {player_id!r}")
        if player_id in session.drafted_ids():
            raise ApiError(409, "already_drafted",
                           f"{player_id} was already drafted")
        order = snake_order(session.num_teams, session.roster_size)
        overall = len(session.picks)
        session.picks.append({
            "overall_pick": overall + 1,
            "seat": order[overall],
            "player_id": player_id,
        })

    def record_pick(self, session_id: str, player_id: str) -> Session:
        session = self.get_session(session_id)
        with session.lock:
            self._apply_pick(session, player_id)
            self._append_state({"type": "pick", "session_id": session_id,
                                "player_id": player_id})
        return session

    # -- payload helpers ----------------------------------------------------

    def session_payload(self, session: Session) -> dict:
        order = snake_order(session.num_teams, session.roster_size)
        on_clock = None
        if not session.complete:
            on_clock = {"seat": order[len(session.picks)],
                        "overall_pick": len(session.picks) + 1}
        return {
            "session_id": session.session_id,
            "teams": session.num_teams,
            "roster": session.roster_size,
            "my_seat": session.my_seat,
            "total_picks": session.total_picks,
            "picks": list(session.picks),
            "complete": session.complete,
            "on_clock": on_clock,
            "available_count": len(self.players) - len(session.picks),
        }

    def score_row(self, rank: int, score: ValueScore, roster_size: int) -> dict:
        _, marginal = expected_categories_won(score, roster_size)
        return {
            "rank": rank,
            "player_id": score.player_id,
            "total": score.total,
            "per_category": dict(score.per_category),
            "marginal_value": marginal,
        }

    def recommendations(self, session: Session, metric: str, top: int) -> list[dict]:
        view = self.view(session.num_teams, session.roster_size)
        drafted = session.drafted_ids()
        rows = []
        for pid in view.boards[metric]:
            if pid in drafted:
                continue
            rows.append(self.score_row(len(rows) + 1, view.scores[metric][pid],
                                       session.roster_size))
            if len(rows) >= top:
                break
        return rows

    def whatif(self, session: Session, player_id: str) -> dict:
        if player_id not in self.by_id:
            raise ApiError(404, "unknown_player", f"no player {player_id!r}")
        if player_id in session.drafted_ids():
            raise ApiError(409, "already_drafted",
                           f"{player_id} was already drafted")
        view = self.view(session.num_teams, session.roster_size)
        score = view.scores["g"][player_id]
        profile = view.profiles[player_id]
        n = session.roster_size
        probabilities = {}
        clamped = False
        for c in COUNTING_CATEGORIES:
            raw = win_probability_raw(score.per_category[c], n)
            clamped = clamped or not 0.0 <= raw <= 1.0
            probabilities[c] = win_probability_counting(score.per_category[c], n)
        for c in PERCENTAGE_CATEGORIES:
            moments = percentage_differential_moments(profile, view.aggregates, c, n)
            raw = win_probability_raw(score.per_category[c], n)
            clamped = clamped or not 0.0 <= raw <= 1.0
            probabilities[c] = moments.win_probability
        _, marginal = expected_categories_won(score, n)
        return {
            "player_id": player_id,
            "probabilities": probabilities,
            "expected_categories_won": sum(probabilities[c] for c in ALL_CATEGORIES),
            "marginal_value": marginal,
            "clamped": clamped,
        }


def _validate_metric(metric: str) -> str:
    if metric not in ("z", "g"):
        raise ApiError(400, "invalid_metric", f"metric must be z or g, got {metric!r}")
    return metric


def create_app(players: Sequence[PlayerHistory], min_weeks: int = 10,
               state_path: Optional[Path] = None, kappa_mode: str = "exact",
               frontend_dir: Optional[Path] = None) -> FastAPI:
    """Build the HTTP app around a parsed dataset."""
    service = DraftService(players, min_weeks=min_weeks, state_path=state_path,
                           kappa_mode=kappa_mode)
    app = FastAPI(title="draft service")
    app.state.service = service

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content={"code": "invalid_request", "message": str(exc)})

    @app.post("/sessions")
    def create_session(body: CreateSessionRequest):
        session = service.create_session(body.teams, body.roster, body.my_seat)
        return service.session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return service.session_payload(service.get_session(session_id))

    @app.post("/sessions/{session_id}/picks")
    def record_pick(session_id: str, body: PickRequest):
        session = service.record_pick(session_id, body.player_id)
        return service.session_payload(session)

    @app.get("/sessions/{session_id}/recommendations")
    def recommendations(session_id: str, metric: str = "g", top: int = 25):
        session = service.get_session(session_id)
        if top < 1:
            raise ApiError(400, "invalid_request", "top must be >= 1")
        rows = service.recommendations(session, _validate_metric(metric), top)
        return {"session_id": session_id, "metric": metric,
                "recommendations": rows}

    @app.get("/sessions/{session_id}/whatif/{player_id}")
    def whatif(session_id: str, player_id: str):
        session = service.get_session(session_id)
        return service.whatif(session, player_id)

    @app.get("/players")
    def players_index():
        rows = []
        for h in service.players:
            matrix = h.stat_matrix(healthy_only=True)
            means = matrix.mean(axis=0)
            rows.append({
                "player_id": h.player_id,
                "healthy_weeks": len(h.weeks),
                "weekly_means": {
                    name: round(float(means[i]), 2)
                    for i, name in enumerate(STAT_COLUMNS)
                },
            })
        return {"players": rows}

    @app.get("/rankings")
    def rankings(metric: str = "g", teams: int = 12, roster: int = 13, top: int = 0):
        view = service.view(teams, roster)
        board = view.boards[_validate_metric(metric)]
        if top > 0:
            board = board[:top]
        rows = [service.score_row(i + 1, view.scores[metric][pid], roster)
                for i, pid in enumerate(board)]
        return {"metric": metric, "teams": teams, "roster": roster,
                "rankings": rows}

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True),
                  name="frontend")

    return app


def create_app_from_csv(input_path: Path, **kwargs) -> FastAPI:
    return create_app(parse_game_log(input_path), **kwargs)

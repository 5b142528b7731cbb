import numpy as np
import pytest
from fastapi.testclient import TestClient

from conftest import offset_line, symmetric_pool
from hooprank.categories import ALL_CATEGORIES
from hooprank.service import create_app
from hooprank.synth import generate_uniform_player

RNG = np.random.default_rng(0)


@pytest.fixture()
def client():
    return TestClient(create_app(symmetric_pool(), min_weeks=1))


def _create(client, teams=2, roster=2, my_seat=0):
    response = client.post("/sessions", json={"teams": teams, "roster": roster,
                                              "my_seat": my_seat})
    assert response.status_code == 200
    return response.json()


# ---------------------------------------------------------------------------
# Session lifecycle


def test_create_session_payload(client):
    payload = _create(client, teams=2, roster=2, my_seat=1)
    assert len(payload["session_id"]) == 12
    assert payload["teams"] == 2 and payload["roster"] == 2
    assert payload["my_seat"] == 1
    assert payload["picks"] == []
    assert not payload["complete"]
    assert payload["on_clock"] == {"seat": 0, "overall_pick": 1}
    assert payload["available_count"] == 12


def test_get_session_round_trip(client):
    created = _create(client)
    fetched = client.get(f"/sessions/{created['session_id']}")
    assert fetched.status_code == 200
    assert fetched.json() == created


def test_snake_clock_and_completion(client):
    session = _create(client, teams=2, roster=2)
    sid = session["session_id"]
    expected_seats = [0, 1, 1, 0]
    for n, pid in enumerate(["plus4", "plus3", "plus2", "plus1"]):
        assert session["on_clock"]["seat"] == expected_seats[n]
        response = client.post(f"/sessions/{sid}/picks", json={"player_id": pid})
        assert response.status_code == 200
        session = response.json()
        assert session["picks"][-1] == {
            "overall_pick": n + 1, "seat": expected_seats[n], "player_id": pid}
    assert session["complete"]
    assert session["on_clock"] is None
    overflow = client.post(f"/sessions/{sid}/picks", json={"player_id": "plus0"})
    assert overflow.status_code == 409
    assert overflow.json()["code"] == "session_complete"


def test_error_bodies_are_structured(client):
    missing = client.get("/sessions/nope")
    assert missing.status_code == 404
    assert missing.json() == {"code": "unknown_session",
                              "message": "no session 'nope'"}

    sid = _create(client)["session_id"]
    ghost = client.post(f"/sessions/{sid}/picks", json={"player_id": "ghost"})
    assert ghost.status_code == 404
    assert ghost.json()["code"] == "unknown_player"

    client.post(f"/sessions/{sid}/picks", json={"player_id": "plus0"})
    dup = client.post(f"/sessions/{sid}/picks", json={"player_id": "plus0"})
    assert dup.status_code == 409
    assert dup.json()["code"] == "already_drafted"


def test_create_session_validation(client):
    bad_seat = client.post("/sessions", json={"teams": 2, "roster": 2,
                                              "my_seat": 2})
    assert bad_seat.status_code == 400
    assert bad_seat.json()["code"] == "invalid_request"

    too_big = client.post("/sessions", json={"teams": 4, "roster": 4})
    assert too_big.status_code == 400
    assert too_big.json()["code"] == "pool_too_small"

    not_json = client.post("/sessions", json={"teams": "many"})
    assert not_json.status_code == 400
    assert not_json.json()["code"] == "invalid_request"


def test_invalid_metric_rejected(client):
    sid = _create(client)["session_id"]
    response = client.get(f"/sessions/{sid}/recommendations", params={"metric": "q"})
    assert response.status_code == 400
    assert response.json()["code"] == "invalid_metric"
    response = client.get("/rankings", params={"metric": "zz"})
    assert response.status_code == 400


# ---------------------------------------------------------------------------
# Recommendations and rankings


def test_recommendations_start_as_rankings_head(client):
    sid = _create(client)["session_id"]
    recs = client.get(f"/sessions/{sid}/recommendations",
                      params={"metric": "g", "top": 5}).json()["recommendations"]
    board = client.get("/rankings", params={"metric": "g", "teams": 2,
                                            "roster": 2, "top": 5}).json()["rankings"]
    assert [r["player_id"] for r in recs] == [r["player_id"] for r in board]
    assert [r["rank"] for r in recs] == [1, 2, 3, 4, 5]
    for row in recs:
        assert set(row) == {"rank", "player_id", "total", "per_category",
                            "marginal_value"}
        assert set(row["per_category"]) == set(ALL_CATEGORIES)


def test_recommendations_exclude_drafted(client):
    sid = _create(client)["session_id"]
    before = client.get(f"/sessions/{sid}/recommendations",
                        params={"top": 3}).json()["recommendations"]
    top = before[0]["player_id"]
    client.post(f"/sessions/{sid}/picks", json={"player_id": top})
    after = client.get(f"/sessions/{sid}/recommendations",
                       params={"top": 3}).json()["recommendations"]
    assert top not in [r["player_id"] for r in after]
    assert [r["player_id"] for r in after][:2] == [r["player_id"] for r in before][1:3]
    assert [r["rank"] for r in after] == [1, 2, 3]


def test_rankings_are_ordered_and_complete(client):
    rows = client.get("/rankings", params={"metric": "z", "teams": 2,
                                           "roster": 2}).json()["rankings"]
    assert len(rows) == 12
    totals = [r["total"] for r in rows]
    assert totals == sorted(totals, reverse=True)
    assert rows[0]["player_id"] == "plus4"


def test_players_index(client):
    payload = client.get("/players").json()
    assert len(payload["players"]) == 12
    row = next(r for r in payload["players"] if r["player_id"] == "center0")
    assert row["healthy_weeks"] == 12
    assert row["weekly_means"]["pts"] == 30.0
    assert row["weekly_means"]["fga"] == 10.0


def test_z_and_g_boards_differ_on_noisy_data(eligible):
    client = TestClient(create_app(eligible, min_weeks=10))
    z = client.get("/rankings", params={"metric": "z", "top": 26}).json()
    g = client.get("/rankings", params={"metric": "g", "top": 26}).json()
    z_ids = [r["player_id"] for r in z["rankings"]]
    g_ids = [r["player_id"] for r in g["rankings"]]
    assert z_ids != g_ids


# ---------------------------------------------------------------------------
# What-if evaluation


def test_whatif_average_player_is_a_coin_flip():
    # teams x roster spans the whole pool, so the reference pool is exactly
    # the symmetric league and the center player sits on every pool mean
    client = TestClient(create_app(symmetric_pool(), min_weeks=1))
    sid = _create(client, teams=12, roster=1)["session_id"]
    payload = client.get(f"/sessions/{sid}/whatif/center0").json()
    assert payload["player_id"] == "center0"
    for category, probability in payload["probabilities"].items():
        assert probability == pytest.approx(0.5, abs=1e-9), category
    assert payload["expected_categories_won"] == pytest.approx(4.5, abs=1e-9)
    assert payload["marginal_value"] == pytest.approx(0.0, abs=1e-9)
    assert payload["clamped"] is False


def test_whatif_monster_is_clamped():
    # eleven ordinary players and one outlier: the outlier's raw edge walks
    # past certainty and the payload says so
    players = []
    for i in range(11):
        d = (i - 5) / 5.0
        players.append(generate_uniform_player(f"reg{i}", 12, RNG, offset_line(d)))
    monster = list(offset_line(2.0))
    monster[0] = 400.0
    players.append(generate_uniform_player("monster", 12, RNG, tuple(monster)))
    client = TestClient(create_app(players, min_weeks=1))
    sid = _create(client, teams=12, roster=1)["session_id"]
    payload = client.get(f"/sessions/{sid}/whatif/monster").json()
    assert payload["clamped"] is True
    assert payload["probabilities"]["pts"] == 1.0
    assert payload["expected_categories_won"] <= 9.0


def test_whatif_rejects_drafted_and_unknown(client):
    sid = _create(client)["session_id"]
    client.post(f"/sessions/{sid}/picks", json={"player_id": "plus4"})
    drafted = client.get(f"/sessions/{sid}/whatif/plus4")
    assert drafted.status_code == 409
    unknown = client.get(f"/sessions/{sid}/whatif/ghost")
    assert unknown.status_code == 404


# ---------------------------------------------------------------------------
# Persistence and static hosting


def test_state_file_replays_sessions(tmp_path):
    state = tmp_path / "drafts.jsonl"
    players = symmetric_pool()
    first = TestClient(create_app(players, min_weeks=1, state_path=state))
    created = _create(first, teams=2, roster=2, my_seat=1)
    sid = created["session_id"]
    first.post(f"/sessions/{sid}/picks", json={"player_id": "plus4"})
    first.post(f"/sessions/{sid}/picks", json={"player_id": "plus3"})
    snapshot = first.get(f"/sessions/{sid}").json()

    revived = TestClient(create_app(players, min_weeks=1, state_path=state))
    assert revived.get(f"/sessions/{sid}").json() == snapshot
    # the revived app keeps appending to the same log
    revived.post(f"/sessions/{sid}/picks", json={"player_id": "plus2"})
    third = TestClient(create_app(players, min_weeks=1, state_path=state))
    assert len(third.get(f"/sessions/{sid}").json()["picks"]) == 3


def test_frontend_mount_serves_static_files(tmp_path):
    (tmp_path / "index.html").write_text("<html>draft room</html>")
    client = TestClient(create_app(symmetric_pool(), min_weeks=1,
                                   frontend_dir=tmp_path))
    page = client.get("/")
    assert page.status_code == 200
    assert "draft room" in page.text
    # API routes still win over the static mount
    assert client.get("/players").status_code == 200

import io

import pytest

from hooprank.gamelog import (
    GameLogError,
    PlayerHistory,
    PlayerWeek,
    filter_eligible,
    parse_game_log,
    write_game_log,
)

HEADER = "player_id,week,injured,pts,reb,ast,stl,blk,tpm,tov,fgm,fga,ftm,fta"


def parse_text(text: str):
    return parse_game_log(io.StringIO(text))


def test_parse_single_row_field_mapping():
    rows = parse_text(HEADER + "\np1,3,0,10,5,2,1,0,2,1,4,9,2,3\n")
    assert len(rows) == 1
    (week,) = rows[0].weeks
    assert week.player_id == "p1"
    assert week.week_index == 3
    assert not week.injured
    assert (week.pts, week.reb, week.ast, week.stl, week.blk) == (10, 5, 2, 1, 0)
    assert (week.tpm, week.tov) == (2, 1)
    assert (week.fgm, week.fga, week.ftm, week.fta) == (4, 9, 2, 3)


def test_parse_empty_file_is_empty_collection():
    assert parse_text(HEADER + "\n") == []


def test_parse_groups_by_player_and_flags_injuries():
    rows = parse_text(
        HEADER + "\n"
        "p1,0,0,10,5,2,1,0,2,1,4,9,2,3\n"
        "p2,0,1,0,0,0,0,0,0,0,0,0,0,0\n"
        "p1,1,0,12,4,3,0,1,1,2,5,11,1,2\n"
    )
    by_id = {h.player_id: h for h in rows}
    assert len(by_id["p1"].weeks) == 2
    assert by_id["p2"].weeks[0].injured


def test_missing_header_rejected():
    with pytest.raises(GameLogError):
        parse_text("p1,0,0,10,5,2,1,0,2,1,4,9,2,3\n")


def test_made_exceeding_attempts_rejected_with_line_number():
    with pytest.raises(GameLogError) as excinfo:
        parse_text(HEADER + "\np1,0,0,10,5,2,1,0,2,1,5,4,2,3\n")
    assert excinfo.value.line == 2
    assert "fgm" in str(excinfo.value)


def test_malformed_row_reports_line_number():
    text = HEADER + "\np1,0,0,10,5,2,1,0,2,1,4,9,2,3\np2,zero,0,1,1,1,1,1,1,1,1,2,1,2\n"
    with pytest.raises(GameLogError) as excinfo:
        parse_text(text)
    assert excinfo.value.line == 3


def test_wrong_field_count_rejected():
    with pytest.raises(GameLogError) as excinfo:
        parse_text(HEADER + "\np1,0,0,10\n")
    assert excinfo.value.line == 2


def test_duplicate_player_week_rejected():
    text = HEADER + "\np1,0,0,1,1,1,1,1,1,1,1,2,1,2\np1,0,0,2,2,2,2,2,2,2,1,2,1,2\n"
    with pytest.raises(GameLogError) as excinfo:
        parse_text(text)
    assert "duplicate" in str(excinfo.value)


def test_injured_flag_must_be_binary():
    with pytest.raises(GameLogError):
        parse_text(HEADER + "\np1,0,2,1,1,1,1,1,1,1,1,2,1,2\n")


def test_negative_stat_rejected():
    with pytest.raises(GameLogError):
        parse_text(HEADER + "\np1,0,0,-1,1,1,1,1,1,1,1,2,1,2\n")


def test_round_trip_preserves_collection():
    text = (
        HEADER + "\n"
        "p1,0,0,10,5,2,1,0,2,1,4,9,2,3\n"
        "p1,1,1,0,0,0,0,0,0,0,0,0,0,0\n"
        "p2,0,0,22.5,8,1,2,3,0,4,9,20,4,6\n"
    )
    first = parse_text(text)
    buffer = io.StringIO()
    write_game_log(first, buffer)
    second = parse_text(buffer.getvalue())
    assert first == second


def test_player_week_validation():
    with pytest.raises(ValueError):
        PlayerWeek("p", -1, False, *([1.0] * 11))
    with pytest.raises(ValueError):
        PlayerWeek("p", 0, False, *([float("nan")] + [1.0] * 10))
    with pytest.raises(ValueError):  # ftm > fta
        PlayerWeek("p", 0, False, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 2)


def test_history_rejects_duplicate_week_index():
    week = PlayerWeek("p", 0, False, *([1.0] * 11))
    with pytest.raises(ValueError):
        PlayerHistory("p", (week, week))


def _history(player_id, healthy, injured):
    weeks = []
    for w in range(healthy + injured):
        weeks.append(PlayerWeek(player_id, w, w < injured, *([1.0] * 11)))
    return PlayerHistory(player_id, tuple(weeks))


def test_filter_eligible_boundary():
    below = _history("below", healthy=9, injured=3)
    exactly = _history("exactly", healthy=10, injured=0)
    result = filter_eligible([below, exactly], min_weeks=10)
    assert [h.player_id for h in result] == ["exactly"]
    assert len(result[0].weeks) == 10


def test_filter_eligible_strips_injured_weeks():
    player = _history("p", healthy=12, injured=2)
    (kept,) = filter_eligible([player], min_weeks=10)
    assert len(kept.weeks) == 12
    assert not any(w.injured for w in kept.weeks)


def test_filter_eligible_min_weeks_one():
    player = _history("p", healthy=1, injured=5)
    assert len(filter_eligible([player], 1)) == 1


def test_filter_eligible_idempotent():
    players = [_history(f"p{i}", healthy=8 + i, injured=i % 3) for i in range(6)]
    once = filter_eligible(players, 10)
    twice = filter_eligible(once, 10)
    assert once == twice


def test_filter_eligible_never_fabricates_weeks():
    player = _history("p", healthy=11, injured=4)
    (kept,) = filter_eligible([player], 10)
    assert set(kept.weeks) <= set(player.weeks)


def test_filter_eligible_rejects_bad_threshold():
    with pytest.raises(ValueError):
        filter_eligible([], 0)

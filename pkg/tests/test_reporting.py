import math
import re

import pytest

from hooprank.categories import ALL_CATEGORIES
from hooprank.reporting import (
    denominator_ratio,
    denominator_table,
    experiment_report,
    format_table,
    load_outcomes,
    render,
    save_outcomes,
)
from hooprank.simulate import SeatOutcome
from hooprank.valuation import build_league


def test_ratio_week_noise_dominated_category():
    # a category whose week-to-week variance dwarfs the player spread keeps
    # only ~44% of its classic weight
    ratio = denominator_ratio(1.01, 4.20, 1.0)
    assert ratio == pytest.approx(0.4403, abs=5e-5)
    assert abs(ratio - 0.44) < 0.01


def test_ratio_no_week_noise_keeps_full_weight():
    assert denominator_ratio(2.5, 0.0, 1.0) == 1.0


def test_ratio_equal_variances_is_inverse_root_two():
    assert denominator_ratio(3.0, 3.0, 1.0) == pytest.approx(1 / math.sqrt(2))


def test_ratio_decreases_with_week_noise():
    ratios = [denominator_ratio(1.0, t, 1.0) for t in (0.0, 0.5, 1.0, 2.0, 8.0)]
    assert ratios == sorted(ratios, reverse=True)
    assert all(0 < r <= 1 for r in ratios)


def test_denominator_table_covers_all_categories(eligible):
    _, agg = build_league(eligible[:60], 13, "one")
    report = denominator_table(agg)
    assert [r.category for r in report.rows] == list(ALL_CATEGORIES)
    assert report.kappa == 1.0
    for row in report.rows:
        assert row.z_denominator == pytest.approx(math.sqrt(row.sigma_sq))
        assert row.g_denominator == pytest.approx(
            math.sqrt(row.sigma_sq + report.kappa * row.tau_sq))
        assert row.ratio == pytest.approx(row.z_denominator / row.g_denominator)


def test_csv_and_markdown_carry_identical_numbers(eligible):
    _, agg = build_league(eligible[:60], 13, "one")
    report = denominator_table(agg)
    csv = render(report, "csv")
    md = render(report, "markdown")
    number = re.compile(r"\d+\.\d+%?")
    assert number.findall(csv) == number.findall(md)
    assert csv.splitlines()[0] == ("category,sigma_sq,tau_sq,"
                                   "z_denominator,g_denominator,ratio")
    assert md.splitlines()[1].startswith("| ---")


def test_format_table_rejects_unknown_format():
    with pytest.raises(ValueError):
        format_table(["a"], [["1"]], "html")


def _outcomes():
    return [
        SeatOutcome(seat=0, n_seasons=100, wins_each=30, wins_most=20),
        SeatOutcome(seat=1, n_seasons=100, wins_each=10, wins_most=16),
        SeatOutcome(seat=2, n_seasons=100, wins_each=14, wins_most=12),
    ]


def test_experiment_report_aggregates_pooled_seasons():
    report = experiment_report(_outcomes(), "g", "z", "each")
    assert report.total_seasons == 300
    assert report.aggregate_rate == pytest.approx(54 / 300)
    # equal per-seat season counts: pooled rate is the mean of seat rates
    assert report.aggregate_rate == pytest.approx(
        sum(r.win_rate for r in report.rows) / len(report.rows))
    assert report.aggregate_std_error == pytest.approx(
        math.sqrt(report.aggregate_rate * (1 - report.aggregate_rate) / 300))


def test_experiment_report_format_switch():
    each = experiment_report(_outcomes(), "g", "z", "each_category")
    most = experiment_report(_outcomes(), "g", "z", "most_categories")
    assert each.format == "each" and most.format == "most"
    assert each.rows[0].win_rate == pytest.approx(0.30)
    assert most.rows[0].win_rate == pytest.approx(0.20)


def test_empty_experiment_renders_header_only():
    report = experiment_report([], "g", "z", "each")
    assert render(report, "csv") == "seat,n_seasons,win_rate,std_error\n"


def test_experiment_render_has_aggregate_row():
    report = experiment_report(_outcomes(), "g", "z", "each")
    lines = render(report, "csv").splitlines()
    assert lines[-1].startswith("aggregate,300,")
    assert "18.00%" in lines[-1]


def test_save_and_load_outcomes_round_trip(tmp_path):
    path = tmp_path / "results.json"
    metadata = {"metric": "g", "field": "z", "base_seed": 7}
    save_outcomes(path, _outcomes(), metadata)
    loaded, meta = load_outcomes(path)
    assert loaded == _outcomes()
    assert meta == metadata

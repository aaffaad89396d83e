import logging
from fractions import Fraction

import pytest
from hypothesis import given,settings,strategies as st

from tork.conjectures import (
    PROVED,
    SUITES,
    CheckReport,
    CheckRow,
    avramov_buchweitz_bound,
    check_avramov_buchweitz,
    check_corner_bounds,
    check_duality,
    check_euler,
    check_evans_griffith,
    check_horrocks,
    check_parity_bounds,
    check_toral_rank_zk,
    check_weak_horrocks,
    parity_bound,
    parse_suites,
    run_suites,
)
from tork.exceptions import RejectedInputError
from tork.grmod import monomial_quotient,point_module,random_artinian_module,stanley_reisner
from tork.koszul import BettiTable,betti_table
from tork.simplicial import enumerate_complexes,simplex



def q(m):
    return betti_table(point_module(m))


def sr_table(K):
    return betti_table(stanley_reisner(K, max(K.m, 1)), j_max=K.m)


def rows(report):
    return [(row.id, row.lhs, row.rhs, row.status) for row in report.rows]


def test_horrocks_on_residue_field():
    report = check_horrocks(q(4))
    assert report.overall == "pass"
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (4, 4), (6, 6), (4, 4), (1, 1)]
    assert report.params["expected"] is True


def test_horrocks_on_square_is_not_applicable(square):
    report = check_horrocks(sr_table(square))
    assert report.overall == "na"
    raw = [row for row in report.rows if not row.id.startswith("analogue")]
    assert [row.status for row in raw] == ["pass", "fail", "fail", "fail", "fail"]
    analogue = [row for row in report.rows if row.id.startswith("analogue")]
    assert [(row.lhs, row.rhs, row.status) for row in analogue] == [(1, 1, "pass"), (2, 2, "pass"), (1, 1, "pass")]


def test_horrocks_on_quotient(three_generators):
    report = check_horrocks(betti_table(three_generators))
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (3, 2), (2, 1)]
    assert report.overall == "pass"


def test_weak_horrocks(three_generators, square):
    assert rows(check_weak_horrocks(q(5))) == [("hrk", 32, 32, "pass")]
    assert rows(check_weak_horrocks(betti_table(three_generators))) == [("hrk", 6, 4, "pass")]
    assert check_weak_horrocks(sr_table(square)).overall == "na"


def test_corner_bounds(three_generators):
    assert [(r.lhs, r.rhs) for r in check_corner_bounds(q(3)).rows] == [(1, 1), (3, 3), (3, 3), (1, 1)]
    report = check_corner_bounds(betti_table(three_generators))
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (3, 2), (3, 2), (2, 1)]
    assert report.overall == "pass"
    assert check_corner_bounds(q(0)).overall == "na"


@pytest.mark.parametrize("m,bound", [(1, 2), (2, None), (3, 8), (4, 16), (5, 14), (6, 26)])
def test_parity_bound(m, bound):
    assert parity_bound(m) == bound


def test_parity_bounds():
    assert rows(check_parity_bounds(q(4))) == [("hrk", 16, 16, "pass")]
    assert rows(check_parity_bounds(q(5))) == [("hrk", 32, 14, "pass")]
    assert check_parity_bounds(q(2)).overall == "na"


def test_avramov_buchweitz():
    assert avramov_buchweitz_bound(5) == 32
    assert avramov_buchweitz_bound(6) == Fraction(91, 2)
    report = check_avramov_buchweitz(q(6))
    assert report.overall == "pass"
    assert report.params["ceil"] == 46
    assert report.rows[0].to_json() == {"id": "hrk", "lhs": 64, "rhs": "91/2", "status": "pass"}
    assert check_avramov_buchweitz(q(5)).rows[0].to_json()["rhs"] == 32
    assert check_avramov_buchweitz(q(4)).overall == "na"


def test_evans_griffith(square, pentagon):
    report = check_evans_griffith(sr_table(square))
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (2, 2), (1, 1)]
    assert report.overall == "pass"
    report = check_evans_griffith(sr_table(pentagon))
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (5, 3), (5, 3), (1, 1)]
    report = check_evans_griffith(sr_table(simplex(3)))
    assert rows(report) == [("i=0", 1, 1, "pass")]


def test_evans_griffith_corollary_rows(pentagon):
    report = check_evans_griffith(sr_table(pentagon), n=pentagon.n)
    corollary = [(r.lhs, r.rhs) for r in report.rows if r.id.startswith("corollary")]
    assert corollary == [(1, 1), (5, 3), (5, 3), (1, 1)]
    assert report.params["stated_j_range"] == [0, 2]


def test_evans_griffith_rejects_zero_table():
    with pytest.raises(RejectedInputError):
        check_evans_griffith(BettiTable(m=2, j_max=2))


def test_evans_griffith_needs_monomial_origin():
    assert check_evans_griffith(q(3)).overall == "na"


def test_toral_rank(square, pentagon):
    assert rows(check_toral_rank_zk(sr_table(square), square.n)) == [("hrk", 4, 4, "pass")]
    assert rows(check_toral_rank_zk(sr_table(pentagon), pentagon.n)) == [("hrk", 12, 8, "pass")]
    assert rows(check_toral_rank_zk(sr_table(simplex(4)), 4)) == [("hrk", 1, 1, "pass")]
    with pytest.raises(RejectedInputError):
        check_toral_rank_zk(sr_table(square), 5)


def test_duality(three_generators):
    report = check_duality(three_generators)
    assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1), (3, 3), (2, 2)]
    assert report.overall == "pass"
    assert check_duality(point_module(3)).overall == "pass"


def test_duality_skips_truncated_modules(square):
    assert check_duality(stanley_reisner(square, 4)).overall == "na"


def test_euler(three_generators, square):
    assert rows(check_euler(q(4))) == [("chi", 0, 0, "pass")]
    assert check_euler(betti_table(three_generators)).overall == "pass"
    assert check_euler(sr_table(square)).overall == "pass"
    assert check_euler(sr_table(simplex(3))).overall == "na"


def test_report_json():
    report = CheckReport(suite="weak", proved=False, applicable=True, rows=[CheckRow.at_least("hrk", 3, 4)])
    assert report.to_json() == {
        "suite": "weak",
        "kind": "conjectural",
        "params": {"applicable": True},
        "rows": [{"id": "hrk", "lhs": 3, "rhs": 4, "status": "fail"}],
        "overall": "fail",
    }
    assert not report.is_bug()


def test_horrocks_violation_for_small_m_is_logged(caplog):
    table = BettiTable(m=2, j_max=2, entries={(0, 0): 1, (1, 1): 1, (2, 2): 1}, krull_dim=0)
    with caplog.at_level(logging.WARNING, logger="tork.conjectures.suites"):
        report = check_horrocks(table)
    assert report.overall == "fail"
    assert "expected to hold" in caplog.text


def test_truncated_artinian_quotient_is_not_treated_as_finite():
    M = monomial_quotient(2, [[2, 0], [0, 2]], 1)
    B = betti_table(M)
    assert M.truncated and M.krull_dim == 0
    assert not B.complete and not B.finite
    reports = run_suites(["corners", "euler", "parity", "eg"], B, module=M)
    assert [r.overall for r in reports] == ["na", "na", "na", "na"]
    assert not any(r.is_bug() for r in reports)


def test_artinian_quotient_kept_to_its_socle_is_finite():
    M = monomial_quotient(2, [[2, 0], [0, 2]], 2)
    B = betti_table(M)
    assert not M.truncated and B.complete and B.finite
    reports = run_suites(["corners", "euler", "eg"], B, module=M)
    assert [r.overall for r in reports] == ["pass", "pass", "pass"]


def test_parse_suites():
    assert parse_suites("eg,trk,euler") == ["eg", "trk", "euler"]
    assert parse_suites("all") == list(SUITES)
    assert parse_suites("euler,all")[0] == "euler"
    with pytest.raises(RejectedInputError):
        parse_suites("eg,nope")


def test_run_suites(square):
    B = sr_table(square)
    reports = run_suites(["eg", "trk", "euler", "ab", "duality"], B)
    assert [r.overall for r in reports] == ["pass", "pass", "pass", "na", "na"]
    assert run_suites(["eg"], BettiTable(m=2, j_max=2))[0].overall == "na"
    assert PROVED <= set(SUITES)



@pytest.mark.parametrize("m", range(1, 5))
def test_proved_bounds_hold_on_every_complex(m):
    for K in enumerate_complexes(m):
        B = sr_table(K)
        for report in run_suites(["eg", "trk", "euler"], B, n=K.n):
            assert not report.is_bug(), (K, report)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 100_000), st.integers(1, 2))
def test_proved_bounds_hold_on_random_modules(m, seed, max_level):
    M = random_artinian_module(m, seed, max_level)
    B = betti_table(M)
    for report in run_suites(["corners", "parity", "ab", "euler", "duality"], B, module=M):
        assert report.overall in ("pass", "na"), report


@pytest.mark.slow
def test_proved_bounds_hold_on_many_random_modules():
    for m in range(1, 6):
        for seed in range(200):
            M = random_artinian_module(m, seed, 2 if m < 5 else 1)
            B = betti_table(M)
            for report in run_suites(["corners", "parity", "ab", "euler", "duality"], B, module=M):
                assert not report.is_bug(), (m, seed, report)

import json
import math

import pytest

import lpevac


def test_version():
    assert lpevac.__version__ == "1.0.0"


def test_perimeters():
    assert lpevac.pi_p(1.0) == 4.0
    assert lpevac.pi_p(math.inf) == 4.0
    assert lpevac.pi_p(2.0) == pytest.approx(math.pi, abs=1e-12)


def test_euclidean_critical_params():
    c = lpevac.critical_params(2.0)
    assert c.branch == lpevac.Branch.PHI_0
    assert c.w_p is None
    assert c.e_p == pytest.approx(4 * math.pi / 3, abs=1e-8)
    assert c.gamma_p == pytest.approx(math.sqrt(3), abs=1e-8)
    assert c.explored_fraction == pytest.approx(2 / 3, abs=1e-8)
    assert lpevac.worst_case_cost(2.0) == pytest.approx(1 + math.sqrt(3) + 2 * math.pi / 3, abs=1e-6)


def test_diagonal_branch_root():
    c = lpevac.critical_params(3.0)
    assert c.branch == lpevac.Branch.PHI_QUARTER
    assert c.w_p == pytest.approx(0.20405781723545581263, abs=1e-12)


def test_simulate_exit_diamond():
    out = lpevac.simulate_exit(1.0, math.pi / 4, math.pi)
    assert out["total_cost"] == pytest.approx(6.0, abs=1e-12)
    assert out["exit"] == pytest.approx((-1.0, 0.0), abs=1e-15)


def test_robot_positions_mirror():
    ccw, cw = lpevac.robot_positions(1.0, 0.0, 1.0)
    assert ccw == pytest.approx((0.5, 0.5))
    assert cw == pytest.approx((0.5, -0.5))


def test_min_chord_and_bounds():
    c = lpevac.critical_params(1.5)
    assert lpevac.min_chord_L(1.5, c.e_p) == pytest.approx(c.gamma_p, abs=1e-9)
    report = lpevac.optimality_report(1.5)
    assert abs(report.gap) <= 1e-4
    assert not report.generic_substituted


def test_monotonicity_reports():
    assert lpevac.verify_sigma_monotone(2.0, 128, 1e-6).direction == lpevac.Direction.CONSTANT
    assert lpevac.verify_L_monotone(3.0, 64).passed


def test_tables_round_trip():
    table = lpevac.pi_table(1.0, 3.0, 5)
    assert table.columns == ["p", "pi_p"]
    assert len(table.rows) == 5
    back = lpevac.CurveTable.from_csv(table.to_csv())
    assert back.to_csv() == table.to_csv()
    for got, want in zip(back.rows, table.rows):
        assert got == pytest.approx(want, rel=1e-11)
    doc = json.loads(lpevac.sigma_table(2.0, 4).to_json())
    assert doc["metadata"]["command"] == "sigma"
    assert all(v == pytest.approx(math.sqrt(3), abs=1e-6) for v in doc["data"]["sigma"])


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        lpevac.pi_p(0.5)
    with pytest.raises(ValueError):
        lpevac.profile_table(2.0, 0.3, 10)

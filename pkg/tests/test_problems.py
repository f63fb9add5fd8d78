import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bohr import problems as P
from bohr.errors import BracketError, DomainError, UnknownProblemError

from oracle import DISCREPANT, FROZEN, oracle_subord, oracle_wedge

IDS = ["classical_phi", "subord_beta", "ali_H", "ali_G", "ali_f", "thm2_7",
       "thm2_8_H", "thm2_8_G", "thm2_9_H", "thm2_9_G", "thm2_10", "thm2_11",
       "thm2_12_H", "thm2_12_G", "wedge", "wedge_improved"]


def test_catalog_ids_and_order():
    assert P.list_problems() == IDS


def test_unknown_id():
    with pytest.raises(UnknownProblemError):
        P.get_problem("thm9_9")
    assert "thm9_9" in str(pytest.raises(UnknownProblemError, P.solve, "thm9_9").value)


def test_targets():
    assert P.target("ali_H") == 1 / (2 * math.e)
    assert P.target("thm2_8_G") == 2 / math.e
    assert P.target("thm2_7") == math.exp(-2)
    assert P.target("wedge") == 1.0


def test_lhs_examples():
    assert P.defining_lhs("thm2_7", 1e-9) == pytest.approx(1e-9, rel=1e-8)
    assert P.defining_lhs("ali_H", 0.1222159) == pytest.approx(1 / (2 * math.e), abs=1e-6)
    assert P.defining_lhs("wedge", 1 / 3, alpha=1.0) == pytest.approx(1.0, abs=1e-15)
    assert P.defining_lhs("subord_beta", 0.5, beta=0.0) == pytest.approx(8.0)
    assert P.defining_lhs("classical_phi", 0.5, a=0.5) == pytest.approx(1.0)


def test_printed_value_of_discrepant_problem_misses_target():
    # at the printed 0.09735 the thm2_8_H lhs is well below 1/(2e)
    assert abs(P.defining_lhs("thm2_8_H", 0.09735) - 1 / (2 * math.e)) > 1e-2


def test_lhs_vectorizes():
    r = np.array([0.1, 0.2, 0.3])
    out = P.defining_lhs("thm2_11", r)
    assert out.shape == (3,)
    assert out[1] == P.defining_lhs("thm2_11", 0.2)


@pytest.mark.parametrize("r", [0.0, 1.0, -0.5, 1.5])
def test_radius_domain(r):
    with pytest.raises(DomainError):
        P.defining_lhs("ali_G", r)


def test_parameter_errors():
    with pytest.raises(DomainError):
        P.solve("subord_beta", beta=0.25)
    with pytest.raises(DomainError):
        P.solve("subord_beta")
    with pytest.raises(DomainError):
        P.solve("ali_H", beta=0.1)
    with pytest.raises(DomainError):
        P.solve("wedge", alpha=0.9)
    with pytest.raises(DomainError):
        P.solve("wedge_improved", alpha=1.0, beta=2.0)
    with pytest.raises(DomainError):
        P.closed_form_radius("thm2_7")


def test_subord_closed_forms():
    assert P.closed_form_radius("subord_beta", beta=0.0) == pytest.approx(3 - math.sqrt(8), abs=1e-15)
    assert P.closed_form_radius("subord_beta", beta=0.125) == pytest.approx(5 - 2 * math.sqrt(6), abs=1e-15)
    assert P.closed_form_radius("subord_beta", beta=0.1875) == pytest.approx(9 - 4 * math.sqrt(5), abs=1e-14)
    assert P.closed_form_radius("subord_beta", beta=0.21875) == pytest.approx(17 - 12 * math.sqrt(2), abs=1e-14)
    for beta, printed in ((0.0, 0.17157), (0.125, 0.10102), (0.1875, 0.05572), (0.21875, 0.02943)):
        assert abs(P.closed_form_radius("subord_beta", beta=beta) - printed) <= 1e-4


@given(st.floats(0.0, 0.2499))
def test_subord_closed_form_solves_equation(beta):
    r = P.closed_form_radius("subord_beta", beta=beta)
    assert r == pytest.approx(oracle_subord(beta), abs=1e-13)
    assert P.defining_lhs("subord_beta", r, beta=beta) == pytest.approx(1.0, abs=1e-12)


def test_subord_radius_decreases_to_zero():
    betas = np.linspace(0, 0.2499, 50)
    radii = [P.closed_form_radius("subord_beta", beta=b) for b in betas]
    assert all(a > b for a, b in zip(radii, radii[1:]))
    assert 0 < radii[-1] < 1e-3


def test_classical_closed_form():
    for a in (0.1, 0.3, 0.5, 0.7, 0.9):
        res = P.solve("classical_phi", a=a)
        assert res.computed_root == pytest.approx(1 / (1 + 2 * a), abs=1e-11)


@given(st.floats(1.0, 2.0), st.floats(0.0, 0.99))
def test_wedge_closed_form(alpha, beta):
    r = P.closed_form_radius("wedge_improved", alpha=alpha, beta=beta)
    assert r == pytest.approx(oracle_wedge(alpha, beta), abs=1e-13)
    assert P.solve("wedge_improved", alpha=alpha, beta=beta).computed_root == pytest.approx(r, abs=1e-11)


def test_wedge_special_values():
    assert P.closed_form_radius("wedge_improved", alpha=1.0, beta=0.0) == pytest.approx(1 / 3, abs=1e-12)
    assert P.closed_form_radius("wedge", alpha=1.0) == pytest.approx(1 / 3, abs=1e-15)
    assert P.closed_form_radius("wedge", alpha=2.0) == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-15)
    for alpha in (1.0, 1.5, 2.0):
        assert P.closed_form_radius("wedge", alpha=alpha) == P.closed_form_radius(
            "wedge_improved", alpha=alpha, beta=0.0)


def test_wedge_improved_without_positive_radius():
    assert P.closed_form_radius("wedge_improved", alpha=1.5, beta=1.0) == 0.0
    assert P.closed_form_radius("wedge_improved", alpha=1.0, beta=1.5) == 0.0
    with pytest.raises(BracketError):
        P.solve("wedge_improved", alpha=1.0, beta=1.5)


@pytest.mark.parametrize("pid", IDS)
def test_monotone_on_fine_grid(pid):
    for kw in P.default_instances(pid):
        grid = 0.999 * np.arange(1, 10_001) / 10_000
        assert np.all(np.diff(P.defining_log_lhs(pid, grid, **kw)) > 0)


@pytest.mark.parametrize("pid", IDS)
def test_log_lhs_matches_lhs(pid):
    grid = np.linspace(0.01, 0.5, 50)
    for kw in P.default_instances(pid):
        lhs = P.defining_lhs(pid, grid, **kw)
        assert np.allclose(np.exp(P.defining_log_lhs(pid, grid, **kw)), lhs, rtol=1e-12)


@pytest.mark.parametrize("pid", sorted(DISCREPANT))
def test_discrepancy_is_reported(pid):
    res = P.solve(pid)
    printed, magnitude = DISCREPANT[pid]
    assert res.paper_value == printed
    assert res.deviation == pytest.approx(abs(res.computed_root - printed), abs=0)
    # expected magnitudes are quoted to one significant digit
    assert abs(res.deviation - magnitude) <= 5e-4
    assert abs(P.defining_lhs(pid, res.computed_root) - P.target(pid)) <= 1e-10
    assert pid in P.DISCREPANT


def test_result_fields():
    res = P.solve("subord_beta", beta=0.125)
    assert res.label == "subord_beta(beta=0.125)"
    assert res.params == {"beta": 0.125}
    assert res.closed_form == pytest.approx(5 - 2 * math.sqrt(6))
    assert res.bracket_width <= 1e-12
    assert res.deviation <= 1e-4


def test_ordering_of_log_harmonic_radii():
    # adding terms to a majorant can only shrink the radius
    r = {pid: P.solve(pid).computed_root for pid in FROZEN}
    assert r["thm2_10"] < r["ali_f"]
    assert r["thm2_9_H"] < r["ali_H"]
    assert r["thm2_9_G"] < r["ali_G"]
    assert r["thm2_7"] < r["ali_f"]
    assert r["thm2_11"] < r["ali_f"]

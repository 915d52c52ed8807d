import numpy as np
import pytest

from kdisc import (
    BasePointNotZero,
    InfeasibleAtZero,
    InputError,
    JetVector,
    OutsideDomain,
    SolverConfig,
    ZeroJet,
    jet_of_disc,
    jet_scale,
    k1_disc_closed_form,
    k2_disc_closed_form,
    kobayashi_k_metric,
    make_ball,
    make_unit_disc,
    yu_metric,
)

from oracles import brute_force_ball_k1

FAST = SolverConfig()


def test_closed_forms_frozen_values():
    assert abs(k1_disc_closed_form(0.5, 1.0) - 4.0 / 3.0) < 1e-15
    assert abs(k1_disc_closed_form(0.0, 2.0) - 2.0) < 1e-15
    with pytest.raises(OutsideDomain):
        k1_disc_closed_form(1.0, 1.0)
    mk = lambda a, b: JetVector(np.zeros(1), np.array([[a], [b]], dtype=complex))
    assert abs(k2_disc_closed_form(mk(1.0, 0.0)) - 1.0) < 1e-15
    assert abs(k2_disc_closed_form(mk(0.0, 2.0)) - 1.0) < 1e-15
    assert abs(k2_disc_closed_form(mk(1.0, 2.0)) - np.sqrt(2.0)) < 1e-15
    with pytest.raises(BasePointNotZero):
        k2_disc_closed_form(JetVector(np.array([0.5]), np.ones((2, 1))))


def test_solver_matches_disc_closed_forms():
    disc = make_unit_disc()
    rng = np.random.default_rng(6)
    for _ in range(3):
        comps = rng.standard_normal((2, 1)) + 1j * rng.standard_normal((2, 1))
        xi = JetVector(np.zeros(1), comps)
        res = kobayashi_k_metric(disc, xi, FAST)
        ref = k2_disc_closed_form(xi)
        assert abs(res.value - ref) / ref < 0.02
    res = yu_metric(disc, [0.5], [1.0], 1, FAST)
    assert abs(res.value - 4.0 / 3.0) / (4.0 / 3.0) < 0.02


def test_witness_invariants():
    disc = make_unit_disc()
    xi = JetVector(np.zeros(1), np.array([[1.0], [2.0]], dtype=complex))
    res = kobayashi_k_metric(disc, xi, FAST)
    assert abs(res.value * res.lam - 1.0) < 1e-12
    rep = res.solver_report
    assert rep["jet_error"] <= FAST.jet_tol
    assert rep["witness_max_rho"] <= -FAST.margin / 2
    assert rep["witness_max_rho_fine_grid"] <= 1e-6
    got = jet_of_disc(res.extremal, 2)
    want = jet_scale(res.lam, xi)
    assert np.max(np.abs(got.components - want.components)) < 1e-9


def test_ball_k1_against_norm_and_oracle():
    ball = make_ball(2)
    v = np.array([0.8, -0.6j])
    res = yu_metric(ball, np.zeros(2), v, 1, FAST)
    assert abs(res.value - 1.0) < 0.02  # ||v|| = 1
    oracle = brute_force_ball_k1(v, degree=6, draws=60, seed=3)
    assert abs(res.value - oracle) < 0.02


def test_yu_ball_second_order_frozen():
    # discs (0, lambda^2 zeta^2 / 2): coefficient bound gives lambda = sqrt(2),
    # so the value is 1/sqrt(2)
    ball = make_ball(2)
    res = yu_metric(ball, np.zeros(2), [0.0, 1.0], 2, FAST)
    assert abs(res.value - 1.0 / np.sqrt(2.0)) / (1.0 / np.sqrt(2.0)) < 0.02


def test_solver_guards():
    disc = make_unit_disc()
    with pytest.raises(ZeroJet):
        kobayashi_k_metric(disc, JetVector(np.zeros(1), np.zeros((2, 1))))
    with pytest.raises(InputError):
        kobayashi_k_metric(
            disc,
            JetVector(np.zeros(1), np.ones((3, 1), dtype=complex)),
            SolverConfig(degree=2),
        )
    with pytest.raises(InfeasibleAtZero):
        kobayashi_k_metric(
            disc, JetVector(np.array([2.0 + 0j]), np.ones((1, 1), dtype=complex))
        )
    with pytest.raises(InputError):
        kobayashi_k_metric(make_ball(2), JetVector(np.zeros(1), np.ones((1, 1))))
    with pytest.raises(ZeroJet):
        yu_metric(disc, [0.0], [0.0], 1)


def test_determinism():
    disc = make_unit_disc()
    xi = JetVector(np.zeros(1), np.array([[0.3 + 1j], [1.0]], dtype=complex))
    a = kobayashi_k_metric(disc, xi, FAST)
    b = kobayashi_k_metric(disc, xi, FAST)
    assert a.value == b.value
    assert np.array_equal(a.extremal.numerators[0], b.extremal.numerators[0])

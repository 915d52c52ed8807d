import numpy as np
import pytest

from kdisc import (
    AnalyticDisc,
    BadLambda,
    InputError,
    InvalidDisc,
    ModulusNotLessThanOne,
    NotCentered,
    NotSelfMap,
    OutsideClosedDisc,
    blaschke_product,
    boundary_trace,
    disc_from_dict,
    disc_to_dict,
    reparametrize,
    rotate,
    schwarz_bound_check,
    schwarz_equality_disc,
)

from oracles import cauchy_taylor


def test_polynomial_eval_and_domain_guard():
    f = AnalyticDisc.polynomial([0.0, 1.0, 2.0])  # z + 2 z^2
    z = np.array([0.0, 0.5j])
    vals = f.eval(z)
    assert vals.shape == (2, 1)
    assert abs(vals[1, 0] - (0.5j - 0.5)) < 1e-15
    with pytest.raises(OutsideClosedDisc):
        f.eval(np.array([1.2]))


def test_taylor_coefficients_match_cauchy_integrals():
    zeros = [0.3, -0.2 + 0.1j]
    f = blaschke_product(zeros)

    def reference(z):
        num = (z - zeros[0]) * (z - zeros[1])
        den = (1 - np.conj(zeros[0]) * z) * (1 - np.conj(zeros[1]) * z)
        return num / den

    t_lib = f.taylor_coefficients(6)[:, 0]
    t_ref = cauchy_taylor(reference, 6)[:, 0]
    assert np.max(np.abs(t_lib - t_ref)) < 1e-12


def test_blaschke_product_values():
    f = blaschke_product([0.3, -0.3])
    # f(0) = (-0.3)(0.3) = -0.09
    assert abs(f.eval(np.array([0.0 + 0j]))[0, 0] - (-0.09)) < 1e-15
    tr = boundary_trace(f, 256)
    assert np.max(np.abs(np.abs(tr.samples) - 1.0)) < 1e-12
    with pytest.raises(ModulusNotLessThanOne):
        blaschke_product([1.0])
    with pytest.raises(InputError):
        blaschke_product([])


def test_schwarz_equality_disc_jet_formula():
    rng = np.random.default_rng(4)
    for _ in range(5):
        a = 0.8 * rng.random() * np.exp(2j * np.pi * rng.random())
        th = 2 * np.pi * rng.random()
        f = schwarz_equality_disc(a, th)
        t = f.taylor_coefficients(2)[:, 0]
        assert abs(t[0]) < 1e-14
        assert abs(t[1] - a) < 1e-13
        # f''(0) = 2 (1 - |a|^2) e^{i theta}, so t_2 = (1 - |a|^2) e^{i theta}
        assert abs(t[2] - (1 - abs(a) ** 2) * np.exp(1j * th)) < 1e-13
        tr = boundary_trace(f, 128)
        assert np.max(np.abs(np.abs(tr.samples) - 1.0)) < 1e-12


def test_reparametrize_and_rotate():
    f = blaschke_product([0.4j])
    lam = 0.7
    g = reparametrize(f, lam)
    z = np.exp(1j * np.linspace(0, 2, 7))
    assert np.max(np.abs(g.eval(z) - f.eval(lam * z))) < 1e-14
    al = 0.9
    r = rotate(f, al)
    assert np.max(np.abs(r.eval(z) - f.eval(np.exp(1j * al) * z))) < 1e-14
    with pytest.raises(BadLambda):
        reparametrize(f, 0.0)
    with pytest.raises(BadLambda):
        reparametrize(f, 1.5)


def test_schwarz_bound_check_values_and_guards():
    # z^2: slack = 2(1 - 0) - |2| = 0; z^3: slack = 2
    assert abs(schwarz_bound_check(AnalyticDisc.polynomial([0, 0, 1.0]))) < 1e-12
    assert abs(schwarz_bound_check(AnalyticDisc.polynomial([0, 0, 0, 1.0])) - 2.0) < 1e-12
    with pytest.raises(NotCentered):
        schwarz_bound_check(AnalyticDisc.polynomial([0.3, 0.5]))
    with pytest.raises(NotSelfMap):
        schwarz_bound_check(AnalyticDisc.polynomial([0.0, 2.0]))


def test_invalid_denominator_rejected():
    with pytest.raises(InvalidDisc):
        AnalyticDisc((np.array([1.0 + 0j]),), (np.array([1.0, -1.0 + 0j]),))


def test_disc_codec_roundtrip_and_paths():
    f = blaschke_product([0.3, -0.2 + 0.1j])
    back = disc_from_dict(disc_to_dict(f))
    z = 0.8 * np.exp(1j * np.linspace(0, 6, 11))
    assert np.max(np.abs(back.eval(z) - f.eval(z))) < 1e-14
    with pytest.raises(InputError, match="numerators"):
        disc_from_dict({"denominators": [[[1.0, 0.0]]]})
    with pytest.raises(InputError, match="denominators"):
        disc_from_dict({"numerators": [[[1.0, 0.0]]], "denominators": [["x"]]})

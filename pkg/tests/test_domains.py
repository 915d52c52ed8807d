import numpy as np
import pytest

from kdisc import (
    AnalyticDisc,
    InputError,
    NonPositiveCoefficient,
    blaschke_product,
    boundary_distance_profile,
    contains,
    convexity_probe,
    domain_from_dict,
    make_ball,
    make_complex_ellipsoid,
    make_domain,
    make_ellipsoid,
    make_unit_disc,
)


def test_ball_and_disc_basics():
    disc = make_unit_disc()
    assert disc.dim == 1 and disc.claims_strictly_convex
    assert disc.rho(np.array([0.5 + 0j])) < 0
    ball = make_ball(3)
    z = np.array([0.5, 0.5, 0.5 + 0j])
    assert abs(ball.rho(z) - (-0.25)) < 1e-15
    # drho = conj(z) for sum |z_i|^2 - 1
    assert np.allclose(ball.drho(z), np.conj(z))


def test_ellipsoid_values():
    ell = make_ellipsoid([1.0, 2.0])
    z = np.array([0.6, 0.6 + 0j])
    # 1*0.36 + 2*0.36 - 1 = 0.08
    assert abs(ell.rho(z) - 0.08) < 1e-15
    # drho_i = a_i conj(z_i): at (1, i) this is (1, -2i)
    g = ell.drho(np.array([1.0 + 0j, 1j]))
    assert np.allclose(g, [1.0, -2.0j], atol=1e-15)
    with pytest.raises(NonPositiveCoefficient):
        make_ellipsoid([1.0, 0.0])


def test_make_domain_validates_gradient():
    def rho(z):
        z = np.atleast_2d(z)
        return np.sum(np.abs(z) ** 2, axis=1).squeeze() - 1.0

    def bad_drho(z):
        return 2.0 * np.conj(np.atleast_2d(z)).squeeze()  # off by a factor 2

    with pytest.raises(InputError):
        make_domain(
            dim=1,
            rho=rho,
            drho=bad_drho,
            bounding_radius=1.1,
            interior_point=np.zeros(1),
            name="bad",
        )


def test_contains_and_profile():
    disc = make_unit_disc()
    z = np.array([[0.2 + 0j], [0.999 + 0j], [1.5 + 0j]])
    inside = contains(disc, z)
    assert list(inside) == [True, True, False]
    f = AnalyticDisc.polynomial([0.0, 1.0])
    prof = boundary_distance_profile(disc, f, 64)
    assert np.max(np.abs(prof.samples.real)) < 1e-14


def test_domain_from_dict_kinds_and_paths():
    d = domain_from_dict({"kind": "ellipsoid", "coeffs": [1.0, 2.0]})
    assert d.dim == 2
    d2 = domain_from_dict({"kind": "ball", "n": 3})
    assert d2.dim == 3
    d3 = domain_from_dict({"kind": "complex_ellipsoid", "exponents": [1, 2]})
    assert d3.dim == 2
    with pytest.raises(InputError, match="kind"):
        domain_from_dict({"kind": "torus"})
    with pytest.raises(InputError, match="coeffs"):
        domain_from_dict({"kind": "ellipsoid"})


def test_convexity_probe_ball_clean():
    rep = convexity_probe(make_ball(2))
    assert rep["strict_violation"] is False
    assert rep["claim_contradicted"] is False
    assert rep["min_second_difference"] > rep["threshold"]
    assert rep["max_bisection_defect"] <= 1e-10


def test_convexity_probe_flags_quartic_flats():
    # |z1|^4 + |z2|^4 < 1 has vanishing second-order growth along the axes
    dom = make_complex_ellipsoid([2, 2])
    assert dom.claims_strictly_convex is False  # honest default
    rep = convexity_probe(dom)
    assert rep["strict_violation"] is True
    assert rep["claim_contradicted"] is False
    dom2 = make_complex_ellipsoid([2, 2], claims_strictly_convex=True)
    rep2 = convexity_probe(dom2)
    assert rep2["claim_contradicted"] is True
    assert rep2["min_second_difference"] < rep2["threshold"]

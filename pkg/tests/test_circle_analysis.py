import numpy as np
import pytest

from kdisc import (
    AliasRisk,
    CircleFunction,
    FourierSpectrum,
    InputError,
    NearZero,
    NotHolomorphic,
    ZeroFunction,
    fourier_transform,
    holomorphic_extension,
    inverse_transform,
    negative_tail_residual,
    real_completion,
    winding_number,
)

from oracles import dft_direct


def test_grid_validation():
    with pytest.raises(InputError):
        CircleFunction(np.ones(12))  # not a power of two
    with pytest.raises(InputError):
        CircleFunction(np.ones(4))  # below the minimum
    with pytest.raises(InputError):
        CircleFunction(np.array([np.nan] * 8))
    u = CircleFunction(np.ones((16, 3)))
    assert u.grid_size == 16 and u.dim == 3


def test_coefficient_extraction_band_limited():
    # u = zeta + 0.5 zeta^{-2}: c_1 = 1 and c_{-2} = 0.5 exactly
    u = CircleFunction.from_callable(lambda z: z + 0.5 * z ** (-2.0), 16)
    s = fourier_transform(u)
    assert abs(s.coefficient(1)[0] - 1.0) < 1e-14
    assert abs(s.coefficient(-2)[0] - 0.5) < 1e-14
    assert np.all(s.coefficient(7) == 0) or abs(s.coefficient(7)[0]) < 1e-14
    # out-of-range lookups return zero rather than wrapping
    assert np.all(s.coefficient(200) == 0)


def test_roundtrip_matches_direct_dft():
    rng = np.random.default_rng(0)
    vals = rng.standard_normal((32, 2)) + 1j * rng.standard_normal((32, 2))
    u = CircleFunction(vals)
    s = fourier_transform(u)
    direct = dft_direct(vals)
    for j in range(-16, 16):
        assert np.max(np.abs(s.coefficient(j) - direct[j])) < 1e-12
    back = inverse_transform(s)
    assert np.max(np.abs(back.samples - vals)) < 1e-12


def test_parseval():
    rng = np.random.default_rng(1)
    vals = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    u = CircleFunction(vals)
    s = fourier_transform(u)
    assert abs(s.mass() - np.mean(np.abs(vals) ** 2)) < 1e-12


def test_winding_monomials():
    for m in range(-8, 9):
        u = CircleFunction.from_callable(lambda z, m=m: z**m if m else z**0, 512)
        assert winding_number(u) == m


def test_winding_blaschke_factor_and_shifts():
    # zeta - a with |a| < 1 winds once; 1 - conj(a) zeta does not wind
    a = 0.6 * np.exp(0.7j)
    u = CircleFunction.from_callable(lambda z: z - a, 256)
    assert winding_number(u) == 1
    v = CircleFunction.from_callable(lambda z: 1 - np.conj(a) * z, 256)
    assert winding_number(v) == 0


def test_winding_guards():
    u = CircleFunction.from_callable(lambda z: z**3, 8)  # increment 3*pi/4
    with pytest.raises(AliasRisk):
        winding_number(u)
    v = CircleFunction.from_callable(lambda z: z - 1.0, 64)  # vanishes at 1
    with pytest.raises(NearZero):
        winding_number(v)
    with pytest.raises(InputError):
        winding_number(CircleFunction(np.ones((16, 2))))


def test_real_completion_examples():
    # g = e^{-i theta}  ->  h = -2 cos theta
    g = CircleFunction.from_callable(lambda z: 1.0 / z, 64)
    h = real_completion(g)
    assert np.max(np.abs(h.samples[:, 0] - (-2.0 * np.cos(h.thetas)))) < 1e-12
    # g = i sin theta = (z - 1/z)/2  ->  h = cos theta, so g + h = e^{i theta}
    g2 = CircleFunction.from_callable(lambda z: (z - 1.0 / z) / 2.0, 64)
    h2 = real_completion(g2)
    assert np.max(np.abs(h2.samples[:, 0] - np.cos(h2.thetas))) < 1e-12
    lift = holomorphic_extension(
        CircleFunction(g2.samples + h2.samples), tol=1e-10
    )
    coeffs = lift.numerators[0]
    assert np.max(np.abs(coeffs - np.array([0.0, 1.0]))) < 1e-12


def test_real_completion_cancels_generic_band_limited():
    rng = np.random.default_rng(2)
    N = 128
    # random band-limited g with |j| < N/4 so no aliasing obstruction
    coef = np.zeros(N, dtype=complex)
    idx = np.arange(N) - N // 2
    band = np.abs(idx) < N // 4
    coef[band] = rng.standard_normal(band.sum()) + 1j * rng.standard_normal(
        band.sum()
    )
    g = inverse_transform(FourierSpectrum(coef[:, None]))
    h = real_completion(g)
    assert np.max(np.abs(h.samples.imag)) < 1e-12  # h is real
    s = fourier_transform(CircleFunction(g.samples + h.samples))
    assert np.sqrt(s.negative_mass()) < 1e-12
    # zero mode untouched
    assert np.max(np.abs(fourier_transform(h).coefficient(0))) < 1e-12


def test_negative_tail_residual_split():
    # zeta + 1/zeta puts half the mass at j = -1
    u = CircleFunction.from_callable(lambda z: z + 1.0 / z, 32)
    assert abs(negative_tail_residual(u) - 1.0 / np.sqrt(2.0)) < 1e-12
    with pytest.raises(ZeroFunction):
        negative_tail_residual(CircleFunction(np.zeros(16)))


def test_holomorphic_extension_recovers_polynomial():
    coeffs = np.array([0.2 - 0.1j, 0.0, 1.5, -0.3j])
    u = CircleFunction.from_callable(
        lambda z: np.polynomial.polynomial.polyval(z, coeffs), 64
    )
    f = holomorphic_extension(u)
    got = f.numerators[0]
    assert got.size == 4
    assert np.max(np.abs(got - coeffs)) < 1e-12
    with pytest.raises(NotHolomorphic):
        holomorphic_extension(CircleFunction.from_callable(lambda z: 1.0 / z, 64))

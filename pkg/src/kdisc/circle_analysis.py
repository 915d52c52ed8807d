"""Sampled function spaces on the unit circle and their Fourier analysis.

Functions on the circle are stored as uniform samples u(theta_m) with
theta_m = 2*pi*m/N and N a power of two.  The discrete transform uses the
analyst's normalization

    c_j = (1/N) * sum_m u(theta_m) exp(-i j theta_m),

with the frequency index j running over [-N/2, N/2).  With this convention
the coefficient of exp(i j theta) in a band-limited function is recovered
exactly, and Parseval reads (1/N) sum |u_m|^2 = sum |c_j|^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AliasRisk, InputError, NearZero, NotHolomorphic, ZeroFunction

_MIN_GRID = 8


def _as_grid(values, name):
    arr = np.asarray(values, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise InputError(f"{name} must have shape (N,) or (N, n), got {arr.shape}")
    N = arr.shape[0]
    if N < _MIN_GRID or (N & (N - 1)) != 0:
        raise InputError(f"grid size must be a power of two >= {_MIN_GRID}, got {N}")
    if arr.shape[1] < 1:
        raise InputError(f"{name} needs at least one component")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite entries")
    return arr


@dataclass(frozen=True)
class CircleFunction:
    """Uniform samples of a map b(Delta) -> C^n.

    Attributes
    ----------
    samples : ndarray, shape (N, n), complex
        Row m holds the value at theta_m = 2*pi*m/N.
    """

    samples: np.ndarray

    def __post_init__(self):
        arr = _as_grid(self.samples, "samples")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def grid_size(self) -> int:
        return self.samples.shape[0]

    @property
    def dim(self) -> int:
        return self.samples.shape[1]

    @property
    def thetas(self) -> np.ndarray:
        N = self.grid_size
        return 2.0 * np.pi * np.arange(N) / N

    def component(self, i: int) -> np.ndarray:
        return self.samples[:, i]

    @classmethod
    def from_callable(cls, fn, grid_size: int = 512) -> "CircleFunction":
        """Sample ``fn`` at the N-th roots of unity.

        ``fn`` receives the complex boundary points exp(i theta_m) as a
        1-d array and must return shape (N,) or (N, n).
        """
        theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
        vals = np.asarray(fn(np.exp(1j * theta)), dtype=complex)
        return cls(vals)


@dataclass(frozen=True)
class FourierSpectrum:
    """Centered Fourier data of a CircleFunction.

    Row i of ``coefficients`` holds c_j for j = i - N//2, so the index
    range is [-N/2, N/2).
    """

    coefficients: np.ndarray

    def __post_init__(self):
        arr = _as_grid(self.coefficients, "coefficients")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def grid_size(self) -> int:
        return self.coefficients.shape[0]

    @property
    def dim(self) -> int:
        return self.coefficients.shape[1]

    @property
    def indices(self) -> np.ndarray:
        N = self.grid_size
        return np.arange(N) - N // 2

    def coefficient(self, j: int) -> np.ndarray:
        """The vector coefficient c_j, zero outside the stored range."""
        N = self.grid_size
        if j < -N // 2 or j >= N // 2:
            return np.zeros(self.dim, dtype=complex)
        return self.coefficients[j + N // 2]

    def mass(self) -> float:
        """Total spectral mass sum_j ||c_j||^2."""
        return float(np.sum(np.abs(self.coefficients) ** 2))

    def negative_mass(self) -> float:
        """Mass carried by strictly negative frequencies."""
        N = self.grid_size
        return float(np.sum(np.abs(self.coefficients[: N // 2]) ** 2))


def fourier_transform(u: CircleFunction) -> FourierSpectrum:
    """Centered DFT of a circle function, component by component."""
    N = u.grid_size
    raw = np.fft.fft(u.samples, axis=0) / N
    return FourierSpectrum(np.fft.fftshift(raw, axes=0))


def inverse_transform(s: FourierSpectrum) -> CircleFunction:
    """Inverse of :func:`fourier_transform`; exact up to rounding."""
    N = s.grid_size
    raw = np.fft.ifftshift(s.coefficients, axes=0)
    return CircleFunction(np.fft.ifft(raw, axis=0) * N)


def winding_number(u: CircleFunction, min_modulus: float = 1e-9) -> int:
    """Winding of a scalar nonvanishing loop about the origin.

    Accumulates the principal argument of consecutive sample ratios.  Each
    increment must stay below pi/2 in absolute value, otherwise the sampling
    cannot distinguish the true branch and ``AliasRisk`` is raised.
    """
    if u.dim != 1:
        raise InputError("winding_number expects a scalar circle function")
    vals = u.component(0)
    moduli = np.abs(vals)
    if np.min(moduli) < min_modulus:
        raise NearZero(
            f"min |u| = {np.min(moduli):.3e} below threshold {min_modulus:.1e}"
        )
    ratios = np.roll(vals, -1) / vals
    increments = np.angle(ratios)
    worst = float(np.max(np.abs(increments)))
    if worst > np.pi / 2:
        raise AliasRisk(
            f"max phase increment {worst:.3f} rad exceeds pi/2; refine the grid"
        )
    total = float(np.sum(increments))
    return int(round(total / (2.0 * np.pi)))


def real_completion(g: CircleFunction) -> CircleFunction:
    """Real function h with g + h extending holomorphically to the disc.

    Works on the Fourier side: writing g = sum g_j e^{ij theta}, the choice

        h_j = -g_j            for j < 0,
        h_0 = 0,
        h_j = -conj(g_{-j})   for j > 0,

    is Hermitian (hence real on the circle) and cancels every negative
    frequency of g + h.  The zero mode of h is gauged to zero, so the mean
    of g is untouched.  The Nyquist bin j = -N/2 has no positive partner on
    the grid; its contribution -g_{-N/2} e^{-i N/2 theta} is kept and only
    its real part survives the final projection, which is the correct
    aliased representative.
    """
    if g.dim != 1:
        raise InputError("real_completion expects a scalar circle function")
    spec = fourier_transform(g)
    N = g.grid_size
    half = N // 2
    coef = spec.coefficients[:, 0]
    h = np.zeros(N, dtype=complex)
    # strictly negative frequencies: kill them outright
    h[:half] = -coef[:half]
    # positive partners enforce h real; indices 1..N/2-1
    h[half + 1 :] = -np.conj(coef[1:half][::-1])
    hs = inverse_transform(FourierSpectrum(h[:, None]))
    return CircleFunction(hs.samples.real.astype(complex))


def negative_tail_residual(u: CircleFunction) -> float:
    """Relative mass of the negative frequencies of u.

    Returns sqrt( sum_{j<0} ||c_j||^2 / sum_j ||c_j||^2 ), the natural
    scale-invariant distance of u from the boundary values of a holomorphic
    map.  Raises ``ZeroFunction`` on identically zero input.
    """
    spec = fourier_transform(u)
    total = spec.mass()
    if total <= 0.0:
        raise ZeroFunction("negative_tail_residual of the zero function")
    return float(np.sqrt(spec.negative_mass() / total))


def holomorphic_extension(u: CircleFunction, tol: float = 1e-10):
    """Polynomial disc interpolating the nonnegative frequencies of u.

    Requires negative_tail_residual(u) <= tol; the returned disc has one
    polynomial component per component of u, with trailing coefficients
    below 1e-13 of the largest dropped.
    """
    from .discs import AnalyticDisc

    residual = negative_tail_residual(u)
    if residual > tol:
        raise NotHolomorphic(residual, tol)
    spec = fourier_transform(u)
    N = u.grid_size
    coeffs = spec.coefficients[N // 2 :]  # rows j = 0 .. N/2 - 1
    scale = float(np.max(np.abs(coeffs)))
    keep = coeffs.shape[0]
    row_norm = np.max(np.abs(coeffs), axis=1)
    while keep > 1 and row_norm[keep - 1] <= 1e-13 * scale:
        keep -= 1
    numerators = tuple(coeffs[:keep, i].copy() for i in range(u.dim))
    return AnalyticDisc.polynomial(numerators)

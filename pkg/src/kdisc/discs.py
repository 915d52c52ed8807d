"""Rational analytic discs: polynomial and Blaschke data with exact algebra.

An analytic disc is stored componentwise as a quotient of polynomials in
ascending coefficient order.  Denominators are required to be zero-free on
the closed unit disc, so every disc here is holomorphic on a neighbourhood
of the closure and boundary traces are honest function values, not limits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .circle_analysis import CircleFunction, winding_number
from .errors import (
    AliasRisk,
    BadLambda,
    InputError,
    InvalidDisc,
    ModulusNotLessThanOne,
    NotCentered,
    NotSelfMap,
    OutsideClosedDisc,
)

_DEN_FLOOR = 1e-9


def _clean_poly(c, name):
    arr = np.asarray(c, dtype=complex).reshape(-1)
    if arr.size == 0:
        raise InputError(f"{name} must have at least one coefficient")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite coefficients")
    arr.setflags(write=False)
    return arr


def _check_denominator(den):
    if den.size == 1:
        if abs(den[0]) < _DEN_FLOOR:
            raise InvalidDisc("constant denominator too close to zero")
        return
    deg = den.size - 1
    N = 64
    while N < 8 * deg:
        N *= 2
    # roots close to the circle steepen the phase; refine until the winding
    # count is alias-free or the root is indistinguishable from a zero on b(Delta)
    while True:
        theta = 2.0 * np.pi * np.arange(N) / N
        vals = P.polyval(np.exp(1j * theta), den)
        if np.min(np.abs(vals)) < _DEN_FLOOR:
            raise InvalidDisc("denominator nearly vanishes on the unit circle")
        try:
            w = winding_number(CircleFunction(vals))
        except AliasRisk:
            if N >= 1 << 16:
                raise InvalidDisc(
                    "denominator winding undecidable; zeros crowd the unit circle"
                ) from None
            N *= 2
            continue
        break
    if w != 0:
        raise InvalidDisc("denominator has zeros inside the unit disc")


@dataclass(frozen=True)
class AnalyticDisc:
    """Map of the closed unit disc into C^n with rational components.

    Attributes
    ----------
    numerators, denominators : tuple of ndarray
        Component i equals numerators[i](zeta) / denominators[i](zeta),
        coefficients in ascending powers of zeta.
    """

    numerators: tuple
    denominators: tuple

    def __post_init__(self):
        nums = tuple(_clean_poly(c, f"numerator[{i}]") for i, c in enumerate(self.numerators))
        dens = tuple(_clean_poly(c, f"denominator[{i}]") for i, c in enumerate(self.denominators))
        if len(nums) == 0:
            raise InputError("disc needs at least one component")
        if len(nums) != len(dens):
            raise InputError("numerator and denominator counts differ")
        for den in dens:
            _check_denominator(den)
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "denominators", dens)

    @property
    def dim(self) -> int:
        return len(self.numerators)

    @property
    def degree(self) -> int:
        return max(
            max(num.size, den.size) - 1
            for num, den in zip(self.numerators, self.denominators)
        )

    @classmethod
    def polynomial(cls, coeffs) -> "AnalyticDisc":
        """Polynomial disc from per-component ascending coefficient arrays.

        A single 1-d array yields a scalar disc.
        """
        if np.ndim(coeffs) == 1:
            coeffs = (coeffs,)
        nums = tuple(np.asarray(c, dtype=complex) for c in coeffs)
        ones = tuple(np.ones(1, dtype=complex) for _ in nums)
        return cls(nums, ones)

    @classmethod
    def constant(cls, p) -> "AnalyticDisc":
        p = np.asarray(p, dtype=complex).reshape(-1)
        return cls.polynomial(tuple(np.array([z]) for z in p))

    def __call__(self, z):
        return self.eval(z)

    def eval(self, z) -> np.ndarray:
        """Evaluate at points of the closed disc; output shape z.shape + (n,)."""
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) > 1.0 + 1e-12):
            raise OutsideClosedDisc("evaluation point outside the closed unit disc")
        comps = [
            P.polyval(z, num) / P.polyval(z, den)
            for num, den in zip(self.numerators, self.denominators)
        ]
        return np.stack(comps, axis=-1)

    def taylor_coefficients(self, order: int) -> np.ndarray:
        """Coefficients of zeta^0..zeta^order, shape (order+1, n).

        Each component expands its quotient by exact series division.
        """
        if order < 0:
            raise InputError("order must be nonnegative")
        out = np.zeros((order + 1, self.dim), dtype=complex)
        for i, (num, den) in enumerate(zip(self.numerators, self.denominators)):
            t = np.zeros(order + 1, dtype=complex)
            for m in range(order + 1):
                val = num[m] if m < num.size else 0.0
                for s in range(1, min(m, den.size - 1) + 1):
                    val -= den[s] * t[m - s]
                t[m] = val / den[0]
            out[:, i] = t
        return out


def boundary_trace(f: AnalyticDisc, grid_size: int = 512) -> CircleFunction:
    """Sample the disc on the unit circle."""
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    return CircleFunction(f.eval(np.exp(1j * theta)))


def blaschke_product(zeros) -> AnalyticDisc:
    """Finite Blaschke product with the given zeros inside the disc.

    Returns the scalar disc prod_j (zeta - a_j) / (1 - conj(a_j) zeta),
    which has unit modulus on the circle.
    """
    a = np.asarray(zeros, dtype=complex).reshape(-1)
    if a.size == 0:
        raise InputError("a Blaschke product needs at least one zero")
    if np.any(np.abs(a) >= 1.0):
        raise ModulusNotLessThanOne("Blaschke zeros must satisfy |a| < 1")
    num = np.ones(1, dtype=complex)
    den = np.ones(1, dtype=complex)
    for aj in a:
        num = np.convolve(num, np.array([-aj, 1.0], dtype=complex))
        den = np.convolve(den, np.array([1.0, -np.conj(aj)], dtype=complex))
    return AnalyticDisc((num,), (den,))


def schwarz_equality_disc(a: complex, theta: float) -> AnalyticDisc:
    """The self-map zeta * (a + e^{i theta} zeta) / (1 + conj(a) e^{i theta} zeta).

    This is zeta times a disc automorphism, the general equality case of the
    second-order Schwarz bound: f'(0) = a and |f''(0)| = 2 (1 - |a|^2).
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise ModulusNotLessThanOne("Schwarz parameter must satisfy |a| < 1")
    w = np.exp(1j * float(theta))
    num = np.array([0.0, a, w], dtype=complex)
    den = np.array([1.0, np.conj(a) * w], dtype=complex)
    return AnalyticDisc((num,), (den,))


def reparametrize(f: AnalyticDisc, lam: float) -> AnalyticDisc:
    """Precompose with zeta -> lam * zeta for lam in (0, 1]."""
    lam = float(lam)
    if not 0.0 < lam <= 1.0:
        raise BadLambda(f"lam = {lam} outside (0, 1]")
    return _precompose_scale(f, lam)


def rotate(f: AnalyticDisc, alpha: float) -> AnalyticDisc:
    """Precompose with the rotation zeta -> e^{i alpha} zeta."""
    return _precompose_scale(f, np.exp(1j * float(alpha)))


def _precompose_scale(f: AnalyticDisc, c) -> AnalyticDisc:
    def scale(poly):
        return poly * np.asarray(c, dtype=complex) ** np.arange(poly.size)

    return AnalyticDisc(
        tuple(scale(num) for num in f.numerators),
        tuple(scale(den) for den in f.denominators),
    )


def schwarz_bound_check(f: AnalyticDisc, grid_size: int = 512) -> float:
    """Slack 2 (1 - |f'(0)|^2) - |f''(0)| of the second-order Schwarz bound.

    Requires a scalar self-map of the disc fixing the origin; the slack is
    nonnegative for every such map and zero exactly on the family produced
    by :func:`schwarz_equality_disc`.
    """
    if f.dim != 1:
        raise InputError("schwarz_bound_check expects a scalar disc")
    t = f.taylor_coefficients(2)[:, 0]
    if abs(t[0]) > 1e-12:
        raise NotCentered(f"|f(0)| = {abs(t[0]):.3e} is not zero")
    sup = float(np.max(np.abs(boundary_trace(f, grid_size).samples)))
    if sup > 1.0 + 1e-9:
        raise NotSelfMap(f"boundary modulus reaches {sup:.12f}")
    d1, d2 = t[1], 2.0 * t[2]
    return float(2.0 * (1.0 - abs(d1) ** 2) - abs(d2))


# ---------------------------------------------------------------------------
# JSON codec


def _enc_poly(c):
    return [[float(z.real), float(z.imag)] for z in c]


def _dec_poly(pairs, where):
    try:
        return np.array([complex(re, im) for re, im in pairs], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad coefficient list at {where}: {exc}") from None


def disc_to_dict(f: AnalyticDisc) -> dict:
    return {
        "numerators": [_enc_poly(c) for c in f.numerators],
        "denominators": [_enc_poly(c) for c in f.denominators],
    }


def disc_from_dict(data: dict) -> AnalyticDisc:
    for key in ("numerators", "denominators"):
        if key not in data:
            raise InputError(f"disc JSON needs field '{key}'")
    nums = tuple(
        _dec_poly(c, f"numerators[{i}]") for i, c in enumerate(data["numerators"])
    )
    dens = tuple(
        _dec_poly(c, f"denominators[{i}]") for i, c in enumerate(data["denominators"])
    )
    return AnalyticDisc(nums, dens)

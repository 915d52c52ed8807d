"""Bounded domains in C^n described by smooth defining functions.

A domain is the sublevel set {rho < 0}.  Gradients follow the Wirtinger
convention drho_j = (1/2)(d/dx_j - i d/dy_j) rho, so the derivative of rho
along a real direction d in C^n is 2 Re sum_j drho_j(z) d_j.  Both rho and
drho accept batched input of shape (..., n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circle_analysis import CircleFunction
from .errors import (
    DegenerateRay,
    InputError,
    NonPositiveCoefficient,
    VanishingGradient,
)

_FD_STEP = 1e-6
_BISECTION_DEFECT = 1e-10


@dataclass(frozen=True)
class Domain:
    """Defining-function presentation of a bounded domain.

    Attributes
    ----------
    dim : int
        Complex dimension n.
    rho : callable
        Defining function, (..., n) complex -> (...) real.
    drho : callable
        Wirtinger gradient of rho, (..., n) complex -> (..., n) complex.
    bounding_radius : float
        Radius R with {rho < 0} contained in the ball |z| < R.
    interior_point : ndarray
        A point with rho < 0, anchor for ray probes.
    claims_psh, claims_convex, claims_strictly_convex : bool
        Declared regularity of rho; claims are probed, never trusted.
    """

    dim: int
    rho: object
    drho: object
    bounding_radius: float
    interior_point: np.ndarray
    claims_psh: bool = False
    claims_convex: bool = False
    claims_strictly_convex: bool = False
    name: str = "custom"


def _fd_gradient(rho, n):
    def drho(z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        h = _FD_STEP
        for j in range(n):
            e = np.zeros(n, dtype=complex)
            e[j] = 1.0
            dx = (rho(z + h * e) - rho(z - h * e)) / (2.0 * h)
            dy = (rho(z + 1j * h * e) - rho(z - 1j * h * e)) / (2.0 * h)
            out[..., j] = 0.5 * (dx - 1j * dy)
        return out

    return drho


def make_domain(
    dim,
    rho,
    drho=None,
    bounding_radius=None,
    interior_point=None,
    claims_psh=False,
    claims_convex=False,
    claims_strictly_convex=False,
    name="custom",
    check_points=100,
    seed=0,
) -> Domain:
    """Build and sanity-check a domain.

    The interior point must satisfy rho < 0, and a supplied gradient is
    compared against central differences of rho at seeded random probe
    points (1e-5 relative).  Without ``drho`` a finite-difference gradient
    with step 1e-6 is attached.
    """
    dim = int(dim)
    if dim < 1:
        raise InputError("domain dimension must be at least 1")
    if bounding_radius is None or not bounding_radius > 0:
        raise InputError("bounding_radius must be a positive float")
    interior = (
        np.zeros(dim, dtype=complex)
        if interior_point is None
        else np.asarray(interior_point, dtype=complex).reshape(-1)
    )
    if interior.size != dim:
        raise InputError("interior_point has the wrong dimension")
    val = float(np.asarray(rho(interior)))
    if not val < 0:
        raise InputError(f"rho(interior_point) = {val:.3e} is not negative")
    if drho is None:
        drho = _fd_gradient(rho, dim)
    else:
        rng = np.random.default_rng(seed)
        pts = interior + bounding_radius * 0.5 * (
            rng.standard_normal((check_points, dim))
            + 1j * rng.standard_normal((check_points, dim))
        ) / np.sqrt(2.0 * dim)
        dirs = rng.standard_normal((check_points, dim)) + 1j * rng.standard_normal(
            (check_points, dim)
        )
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        h = _FD_STEP * max(1.0, bounding_radius)
        slope_fd = (rho(pts + h * dirs) - rho(pts - h * dirs)) / (2.0 * h)
        slope_an = 2.0 * np.real(np.sum(drho(pts) * dirs, axis=1))
        scale = np.maximum(1.0, np.abs(slope_fd))
        worst = float(np.max(np.abs(slope_fd - slope_an) / scale))
        if worst > 1e-5:
            raise InputError(
                f"gradient disagrees with finite differences of rho ({worst:.2e})"
            )
    return Domain(
        dim=dim,
        rho=rho,
        drho=drho,
        bounding_radius=float(bounding_radius),
        interior_point=interior,
        claims_psh=claims_psh,
        claims_convex=claims_convex,
        claims_strictly_convex=claims_strictly_convex,
        name=name,
    )


# ---------------------------------------------------------------------------
# Standard models


def make_ball(n: int = 1) -> Domain:
    """Unit ball {sum |z_j|^2 < 1}."""

    def rho(z):
        z = np.asarray(z, dtype=complex)
        return np.sum(np.abs(z) ** 2, axis=-1) - 1.0

    def drho(z):
        return np.conj(np.asarray(z, dtype=complex))

    return make_domain(
        n,
        rho,
        drho,
        bounding_radius=1.0 + 1e-9,
        claims_psh=True,
        claims_convex=True,
        claims_strictly_convex=True,
        name="disc" if n == 1 else f"ball{n}",
    )


def make_unit_disc() -> Domain:
    """The unit disc in C, rho(z) = |z|^2 - 1."""
    return make_ball(1)


def make_ellipsoid(coeffs) -> Domain:
    """Hermitian ellipsoid {sum a_j |z_j|^2 < 1} with a_j > 0."""
    a = np.asarray(coeffs, dtype=float).reshape(-1)
    if a.size < 1:
        raise InputError("ellipsoid needs at least one coefficient")
    if np.any(a <= 0):
        raise NonPositiveCoefficient("ellipsoid coefficients must be positive")

    def rho(z):
        z = np.asarray(z, dtype=complex)
        return np.sum(a * np.abs(z) ** 2, axis=-1) - 1.0

    def drho(z):
        return a * np.conj(np.asarray(z, dtype=complex))

    return make_domain(
        a.size,
        rho,
        drho,
        bounding_radius=float(1.0 / np.sqrt(np.min(a))) + 1e-9,
        claims_psh=True,
        claims_convex=True,
        claims_strictly_convex=True,
        name="ellipsoid",
    )


def make_complex_ellipsoid(
    exponents, coeffs=None, claims_strictly_convex=None
) -> Domain:
    """Domain {sum c_j |z_j|^(2 m_j) < 1} with exponents m_j >= 1.

    Weakly pseudoconvex when some m_j > 1: the boundary carries flat
    complex-tangential directions at the coordinate axes.  Strict convexity
    is claimed only for the Hermitian case unless explicitly overridden.
    """
    m = np.asarray(exponents, dtype=float).reshape(-1)
    if m.size < 1 or np.any(m < 1):
        raise InputError("complex ellipsoid exponents must be >= 1")
    c = (
        np.ones(m.size, dtype=float)
        if coeffs is None
        else np.asarray(coeffs, dtype=float).reshape(-1)
    )
    if c.size != m.size:
        raise InputError("coefficient and exponent counts differ")
    if np.any(c <= 0):
        raise NonPositiveCoefficient("complex ellipsoid coefficients must be positive")

    def rho(z):
        z = np.asarray(z, dtype=complex)
        return np.sum(c * np.abs(z) ** (2.0 * m), axis=-1) - 1.0

    def drho(z):
        z = np.asarray(z, dtype=complex)
        return c * m * np.abs(z) ** (2.0 * (m - 1.0)) * np.conj(z)

    strict = bool(np.all(m == 1.0)) if claims_strictly_convex is None else bool(
        claims_strictly_convex
    )
    radius = float(np.max((1.0 / c) ** (1.0 / (2.0 * m)))) + 1e-9
    return make_domain(
        m.size,
        rho,
        drho,
        bounding_radius=radius,
        claims_psh=True,
        claims_convex=True,
        claims_strictly_convex=strict,
        name="complex_ellipsoid",
    )


def domain_from_dict(data: dict) -> Domain:
    """Decode {"kind": ..., "coeffs": ..., "exponents": ...} JSON."""
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("domain JSON needs a 'kind' field")
    kind = data["kind"]
    if kind == "disc":
        return make_unit_disc()
    if kind == "ball":
        if "n" in data:
            return make_ball(int(data["n"]))
        if "coeffs" in data:
            return make_ball(len(data["coeffs"]))
        raise InputError("ball domain needs field 'n' or 'coeffs'")
    if kind == "ellipsoid":
        if "coeffs" not in data:
            raise InputError("ellipsoid domain needs field 'coeffs'")
        return make_ellipsoid(data["coeffs"])
    if kind == "complex_ellipsoid":
        if "exponents" not in data:
            raise InputError("complex_ellipsoid domain needs field 'exponents'")
        return make_complex_ellipsoid(data["exponents"], data.get("coeffs"))
    raise InputError(f"unknown domain kind '{kind}'")


# ---------------------------------------------------------------------------
# Membership and probes


def contains(domain: Domain, z, margin: float = 0.0):
    """Whether rho(z) <= -margin, batched over leading axes of z."""
    z = np.asarray(z, dtype=complex)
    vals = np.asarray(domain.rho(z))
    return vals <= -float(margin)


def boundary_distance_profile(
    domain: Domain, f, grid_size: int = 512
) -> CircleFunction:
    """rho along the boundary trace of a disc, as a scalar circle function."""
    from .discs import boundary_trace

    tr = boundary_trace(f, grid_size)
    vals = np.asarray(domain.rho(tr.samples), dtype=complex)
    return CircleFunction(vals)


def _boundary_crossing(domain, direction, iters=80):
    x0 = domain.interior_point
    t_hi = float(np.linalg.norm(x0)) + domain.bounding_radius + 1.0
    if float(domain.rho(x0 + t_hi * direction)) < 0.0:
        raise DegenerateRay("ray never left the domain; bounding_radius is wrong")
    t_lo = 0.0
    for _ in range(iters):
        t = 0.5 * (t_lo + t_hi)
        if float(domain.rho(x0 + t * direction)) < 0.0:
            t_lo = t
        else:
            t_hi = t
    b = x0 + 0.5 * (t_lo + t_hi) * direction
    defect = abs(float(domain.rho(b)))
    if defect > _BISECTION_DEFECT:
        raise DegenerateRay(
            f"bisection stalled at |rho| = {defect:.3e} along a probe ray"
        )
    return b, defect


def convexity_probe(
    domain: Domain,
    trials: int = 64,
    seed: int = 0,
    step: float = 5e-3,
    threshold: float = 1e-8,
) -> dict:
    """Empirical strict-convexity check along the boundary.

    Shoots rays from the interior point along every coordinate direction
    (real and imaginary, both signs) plus ``trials`` random directions,
    bisects rho to zero along each ray, and evaluates raw second
    differences of rho along real tangent chords of half-width ``step``.
    A second difference below ``threshold`` flags strict convexity as
    violated; compare ``claim_contradicted`` with the declared flag.
    """
    n = domain.dim
    rng = np.random.default_rng(seed)
    dirs = []
    for j in range(n):
        e = np.zeros(n, dtype=complex)
        e[j] = 1.0
        dirs += [e, -e, 1j * e, -1j * e]
    for _ in range(trials):
        d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        dirs.append(d / np.linalg.norm(d))

    min_dd = np.inf
    worst = None
    max_defect = 0.0
    for d in dirs:
        b, defect = _boundary_crossing(domain, d)
        max_defect = max(max_defect, defect)
        g = np.asarray(domain.drho(b), dtype=complex).reshape(-1)
        gn = float(np.linalg.norm(g))
        if gn < 1e-12:
            raise VanishingGradient("defining gradient vanishes at a boundary point")
        # unit normal of the real hypersurface: the real gradient is 2 conj(drho)
        normal = np.conj(g) / gn
        tangents = []
        for j in range(n):
            for unit in (1.0, 1j):
                e = np.zeros(n, dtype=complex)
                e[j] = unit
                t = e - np.real(np.vdot(normal, e)) * normal
                tn = float(np.linalg.norm(t))
                if tn > 0.2:
                    tangents.append(t / tn)
        for _ in range(2):
            r = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            t = r - np.real(np.vdot(normal, r)) * normal
            tn = float(np.linalg.norm(t))
            if tn > 1e-8:
                tangents.append(t / tn)
        for t in tangents:
            dd = float(
                domain.rho(b + step * t)
                - 2.0 * domain.rho(b)
                + domain.rho(b - step * t)
            )
            if dd < min_dd:
                min_dd = dd
                worst = (b, t)
    violated = bool(min_dd < threshold)
    report = {
        "min_second_difference": float(min_dd),
        "step": float(step),
        "threshold": float(threshold),
        "rays": len(dirs),
        "max_bisection_defect": float(max_defect),
        "strict_violation": violated,
        "claims_strictly_convex": domain.claims_strictly_convex,
        "claim_contradicted": bool(violated and domain.claims_strictly_convex),
    }
    if worst is not None:
        report["worst_point"] = [[float(z.real), float(z.imag)] for z in worst[0]]
        report["worst_tangent"] = [[float(z.real), float(z.imag)] for z in worst[1]]
    return report

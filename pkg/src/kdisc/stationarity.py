"""Stationarity of boundary-attached discs and its certificates.

A disc f with f(b Delta) in b Omega is k-stationary when some positive
weight c on the circle makes zeta^k c(zeta) drho(f(zeta)) the boundary
trace of a holomorphic map, the lift.  Two certification routes live here:
the exact winding/log construction for unimodular scalar discs, and a
descent search over weights c = e^h with h a real trigonometric polynomial.
Certificates feed the pairing sum of the local extremality theory and the
Euler-Lagrange residual check applied to solver witnesses.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace

import numpy as np
from scipy.optimize import minimize

from .circle_analysis import (
    CircleFunction,
    fourier_transform,
    holomorphic_extension,
    negative_tail_residual,
    real_completion,
    winding_number,
)
from .discs import AnalyticDisc, boundary_trace, disc_to_dict
from .domains import Domain, boundary_distance_profile
from .errors import (
    AliasRisk,
    AllZero,
    BadLambda,
    InputError,
    NearZero,
    NonzeroWinding,
    NotCertifiedStationary,
    NotOnBoundary,
    ProbeFailed,
    ResidualAboveTolerance,
    VanishingGradient,
    ZeroJet,
)
from .jets import first_nonzero_index, jet_of_disc, jet_scale
from .kobayashi import MetricResult, _assemble_disc, _boundary_powers, _TailFeasibility


@dataclass(frozen=True)
class StationarityConfig:
    """Tolerances and search sizes for certification and probes.

    stat_tol governs exact rational inputs; el_tol is the loose tolerance
    for solver-produced witnesses.  trig_degree of None picks twice the
    disc degree (at least 24).
    """

    grid_size: int = 512
    trig_degree: int | None = None
    stat_tol: float = 1e-8
    boundary_tol: float = 1e-7
    gradient_floor: float = 1e-10
    maxiter: int = 1000
    restarts: int = 2
    el_tol: float = 1e-2
    properness_tol: float = 5e-2
    properness_fraction: float = 0.95
    extremality_tol: float = 1e-3
    perturbation_radius: float = 0.1
    probe_degree: int = 12
    seed: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class StationarityCertificate:
    """Positive weight c and holomorphic lift certifying k-stationarity.

    The residual is the relative negative-frequency mass left in
    zeta^k c drho(f); the recorded tolerance is the one the certificate
    was required to meet.  Winding is the scalar symbol's index when that
    is defined (None for vector targets).
    """

    order: int
    c: CircleFunction
    lift: AnalyticDisc
    residual: float
    tolerance: float
    boundary_defect: float
    winding: int | None
    method: str

    def __post_init__(self):
        if float(np.min(self.c.samples.real)) <= 0.0:
            raise InputError("certificate weight must be strictly positive")

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "method": self.method,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "boundary_defect": self.boundary_defect,
            "winding": self.winding,
            "c": [float(v) for v in self.c.samples.real[:, 0]],
            "lift": disc_to_dict(self.lift),
        }


def scalar_stationarity_exact(
    f: AnalyticDisc, k: int, grid_size: int = 512, tol: float = 1e-10
) -> StationarityCertificate:
    """Certify a unimodular scalar disc by the winding/log construction.

    On the unit disc drho(f) = conj(f) along the trace, so the symbol is
    u = zeta^k conj(f).  Zero winding admits a continuous logarithm g; the
    real completion h of g makes u e^h extend holomorphically, and the
    weight is c = e^h with mean-zero gauge on h.  Nonzero winding is an
    exact obstruction and is reported as such.
    """
    if f.dim != 1:
        raise InputError("exact certification needs a scalar disc")
    if k < 1:
        raise InputError("order must be at least 1")
    tr = boundary_trace(f, grid_size)
    vals = tr.component(0)
    defect = float(np.max(np.abs(np.abs(vals) ** 2 - 1.0)))
    if float(np.max(np.abs(np.abs(vals) - 1.0))) > 1e-10:
        raise NotOnBoundary(
            f"boundary modulus deviates from 1 by {np.max(np.abs(np.abs(vals)-1.0)):.3e}"
        )
    theta = tr.thetas
    u = CircleFunction(np.exp(1j * k * theta) * np.conj(vals))
    w = winding_number(u, min_modulus=0.5)
    if w != 0:
        raise NonzeroWinding(w)
    # continuous log along the sampled loop; winding 0 makes it periodic
    phase = np.unwrap(np.angle(u.component(0)))
    g = CircleFunction(np.log(np.abs(u.component(0))) + 1j * phase)
    h = real_completion(g)
    c = np.exp(h.samples.real[:, 0])
    target = CircleFunction(u.component(0) * c)
    residual = negative_tail_residual(target)
    if residual > tol:
        raise ResidualAboveTolerance(residual, tol)
    lift = holomorphic_extension(target, tol=residual * (1.0 + 1e-6) + 1e-15)
    return StationarityCertificate(
        order=k,
        c=CircleFunction(c.astype(complex)),
        lift=lift,
        residual=residual,
        tolerance=tol,
        boundary_defect=defect,
        winding=0,
        method="exact",
    )


class _WeightSearch:
    """Minimize the negative-tail mass of e^h W over trig coefficients of h."""

    def __init__(self, W, trig_degree):
        N = W.shape[0]
        self.W = W
        self.N = N
        self.M = trig_degree
        theta = 2.0 * np.pi * np.arange(N) / N
        m = np.arange(1, trig_degree + 1)
        self.COS = np.cos(theta[:, None] * m[None, :])
        self.SIN = np.sin(theta[:, None] * m[None, :])

    def h_of(self, x):
        # the residual is scale-invariant in e^h, so clamping only guards the
        # line search against overflow, never the minimizer
        return np.clip(self.COS @ x[: self.M] + self.SIN @ x[self.M :], -30.0, 30.0)

    def masses(self, h):
        T = np.exp(h)[:, None] * self.W
        C = np.fft.fftshift(np.fft.fft(T, axis=0), axes=0) / self.N
        num = float(np.sum(np.abs(C[: self.N // 2]) ** 2))
        den = float(np.sum(np.abs(C) ** 2))
        Cneg = np.zeros_like(C)
        Cneg[: self.N // 2] = C[: self.N // 2]
        Tneg = np.fft.ifft(np.fft.ifftshift(Cneg, axes=0), axis=0) * self.N
        return T, Tneg, num, den

    def residual(self, x):
        _, _, num, den = self.masses(self.h_of(x))
        return float(np.sqrt(num / den))

    def objective(self, x):
        # log of the residual ratio keeps gradients well scaled near zero
        h = self.h_of(x)
        T, Tneg, num, den = self.masses(h)
        tiny = 1e-250
        dnum_dh = (2.0 / self.N) * np.real(np.sum(T * np.conj(Tneg), axis=1))
        dden_dh = (2.0 / self.N) * np.sum(np.abs(T) ** 2, axis=1)
        val = np.log(num + tiny * den) - np.log(den)
        dval_dh = (dnum_dh + tiny * dden_dh) / (num + tiny * den) - dden_dh / den
        grad = np.concatenate([self.COS.T @ dval_dh, self.SIN.T @ dval_dh])
        return float(val), grad


def stationarity_search(
    domain: Domain, f: AnalyticDisc, k: int, cfg: StationarityConfig | None = None
) -> StationarityCertificate:
    """Search for a certifying weight c = e^h on a boundary-attached disc.

    h is a real trigonometric polynomial (mean-zero gauge); descent starts
    from h = 0 and is deterministic given cfg.seed.  Success means the
    relative negative-tail residual of zeta^k e^h drho(f) dropped below
    cfg.stat_tol; failure raises with the best residual, which refutes
    nothing (the search is one-sided by design).
    """
    cfg = StationarityConfig() if cfg is None else cfg
    if f.dim != domain.dim:
        raise InputError("disc and domain dimensions differ")
    if k < 1:
        raise InputError("order must be at least 1")
    N = cfg.grid_size
    tr = boundary_trace(f, N)
    prof = np.asarray(domain.rho(tr.samples), dtype=float)
    defect = float(np.max(np.abs(prof)))
    if defect > cfg.boundary_tol:
        raise NotOnBoundary(
            f"max |rho(f)| = {defect:.3e} exceeds boundary_tol {cfg.boundary_tol:.1e}"
        )
    G = np.asarray(domain.drho(tr.samples), dtype=complex)
    gn = np.sqrt(np.sum(np.abs(G) ** 2, axis=1))
    if float(np.min(gn)) < cfg.gradient_floor:
        raise VanishingGradient(
            "drho vanishes along the trace; rho is not defining there"
        )
    theta = tr.thetas
    W = np.exp(1j * k * theta)[:, None] * G

    M = cfg.trig_degree if cfg.trig_degree is not None else 2 * max(f.degree, 12)
    M = int(min(M, N // 2 - 2))
    search = _WeightSearch(W, M)
    rng = np.random.default_rng(cfg.seed)
    best_x = np.zeros(2 * M)
    best_res = search.residual(best_x)
    for attempt in range(1 + cfg.restarts):
        x0 = (
            np.zeros(2 * M)
            if attempt == 0
            else 0.1 * rng.standard_normal(2 * M)
        )
        res = minimize(
            search.objective,
            x0,
            method="L-BFGS-B",
            jac=True,
            options={"maxiter": cfg.maxiter, "ftol": 1e-18, "gtol": 1e-14},
        )
        r = search.residual(res.x)
        if r < best_res:
            best_res, best_x = r, res.x
        if best_res <= cfg.stat_tol:
            break
    if best_res > cfg.stat_tol:
        raise ResidualAboveTolerance(best_res, cfg.stat_tol)

    h = search.h_of(best_x)
    c = np.exp(h)
    target = CircleFunction(c[:, None] * W)
    winding = None
    if domain.dim == 1:
        try:
            winding = winding_number(CircleFunction(W[:, 0]), min_modulus=1e-9)
        except (NearZero, AliasRisk):
            winding = None
    lift = holomorphic_extension(target, tol=best_res * (1.0 + 1e-6) + 1e-15)
    return StationarityCertificate(
        order=k,
        c=CircleFunction(c.astype(complex)),
        lift=lift,
        residual=best_res,
        tolerance=cfg.stat_tol,
        boundary_defect=defect,
        winding=winding,
        method="search",
    )


def pairing_sum(f: AnalyticDisc, lift: AnalyticDisc, lam: float, k: int) -> float:
    """Jet pairing S(lambda) between a disc and a lift at the origin.

    S = Re sum_{j=1}^k (1 + lambda + .. + lambda^{j-1}) <t_j(f), t_{k-j}(lift)>
    with t_j Taylor coefficients and the bilinear pairing sum v_i w_i; the
    factorial normalization of the derivative form is absorbed by using
    Taylor coefficients directly.
    """
    lam = float(lam)
    if not 0.0 < lam <= 1.0:
        raise BadLambda(f"lambda = {lam} outside (0, 1]")
    if k < 1:
        raise InputError("order must be at least 1")
    if f.dim != lift.dim:
        raise InputError("disc and lift dimensions differ")
    ft = f.taylor_coefficients(k)
    lt = lift.taylor_coefficients(k)
    total = 0.0
    for j in range(1, k + 1):
        geom = float(np.sum(lam ** np.arange(j)))
        total += geom * float(np.real(np.sum(ft[j] * lt[k - j])))
    return total


def local_extremality_probe(
    domain: Domain,
    f: AnalyticDisc,
    k: int,
    cfg: StationarityConfig | None = None,
    certificate: StationarityCertificate | None = None,
) -> dict:
    """Search for jet-scaled competitors near a certified stationary disc.

    Competitors share f(0), carry the jet mu . jet(f), and keep their tail
    Taylor coefficients within cfg.perturbation_radius of f's truncated
    tail.  The probe maximizes mu by scan plus bisection and reports the
    boundary pairing Re<f - g, drho(f)> for the best competitor along with
    the pairing sums S(lambda).  A feasible competitor beyond
    1 + cfg.extremality_tol raises ProbeFailed with the witness attached.
    """
    cfg = StationarityConfig() if cfg is None else cfg
    if not domain.claims_strictly_convex:
        raise InputError("the probe requires a domain claiming strict convexity")
    if certificate is None:
        try:
            certificate = stationarity_search(domain, f, k, cfg)
        except (ResidualAboveTolerance, NotOnBoundary, NonzeroWinding) as exc:
            raise NotCertifiedStationary(str(exc)) from exc

    xi = jet_of_disc(f, k)
    try:
        first_nonzero_index(xi)
    except AllZero:
        raise ZeroJet("the disc has a vanishing k-jet at 0") from None
    p = xi.p
    n = domain.dim
    d = max(cfg.probe_degree, k)
    T = d - k
    N = cfg.grid_size
    Zfix = _boundary_powers(N, range(1, k + 1))
    Ztail = _boundary_powers(N, range(k + 1, d + 1))
    center = f.taylor_coefficients(d)[k + 1 :] if T else np.zeros((0, n), complex)
    problem = _TailFeasibility(domain, Ztail, margin=0.0, maxiter=cfg.maxiter)
    center_x = problem._pack(center)
    r = cfg.perturbation_radius
    bounds = [(v - r, v + r) for v in center_x]
    rng = np.random.default_rng(cfg.seed)
    feas_tol = 1e-9

    from math import factorial

    def feasible(mu):
        scaled = jet_scale(mu, xi)
        fixed = np.array(
            [scaled.components[j - 1] / factorial(j) for j in range(1, k + 1)]
        )
        base = p[None, :] + Zfix @ fixed
        starts = [center_x]
        for _ in range(2):
            starts.append(center_x + 0.3 * r * rng.standard_normal(center_x.size))
        ok, tail, viol = problem.solve(base, starts, bounds=bounds, feas_tol=feas_tol)
        return ok, fixed, tail, viol

    hi = 1.0 + cfg.extremality_tol
    ok_hi, fixed_hi, tail_hi, _ = feasible(hi)
    if ok_hi:
        witness = _assemble_disc(p, fixed_hi, tail_hi)
        raise ProbeFailed(hi, witness=disc_to_dict(witness))

    scan = [1.0, 0.999, 0.997, 0.993, 0.985, 0.97, 0.94, 0.88, 0.75, 0.5, 0.25]
    lo = None
    best = None
    for mu in scan:
        ok, fixed, tail, _ = feasible(mu)
        if ok:
            lo, best = mu, (fixed, tail)
            break
    report = {
        "order": k,
        "extremality_tol": cfg.extremality_tol,
        "perturbation_radius": r,
        "probe_degree": d,
        "certificate_residual": certificate.residual,
    }
    if lo is None:
        report.update(
            {
                "mu_best": None,
                "no_feasible_competitor": True,
                "confirmed": True,
                "pairing": _pairing_table(f, certificate.lift, k),
            }
        )
        return report

    width = cfg.extremality_tol / 2.0
    hi_b = hi
    while hi_b - lo > width:
        mid = 0.5 * (lo + hi_b)
        ok, fixed, tail, _ = feasible(mid)
        if ok:
            lo, best = mid, (fixed, tail)
        else:
            hi_b = mid
    mu_best = lo
    g = _assemble_disc(p, best[0], best[1])
    tr_f = boundary_trace(f, N).samples
    tr_g = g.eval(np.exp(2j * np.pi * np.arange(N) / N))
    Gf = np.asarray(domain.drho(tr_f), dtype=complex)
    pairing_vals = np.real(np.sum((tr_f - tr_g) * Gf, axis=1))
    lam_probe = min(mu_best, 1.0 - 1e-12)
    s_probe = pairing_sum(f, certificate.lift, lam_probe, k)
    report.update(
        {
            "mu_best": mu_best,
            "mu_bracket": [lo, hi_b],
            "no_feasible_competitor": False,
            "confirmed": bool(mu_best <= 1.0 + cfg.extremality_tol),
            "boundary_pairing_min": float(np.min(pairing_vals)),
            "boundary_pairing_mean": float(np.mean(pairing_vals)),
            "pairing_sign_at_mu": float((1.0 - lam_probe) * s_probe),
            "pairing": _pairing_table(f, certificate.lift, k),
            "witness": disc_to_dict(g),
        }
    )
    return report


def _pairing_table(f, lift, k, lams=(0.5, 0.7, 0.9, 0.99, 1.0)):
    out = {}
    for lam in lams:
        s = pairing_sum(f, lift, lam, k)
        out[f"{lam:g}"] = {"S": s, "product": (1.0 - lam) * s}
    return out


def euler_lagrange_check(
    domain: Domain,
    result: MetricResult,
    k: int,
    cfg: StationarityConfig | None = None,
) -> dict:
    """Necessary-condition report for a solver witness.

    Checks (a) almost-properness: the fraction of boundary nodes with
    rho(f) > -properness_tol, and (b) the stationarity residual of the
    witness at the loose tolerance el_tol.  Report-valued; failures carry
    the witness for inspection.
    """
    cfg = StationarityConfig() if cfg is None else cfg
    witness = result.extremal
    prof = boundary_distance_profile(domain, witness, cfg.grid_size)
    vals = prof.samples.real[:, 0]
    frac = float(np.mean(vals > -cfg.properness_tol))
    el_cfg = replace(cfg, stat_tol=cfg.el_tol, boundary_tol=np.inf)
    residual = None
    note = None
    try:
        cert = stationarity_search(domain, witness, k, el_cfg)
        residual = cert.residual
    except ResidualAboveTolerance as exc:
        residual = exc.best_residual
    except VanishingGradient as exc:
        note = str(exc)
    passed = (
        frac >= cfg.properness_fraction
        and residual is not None
        and residual <= cfg.el_tol
    )
    report = {
        "order": k,
        "solver_value": result.value,
        "properness_fraction": frac,
        "properness_tol": cfg.properness_tol,
        "required_fraction": cfg.properness_fraction,
        "max_rho": float(np.max(vals)),
        "min_rho": float(np.min(vals)),
        "residual": residual,
        "el_tol": cfg.el_tol,
        "pass": bool(passed),
    }
    if note is not None:
        report["note"] = note
    if not passed:
        report["witness"] = disc_to_dict(witness)
    return report


# ---------------------------------------------------------------------------
# Boundary functionals pinning base point and jet direction


def _complement_basis(v):
    """Deterministic unit basis of the Hermitian complement of v."""
    n = v.size
    w = v / np.linalg.norm(v)
    basis = []
    for i in range(n):
        e = np.zeros(n, dtype=complex)
        e[i] = 1.0
        t = e - np.vdot(w, e) * w
        for b in basis:
            t = t - np.vdot(b, t) * b
        tn = float(np.linalg.norm(t))
        if tn > 1e-8:
            basis.append(t / tn)
        if len(basis) == n - 1:
            break
    return basis


def poletsky_functionals(f, xi, grid_size: int = 512, tol: float = 1e-8) -> dict:
    """Boundary functionals whose joint vanishing pins f(0) = p and jet mu.xi.

    The table contains the base-point functionals (means of each component,
    real and imaginary), the complement functionals along directions
    bilinear-orthogonal to each xi_m, the realness functionals Im(mu_m),
    the normalization Re(mu_j0), and the power-compatibility gaps
    Re(mu_m) - Re(mu_j0)^(m/j0).  The verdict that all constraints hold is
    returned next to an independent direct check on the jet itself; the two
    agree exactly when the data is decisively on either side of tol.
    """
    try:
        j0 = first_nonzero_index(xi)
    except AllZero:
        raise ZeroJet("functional system needs a nonzero jet") from None
    k = xi.order
    n = xi.dim
    p = xi.p
    if isinstance(f, AnalyticDisc):
        u = boundary_trace(f, grid_size)
    elif isinstance(f, CircleFunction):
        u = f
    else:
        raise InputError("f must be an AnalyticDisc or CircleFunction")
    if u.dim != n:
        raise InputError("disc and jet dimensions differ")
    spec = fourier_transform(u)

    from math import factorial

    values = {}
    residuals = {}
    c0 = spec.coefficient(0)
    for h in range(1, n + 1):
        values[f"phi1_0_{h}"] = float(np.real(c0[h - 1]))
        values[f"phi2_0_{h}"] = float(np.imag(c0[h - 1]))
        residuals[f"phi1_0_{h}"] = abs(values[f"phi1_0_{h}"] - float(p[h - 1].real))
        residuals[f"phi2_0_{h}"] = abs(values[f"phi2_0_{h}"] - float(p[h - 1].imag))

    mu = {}
    for m in range(1, k + 1):
        xim = xi.components[m - 1]
        cm = spec.coefficient(m)
        if not np.any(np.abs(xim) > 0):
            # zero slot: every coordinate of the m-th coefficient must die
            for ell in range(1, n + 1):
                values[f"phi1_{m}_{ell}"] = float(np.real(cm[ell - 1]))
                values[f"phi2_{m}_{ell}"] = float(np.imag(cm[ell - 1]))
                residuals[f"phi1_{m}_{ell}"] = abs(values[f"phi1_{m}_{ell}"])
                residuals[f"phi2_{m}_{ell}"] = abs(values[f"phi2_{m}_{ell}"])
            continue
        norm2 = float(np.sum(np.abs(xim) ** 2))
        mu_m = factorial(m) * complex(np.sum(cm * np.conj(xim))) / norm2
        mu[m] = mu_m
        for ell, eta in enumerate(_complement_basis(np.conj(xim)), start=1):
            pairing = complex(np.sum(cm * eta))
            values[f"phi1_{m}_{ell}"] = float(pairing.real)
            values[f"phi2_{m}_{ell}"] = float(pairing.imag)
            residuals[f"phi1_{m}_{ell}"] = abs(pairing.real)
            residuals[f"phi2_{m}_{ell}"] = abs(pairing.imag)
        values[f"phi2_mu_{m}"] = float(mu_m.imag)
        residuals[f"phi2_mu_{m}"] = abs(mu_m.imag)
        if m == j0:
            values["phi1_j0"] = float(mu_m.real)
        else:
            base = mu[j0].real if j0 in mu else np.nan
            powered = base ** (m / j0) if base > 0 else np.nan
            gap = mu_m.real - powered
            values[f"phi1_comp_{m}"] = float(gap) if np.isfinite(gap) else np.nan
            residuals[f"phi1_comp_{m}"] = (
                abs(gap) if np.isfinite(gap) else np.inf
            )

    worst = max(residuals.values()) if residuals else 0.0
    positive = values.get("phi1_j0", -np.inf) > tol
    constraint_ok = bool(worst <= tol and positive)

    # independent jet-side check: exact Taylor data when a disc is given
    if isinstance(f, AnalyticDisc):
        jet = jet_of_disc(f, k)
        f0 = jet.p
        derivs = jet.components
    else:
        f0 = c0
        derivs = np.array(
            [factorial(m) * spec.coefficient(m) for m in range(1, k + 1)]
        )
    jet_ok = bool(np.max(np.abs(f0 - p)) <= tol)
    mu_real = None
    if jet_ok:
        dj0 = derivs[j0 - 1]
        xij0 = xi.components[j0 - 1]
        norm2 = float(np.sum(np.abs(xij0) ** 2))
        mu_pow = complex(np.sum(dj0 * np.conj(xij0))) / norm2
        if abs(mu_pow.imag) > tol or mu_pow.real <= tol:
            jet_ok = False
        else:
            mu_real = mu_pow.real ** (1.0 / j0)
            for m in range(1, k + 1):
                gap = float(
                    np.max(np.abs(derivs[m - 1] - mu_real**m * xi.components[m - 1]))
                )
                if gap > tol * factorial(m):
                    jet_ok = False
                    break
    return {
        "values": values,
        "residuals": residuals,
        "worst_residual": float(worst),
        "constraint_satisfied": constraint_ok,
        "jet_match": jet_ok,
        "agree": constraint_ok == jet_ok,
        "mu": mu_real,
        "j0": j0,
        "tol": tol,
        "grid_size": u.grid_size,
    }

"""Kobayashi k-metric: disc closed forms and the extremal-disc solver.

The metric value at a jet xi is inf 1/lambda over holomorphic discs f with
f(0) = p and k-jet equal to the scaled jet lambda . xi.  The solver searches
polynomial discs f = p + sum a_j zeta^j of degree d: the coefficients up to
order k are pinned by the jet, the tail is free, and feasibility means
rho(f) <= -margin on a boundary grid.  For plurisubharmonic rho the boundary
grid controls the whole disc, since rho o f is subharmonic.  The outer loop
bisects on lambda; the largest feasible lambda found is certified by its
witness disc, and the bracket width is the reported uncertainty.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import factorial

import numpy as np
from scipy.optimize import minimize

from .discs import AnalyticDisc
from .domains import Domain
from .errors import (
    AllZero,
    BasePointNotZero,
    InfeasibleAtZero,
    InputError,
    NotConverged,
    OutsideDomain,
    ZeroJet,
)
from .jets import JetVector, first_nonzero_index, jet_of_disc, jet_project, jet_scale


@dataclass(frozen=True)
class SolverConfig:
    """Knobs of the extremal solver; all fields JSON-encodable.

    degree is the polynomial search degree d, grid_size the number of
    boundary constraint nodes, margin the interior clearance demanded of
    witnesses.  lambda_max of None means the Cauchy-estimate default.
    """

    degree: int = 12
    grid_size: int = 256
    bisect_tol: float = 1e-3
    margin: float = 1e-6
    inner_maxiter: int = 300
    multistart: int = 2
    max_outer: int = 80
    seed: int = 0
    lambda_max: float | None = None
    jet_tol: float = 1e-9

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class MetricResult:
    """Solver output: metric value 1/lam with its witness disc.

    ``lam`` is the largest certified-feasible jet scale; the true extremal
    scale lies in solver_report["bracket"].
    """

    value: float
    lam: float
    extremal: AnalyticDisc
    solver_report: dict


def k1_disc_closed_form(p: complex, v: complex) -> float:
    """Classical Kobayashi metric of the unit disc, |v| / (1 - |p|^2)."""
    p = complex(p)
    if abs(p) >= 1.0:
        raise OutsideDomain(f"|p| = {abs(p):.6f} is not inside the unit disc")
    return abs(complex(v)) / (1.0 - abs(p) ** 2)


def k2_disc_closed_form(xi: JetVector) -> float:
    """Order-2 metric of the unit disc at the origin, sqrt(|xi1|^2 + |xi2|/2)."""
    if xi.dim != 1 or xi.order != 2:
        raise InputError("closed form needs a scalar jet of order 2")
    if abs(xi.p[0]) > 0.0:
        raise BasePointNotZero("the order-2 closed form is stated at 0 only")
    xi1 = complex(xi.components[0, 0])
    xi2 = complex(xi.components[1, 0])
    return float(np.sqrt(abs(xi1) ** 2 + abs(xi2) / 2.0))


def _lambda_cauchy_bound(xi: JetVector, radius: float) -> float:
    # coefficient bound |a_j| <= sup |f| <= radius forces
    # lambda^j ||xi_j|| / j! <= radius for each pinned order
    best = np.inf
    for j in range(1, xi.order + 1):
        nrm = float(np.linalg.norm(xi.components[j - 1]))
        if nrm > 0.0:
            best = min(best, (factorial(j) * radius / nrm) ** (1.0 / j))
    return float(best)


class _TailFeasibility:
    """Inner subproblem: fit free tail coefficients to keep the disc inside.

    Minimizes sum relu(rho(f) + margin)^2 over the tail, with the analytic
    gradient in the real/imaginary coefficient coordinates.
    """

    def __init__(self, domain, powers_tail, margin, maxiter):
        self.domain = domain
        self.Zt = powers_tail  # (N, T) boundary powers zeta^{k+1}..zeta^d
        self.margin = margin
        self.maxiter = maxiter
        self.T = powers_tail.shape[1]
        self.n = domain.dim
        self.evals = 0

    def _unpack(self, x):
        half = self.T * self.n
        return (x[:half] + 1j * x[half:]).reshape(self.T, self.n)

    def _pack(self, a):
        return np.concatenate([a.real.ravel(), a.imag.ravel()])

    def max_violation(self, base, a):
        vals = self.domain.rho(base + self.Zt @ a)
        return float(np.max(vals)) + self.margin

    def _objective(self, x, base):
        self.evals += 1
        a = self._unpack(x)
        F = base + self.Zt @ a
        v = np.asarray(self.domain.rho(F), dtype=float) + self.margin
        r = np.maximum(v, 0.0)
        P = float(r @ r)
        W = (2.0 * r)[:, None] * np.asarray(self.domain.drho(F), dtype=complex)
        M = self.Zt.T @ W
        g = np.concatenate([2.0 * M.real.ravel(), -2.0 * M.imag.ravel()])
        return P, g

    def solve(self, base, starts, bounds=None, feas_tol=None):
        """Try starts in order; return (feasible, tail, max_violation)."""
        # feasibility certified pointwise, not through the penalty value
        accept = -self.margin / 2.0 if feas_tol is None else feas_tol
        best_a = None
        best_v = np.inf
        for x0 in starts:
            a0 = self._unpack(np.asarray(x0, dtype=float))
            v0 = self.max_violation(base, a0) - self.margin
            if v0 <= accept:
                return True, a0, v0
            res = minimize(
                self._objective,
                np.asarray(x0, dtype=float),
                args=(base,),
                method="L-BFGS-B",
                jac=True,
                bounds=bounds,
                options={"maxiter": self.maxiter, "ftol": 1e-18, "gtol": 1e-14},
            )
            a = self._unpack(res.x)
            v = self.max_violation(base, a) - self.margin
            if v < best_v:
                best_v, best_a = v, a
            if v <= accept:
                return True, a, v
        return False, best_a, best_v


def _boundary_powers(grid_size, orders):
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    zeta = np.exp(1j * theta)
    return zeta[:, None] ** np.asarray(orders)[None, :]


def _assemble_disc(p, fixed, tail):
    rows = [p[None, :], fixed]
    if tail is not None and tail.shape[0] > 0:
        rows.append(tail)
    coeffs = np.concatenate(rows, axis=0)
    return AnalyticDisc.polynomial(tuple(coeffs[:, i] for i in range(coeffs.shape[1])))


def kobayashi_k_metric(
    domain: Domain, xi: JetVector, cfg: SolverConfig | None = None
) -> MetricResult:
    """Extremal-disc value of the Kobayashi k-metric at a jet.

    Bisects on the jet scale lambda; at each lambda the pinned-jet
    polynomial disc is completed by penalized descent on its free tail.
    Deterministic for fixed cfg.seed.  The returned value is 1/lam for the
    largest lambda whose witness satisfies rho <= -margin/2 at every grid
    node; the bisection bracket is reported as the uncertainty.
    """
    cfg = SolverConfig() if cfg is None else cfg
    if xi.dim != domain.dim:
        raise InputError(
            f"jet dimension {xi.dim} does not match domain dimension {domain.dim}"
        )
    try:
        first_nonzero_index(xi)
    except AllZero:
        raise ZeroJet("metric of the zero jet is not an extremal problem") from None
    k = xi.order
    d = cfg.degree
    if d < k:
        raise InputError(f"search degree {d} below jet order {k}")
    p = xi.p
    rho_p = float(domain.rho(p))
    if rho_p > -cfg.margin:
        raise InfeasibleAtZero(
            f"rho(p) = {rho_p:.3e} violates the margin {cfg.margin:.1e}"
        )

    N = cfg.grid_size
    n = domain.dim
    T = d - k
    Zfix = _boundary_powers(N, range(1, k + 1))
    Ztail = _boundary_powers(N, range(k + 1, d + 1))
    problem = _TailFeasibility(domain, Ztail, cfg.margin, cfg.inner_maxiter)
    rng = np.random.default_rng(cfg.seed)
    radius = domain.bounding_radius
    lam_max = cfg.lambda_max
    if lam_max is None:
        lam_max = _lambda_cauchy_bound(xi, radius)
    if not np.isfinite(lam_max) or lam_max <= 0:
        raise InputError("could not establish a positive lambda upper bound")

    zeros_start = np.zeros(2 * T * n)
    state = {"warm": None, "inner": 0}

    def feasible_at(lam):
        state["inner"] += 1
        fixed = np.array(
            [lam**j * xi.components[j - 1] / factorial(j) for j in range(1, k + 1)]
        )
        base = p[None, :] + Zfix @ fixed
        if T == 0:
            v = float(np.max(domain.rho(base))) + cfg.margin / 2.0
            return (v <= 0.0), fixed, None
        starts = []
        if state["warm"] is not None:
            starts.append(problem._pack(state["warm"]))
        starts.append(zeros_start)
        for _ in range(max(0, cfg.multistart - 1)):
            starts.append(0.02 * radius * rng.standard_normal(2 * T * n))
        ok, tail, _ = problem.solve(base, starts)
        if ok:
            state["warm"] = tail
        return ok, fixed, tail

    # establish the bracket: lambda = 0 is feasible (constant disc), the
    # Cauchy bound should not be
    hi = lam_max
    ok_hi, fixed_hi, tail_hi = feasible_at(hi)
    expansions = 0
    while ok_hi and expansions < 12:
        hi *= 1.5
        expansions += 1
        ok_hi, fixed_hi, tail_hi = feasible_at(hi)
    if ok_hi:
        raise NotConverged("no infeasible upper bound for lambda was found")

    lo = 0.0
    best_fixed = np.zeros((k, n), dtype=complex)
    best_tail = np.zeros((T, n), dtype=complex) if T else None
    outer = 0
    while hi - lo > cfg.bisect_tol * hi:
        if outer >= cfg.max_outer:
            raise NotConverged(
                f"bisection bracket [{lo:.6e}, {hi:.6e}] above tolerance "
                f"after {outer} iterations"
            )
        outer += 1
        mid = 0.5 * (lo + hi)
        ok, fixed, tail = feasible_at(mid)
        if ok:
            lo, best_fixed, best_tail = mid, fixed, tail
        else:
            hi = mid
    if lo == 0.0:
        raise NotConverged("no feasible positive lambda found above tolerance")

    witness = _assemble_disc(p, best_fixed, best_tail)
    lam = lo
    value = 1.0 / lam

    jet_err = float(
        np.max(
            np.abs(
                jet_of_disc(witness, k).components - jet_scale(lam, xi).components
            )
        )
    )
    if jet_err > cfg.jet_tol:
        raise NotConverged(f"witness jet error {jet_err:.3e} above jet_tol")
    theta_fine = 2.0 * np.pi * np.arange(4 * N) / (4 * N)
    rho_fine = np.asarray(domain.rho(witness.eval(np.exp(1j * theta_fine))))
    theta_grid = 2.0 * np.pi * np.arange(N) / N
    rho_grid = np.asarray(domain.rho(witness.eval(np.exp(1j * theta_grid))))

    report = {
        "domain": domain.name,
        "order": k,
        "outer_iterations": outer,
        "inner_solves": state["inner"],
        "objective_evaluations": problem.evals,
        "bracket": [lo, hi],
        "value_bracket": [1.0 / hi, 1.0 / lo],
        "value_uncertainty": 1.0 / lo - 1.0 / hi,
        "lambda_max": lam_max,
        "witness_max_rho": float(np.max(rho_grid)),
        "witness_max_rho_fine_grid": float(np.max(rho_fine)),
        "jet_error": jet_err,
        "config": cfg.to_dict(),
    }
    return MetricResult(value=value, lam=lam, extremal=witness, solver_report=report)


def yu_metric(
    domain: Domain, p, v, k: int, cfg: SolverConfig | None = None
) -> MetricResult:
    """Higher-order metric over discs p + zeta^k Psi: the jet (0,..,0,v)."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    if not np.any(np.abs(v) > 0):
        raise ZeroJet("direction vector v must be nonzero")
    if k < 1:
        raise InputError("order must be at least 1")
    comps = np.zeros((k, v.size), dtype=complex)
    comps[-1] = v
    return kobayashi_k_metric(domain, JetVector(p, comps), cfg)


# ---------------------------------------------------------------------------
# Property suite


def _random_jet(rng, p, n, k, scale=1.0):
    comps = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
    comps *= scale / np.sqrt(np.sum(np.abs(comps) ** 2))
    return JetVector(p, comps)


def _suite_pair(res_a, res_b, weight=1.0):
    tol = (
        res_a.solver_report["value_uncertainty"]
        + weight * res_b.solver_report["value_uncertainty"]
    )
    return 3.0 * tol + 1e-9


def metric_property_suite(
    domain: Domain,
    codomain: Domain | None = None,
    phi=None,
    samples: int = 20,
    cfg: SolverConfig | None = None,
    seed: int = 0,
) -> dict:
    """Check homogeneity, order monotonicity, and the decreasing property.

    Closed-form identities on the disc are checked to 1e-12; solver
    comparisons allow three times the combined bisection uncertainty.
    When ``phi``/``codomain`` are omitted and the domain is 1-dimensional,
    the decreasing property uses the slice embedding of the disc into the
    2-ball; otherwise that section is skipped.
    """
    from .jets import AnalyticMapSeries, jet_pushforward

    cfg = SolverConfig() if cfg is None else cfg
    rng = np.random.default_rng(seed)
    p = domain.interior_point
    n = domain.dim
    report = {"samples": samples, "seed": seed}

    # closed forms at the origin of the disc
    worst_cf = 0.0
    for _ in range(20):
        comps = rng.standard_normal((2, 1)) + 1j * rng.standard_normal((2, 1))
        xi = JetVector(np.zeros(1), comps)
        c = rng.standard_normal() + 1j * rng.standard_normal()
        lhs = k2_disc_closed_form(jet_scale(c, xi))
        rhs = abs(c) * k2_disc_closed_form(xi)
        worst_cf = max(worst_cf, abs(lhs - rhs) / max(rhs, 1e-30))
        mono_gap = k2_disc_closed_form(xi) - k1_disc_closed_form(
            0.0, comps[0, 0]
        )
        worst_cf = max(worst_cf, max(0.0, -mono_gap))
    report["closed_form"] = {"worst_violation": worst_cf, "pass": worst_cf <= 1e-12}

    worst_h = -np.inf
    for _ in range(samples):
        xi = _random_jet(rng, p, n, 2, scale=1.0 + rng.random())
        c = (0.6 + 0.8 * rng.random()) * np.exp(2j * np.pi * rng.random())
        ra = kobayashi_k_metric(domain, jet_scale(c, xi), cfg)
        rb = kobayashi_k_metric(domain, xi, cfg)
        excess = abs(ra.value - abs(c) * rb.value) - _suite_pair(ra, rb, abs(c))
        worst_h = max(worst_h, excess)
    report["homogeneity"] = {"worst_excess": worst_h, "pass": worst_h <= 0.0}

    worst_m = -np.inf
    for _ in range(samples):
        xi_high = _random_jet(rng, p, n, 3, scale=1.0 + rng.random())
        ra = kobayashi_k_metric(domain, jet_project(xi_high), cfg)
        rb = kobayashi_k_metric(domain, xi_high, cfg)
        excess = (ra.value - rb.value) - _suite_pair(ra, rb)
        worst_m = max(worst_m, excess)
    report["monotonicity"] = {"worst_excess": worst_m, "pass": worst_m <= 0.0}

    if phi is None and codomain is None and n == 1:
        from .domains import make_ball

        codomain = make_ball(2)
        phi = AnalyticMapSeries(
            np.zeros(1),
            {(0,): np.zeros(2, dtype=complex), (1,): np.array([1.0, 0.0], dtype=complex)},
        )
    if phi is not None and codomain is not None:
        worst_d = -np.inf
        for _ in range(samples):
            xi = _random_jet(rng, p, n, 2, scale=1.0 + rng.random())
            ra = kobayashi_k_metric(codomain, jet_pushforward(phi, xi), cfg)
            rb = kobayashi_k_metric(domain, xi, cfg)
            excess = (ra.value - rb.value) - _suite_pair(ra, rb)
            worst_d = max(worst_d, excess)
        report["decreasing"] = {"worst_excess": worst_d, "pass": worst_d <= 0.0}
    else:
        report["decreasing"] = {"skipped": True, "pass": True}

    report["pass"] = all(
        section["pass"]
        for section in (
            report["closed_form"],
            report["homogeneity"],
            report["monotonicity"],
            report["decreasing"],
        )
    )
    return report

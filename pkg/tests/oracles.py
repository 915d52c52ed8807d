"""Independent reference computations used to pin expected test values.

Everything here is written against numpy only, with none of the package
conventions shared: direct DFT sums instead of fft, Cauchy integrals on an
interior circle instead of series division, and blind random search with
per-tail bisection instead of the penalized solver.  Agreement between these
and the library is therefore meaningful.
"""

import numpy as np


def dft_direct(samples):
    """O(N^2) direct evaluation of c_j = (1/N) sum_m u_m e^{-ij theta_m}.

    Returns a dict mapping the centered index j in [-N/2, N/2) to the
    (n,)-vector coefficient.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim == 1:
        samples = samples[:, None]
    N = samples.shape[0]
    theta = 2.0 * np.pi * np.arange(N) / N
    out = {}
    for j in range(-N // 2, N // 2):
        phase = np.exp(-1j * j * theta)
        out[j] = phase @ samples / N
    return out


def cauchy_taylor(fn, order, radius=0.5, nodes=4096):
    """Taylor coefficients t_0..t_order of fn at 0 by Cauchy integrals.

    t_m = (1/2 pi i) integral fn(z) / z^{m+1} dz over |z| = radius,
    evaluated with the trapezoid rule, which is spectrally accurate here.
    fn maps a complex array to shape (nodes,) or (nodes, n).
    """
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    z = radius * np.exp(1j * theta)
    vals = np.asarray(fn(z), dtype=complex)
    if vals.ndim == 1:
        vals = vals[:, None]
    out = []
    for m in range(order + 1):
        out.append((np.exp(-1j * m * theta) @ vals) / nodes / radius**m)
    return np.array(out)


def _sup_norm_on_circle(coeff_rows, nodes=1024):
    # coeff_rows[j] is the degree-j vector coefficient, shape (d+1, n)
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    zeta = np.exp(1j * theta)
    d = coeff_rows.shape[0] - 1
    powers = zeta[:, None] ** np.arange(d + 1)[None, :]
    vals = powers @ coeff_rows
    return float(np.max(np.sqrt(np.sum(np.abs(vals) ** 2, axis=1))))


def brute_force_ball_k1(v, degree=6, draws=200, seed=0, nodes=1024):
    """Blind search for the order-1 extremal problem in the unit ball.

    Maximizes lambda over discs f = lambda v zeta + sum_{j>=2} a_j zeta^j
    inside the unit ball of C^n, drawing random tails and bisecting on
    lambda for each (containment checked by boundary sampling; discs with
    polynomial coefficients are subharmonic in ||f||^2 so the boundary
    controls the interior).  Returns the metric estimate 1 / lambda_best.
    """
    v = np.asarray(v, dtype=complex).reshape(-1)
    n = v.size
    rng = np.random.default_rng(seed)
    tails = [np.zeros((degree - 1, n), dtype=complex)]
    for _ in range(draws):
        t = rng.standard_normal((degree - 1, n)) + 1j * rng.standard_normal(
            (degree - 1, n)
        )
        tails.append(0.3 * rng.random() * t / np.sqrt(np.sum(np.abs(t) ** 2)))
    lam_best = 0.0
    for tail in tails:
        lo, hi = 0.0, 2.5 / np.linalg.norm(v)
        for _ in range(45):
            mid = 0.5 * (lo + hi)
            rows = np.concatenate(
                [np.zeros((1, n)), (mid * v)[None, :], tail], axis=0
            )
            if _sup_norm_on_circle(rows, nodes) <= 1.0:
                lo = mid
            else:
                hi = mid
        lam_best = max(lam_best, lo)
    return 1.0 / lam_best


def blaschke_weight_closed_form(zeros, thetas):
    """Exact stationary weight of a finite product: prod |e^{i t} - a|^2.

    Jensen's formula gives the product mean-log-zero gauge automatically
    when every |a| < 1.
    """
    z = np.exp(1j * np.asarray(thetas))
    c = np.ones_like(thetas, dtype=float)
    for a in zeros:
        c *= np.abs(z - a) ** 2
    return c


def blaschke_lift_closed_form(zeros, z):
    """Exact lift of a finite product: prod (1 - conj(a) zeta)^2."""
    out = np.ones_like(z, dtype=complex)
    for a in zeros:
        out *= (1.0 - np.conj(a) * z) ** 2
    return out

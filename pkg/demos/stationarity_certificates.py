"""
Certifying stationarity of boundary-attached discs
==================================================

A disc f attached to the boundary of a domain is k-stationary when some
positive weight c on the circle makes zeta^k c(zeta) drho(f(zeta)) the
boundary trace of a holomorphic map.  On the unit disc the weight can be
constructed in closed form from a logarithm and its harmonic conjugate;
on higher-dimensional domains we search for the weight instead.

The winding number of the scalar symbol zeta^k conj(f) decides the
log construction outright: it succeeds exactly on winding zero, which for
a Blaschke product of degree d tested at order k means d = k.
"""

import numpy as np

from kdisc import (
    AnalyticDisc,
    NonzeroWinding,
    ResidualAboveTolerance,
    StationarityConfig,
    blaschke_product,
    make_ball,
    scalar_stationarity_exact,
    stationarity_search,
)

# --- exact certificates for Blaschke products ------------------------------
# deg B = k: the weight is prod |zeta - a_j|^2 up to the mean-log gauge.
for zeros in [[0.3], [0.3, -0.5], [0.3, -0.5, 0.2 + 0.4j]]:
    f = blaschke_product(zeros)
    k = len(zeros)
    cert = scalar_stationarity_exact(f, k)
    ref = np.ones_like(cert.c.thetas)
    for a in zeros:
        ref = ref * np.abs(np.exp(1j * cert.c.thetas) - a) ** 2
    gap = np.max(np.abs(cert.c.samples[:, 0].real - ref))
    print(f"deg {k} Blaschke at order {k}: residual {cert.residual:.2e}, "
          f"winding {cert.winding}, |c - closed form| = {gap:.2e}")

# --- the winding obstruction -----------------------------------------------
# zeta^2 at order 1 has symbol winding -1: no positive weight can cancel a
# negative-frequency deficit, and the exact construction refuses.
try:
    scalar_stationarity_exact(blaschke_product([0.0, 0.0]), 1)
except NonzeroWinding as e:
    print(f"\nzeta^2 at order 1: rejected, winding {e.winding}")

# --- weight search in the two-ball -----------------------------------------
# Embed B(zeta) as (B(zeta), 0).  At k = 2 a degree-1 factor is still
# stationary: the lift simply acquires an interior zero.  A degree-3
# factor is not, because the symbol now winds negatively.
cfg = StationarityConfig(trig_degree=24)
ball = make_ball(2)

one = blaschke_product([0.4])
f1 = AnalyticDisc((one.numerators[0], np.zeros(1, dtype=complex)),
                  (one.denominators[0], np.array([1.0 + 0j])))
cert = stationarity_search(ball, f1, 2, cfg)
print(f"\n(B_deg1, 0) at order 2 in the ball: residual {cert.residual:.2e}"
      "  (stationary, surplus absorbed)")

three = blaschke_product([0.4, -0.3, 0.2j])
f3 = AnalyticDisc((three.numerators[0], np.zeros(1, dtype=complex)),
                  (three.denominators[0], np.array([1.0 + 0j])))
try:
    stationarity_search(ball, f3, 2, cfg)
except ResidualAboveTolerance as e:
    print(f"(B_deg3, 0) at order 2 in the ball: refused, best residual "
          f"{e.best_residual:.3f}  (negative winding deficit)")

"""
Jet pairings, the extremality probe, and boundary functionals
=============================================================

A stationarity certificate comes with a lift: the holomorphic map whose
boundary trace equals zeta^k c drho(f).  Pairing the Taylor data of the
disc against the lift yields the scalar family

    S(lambda) = Re sum_j (1 + lambda + .. + lambda^{j-1}) <t_j(f), t_{k-j}(lift)>

whose positivity on (0, 1] feeds the local extremality argument: if a
nearby competitor carried the jet mu . jet(f) with mu > 1, the boundary
pairing Re<f - g, drho(f)> would have to go negative somewhere, which
convexity forbids.  The probe below searches for such competitors
directly, so certified discs should come back with mu_best <= 1.

The last section evaluates the boundary functionals that pin a disc to a
prescribed jet ray, comparing their verdict with exact Taylor data.
"""

import numpy as np

from kdisc import (
    blaschke_product,
    jet_of_disc,
    jet_scale,
    local_extremality_probe,
    make_unit_disc,
    pairing_sum,
    poletsky_functionals,
    scalar_stationarity_exact,
)

# --- the pairing family for a degree-2 Blaschke product -------------------
f = blaschke_product([0.3, -0.5])
cert = scalar_stationarity_exact(f, 2)
print("S(lambda) for the degree-2 Blaschke product with zeros 0.3, -0.5:")
for lam in (0.5, 0.7, 0.9, 0.99, 1.0):
    s = pairing_sum(f, cert.lift, lam, 2)
    print(f"  lambda = {lam:<5}  S = {s:+.6f}   (1 - lambda) S = "
          f"{(1.0 - lam) * s:+.6f}")

# --- probing for jet-scaled competitors ------------------------------------
# zeta^2 is the model 2-extremal at the origin; the probe should find no
# competitor with mu beyond 1.  For a generic Blaschke product Schwarz
# rigidity pushes mu_best strictly below 1.
disc = make_unit_disc()
for name, g in [("zeta^2", blaschke_product([0.0, 0.0])),
                ("Blaschke(0.3, -0.5)", f)]:
    rep = local_extremality_probe(disc, g, 2)
    mu = rep["mu_best"]
    mu_txt = "none feasible" if mu is None else f"mu_best = {mu:.6f}"
    print(f"\nprobe on {name}: {mu_txt}, confirmed = {rep['confirmed']}")
    if mu is not None:
        print(f"  boundary pairing min {rep['boundary_pairing_min']:+.2e}, "
              f"mean {rep['boundary_pairing_mean']:+.2e}")

# --- boundary functionals versus exact jets --------------------------------
# A disc carries the jet mu . xi exactly when the Fourier-side functionals
# vanish; both verdicts below are computed independently and must agree.
xi = jet_of_disc(f, 2)
matched = f
rep = poletsky_functionals(matched, xi)
print(f"\nfunctionals on a matched disc: constraint {rep['constraint_satisfied']},"
      f" jet match {rep['jet_match']}, agree {rep['agree']}, mu = {rep['mu']:.4f}")

# perturb the base point: both sides should now say no
from kdisc import AnalyticDisc

num0 = matched.numerators[0].copy()
num0[0] += 0.05 * (1 + 1j) * matched.denominators[0][0]
broken = AnalyticDisc((num0,), (matched.denominators[0],))
rep = poletsky_functionals(broken, xi)
print(f"functionals on a shifted disc:  constraint {rep['constraint_satisfied']},"
      f" jet match {rep['jet_match']}, agree {rep['agree']}")

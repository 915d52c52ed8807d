"""Exception hierarchy shared across the package.

Every failure mode that callers are expected to catch gets its own class so
that the command-line layer can map computational refusals (exit code 2)
apart from malformed input (exit code 1).
"""


class KdiscError(Exception):
    """Base class for all package errors."""


class InputError(KdiscError):
    """Malformed or inconsistent user input (shapes, ranges, JSON fields)."""


# ---------------------------------------------------------------------------
# Circle analysis


class NearZero(KdiscError):
    """A boundary sample came too close to zero for a stable log/winding."""


class AliasRisk(KdiscError):
    """Phase increment between adjacent samples exceeded pi/2; the grid is
    too coarse to track the argument reliably."""


class ZeroFunction(KdiscError):
    """Operation undefined for the identically zero function."""


class NotHolomorphic(KdiscError):
    """Negative-frequency mass above tolerance; no holomorphic extension."""

    def __init__(self, residual, tol):
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(
            f"negative-tail residual {self.residual:.3e} exceeds tol {self.tol:.3e}"
        )


# ---------------------------------------------------------------------------
# Jets


class AllZero(KdiscError):
    """Every jet component vanishes."""


# ---------------------------------------------------------------------------
# Discs


class InvalidDisc(KdiscError):
    """Rational disc data violates its invariants (vanishing denominator)."""


class OutsideClosedDisc(KdiscError):
    """Evaluation point lies outside the closed unit disc."""


class ModulusNotLessThanOne(KdiscError):
    """A Blaschke zero or Schwarz parameter must lie strictly inside the disc."""


class BadLambda(KdiscError):
    """Scaling parameter must lie in (0, 1]."""


class NotCentered(KdiscError):
    """Disc must send 0 to 0 for this operation."""


class NotSelfMap(KdiscError):
    """Boundary modulus exceeds 1; not a self-map of the unit disc."""


# ---------------------------------------------------------------------------
# Domains


class NonPositiveCoefficient(KdiscError):
    """Defining-function coefficients must be strictly positive."""


class OutsideDomain(KdiscError):
    """Point fails the membership test."""


class DegenerateRay(KdiscError):
    """A ray from the interior point never crossed the boundary."""


class VanishingGradient(KdiscError):
    """The defining-function gradient vanished where it is needed."""


# ---------------------------------------------------------------------------
# Metric solver


class ZeroJet(KdiscError):
    """The metric of the zero jet is degenerate; no extremal problem to solve."""


class BasePointNotZero(KdiscError):
    """Closed form is stated at the origin only."""


class InfeasibleAtZero(KdiscError):
    """Even the constant disc violates the margin; base point is not usably
    interior, or the configuration is inconsistent."""


class NotConverged(KdiscError):
    """Bisection or inner optimizer failed to reach its tolerance."""


# ---------------------------------------------------------------------------
# Stationarity


class NonzeroWinding(KdiscError):
    """The scalar symbol has nonzero winding; no positive factorization."""

    def __init__(self, winding):
        self.winding = int(winding)
        super().__init__(f"symbol has winding {self.winding}, expected 0")


class NotOnBoundary(KdiscError):
    """Boundary trace strays from the zero set of the defining function."""


class ResidualAboveTolerance(KdiscError):
    """Certification search ended above tolerance; carries the best residual."""

    def __init__(self, best_residual, tol):
        self.best_residual = float(best_residual)
        self.tol = float(tol)
        super().__init__(
            f"best residual {self.best_residual:.3e} above tol {self.tol:.3e}"
        )


class NotCertifiedStationary(KdiscError):
    """Probe requires a stationarity certificate and none could be produced."""


class ProbeFailed(KdiscError):
    """Extremality probe found a competitor beyond mu = 1 + tol.

    Carries the witness scaling and disc data so the event can be inspected
    rather than silently swallowed.
    """

    def __init__(self, mu, witness=None):
        self.mu = float(mu)
        self.witness = witness
        super().__init__(f"feasible competitor found at mu = {self.mu:.6f}")

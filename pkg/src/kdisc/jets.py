"""k-jets of analytic discs and their transformation rules.

A k-jet at p consists of the derivative vectors (f'(0), f''(0), ..., f^(k)(0))
of discs through p.  The scaling action of c on a jet multiplies the j-th
derivative by c**j, matching precomposition of the disc with zeta -> c*zeta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .errors import AllZero, InputError


@dataclass(frozen=True)
class JetVector:
    """Base point together with derivative vectors of orders 1..k.

    Attributes
    ----------
    p : ndarray, shape (n,), complex
        Base point of the jet.
    components : ndarray, shape (k, n), complex
        Row j-1 holds the order-j derivative vector.
    """

    p: np.ndarray
    components: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=complex).reshape(-1)
        comp = np.atleast_2d(np.asarray(self.components, dtype=complex))
        if p.size < 1:
            raise InputError("jet base point must have at least one coordinate")
        if comp.shape[0] < 1:
            raise InputError("jet order must be at least 1")
        if comp.shape[1] != p.size:
            raise InputError(
                f"jet components have dimension {comp.shape[1]}, base point {p.size}"
            )
        if not (np.all(np.isfinite(p)) and np.all(np.isfinite(comp))):
            raise InputError("jet data contains non-finite entries")
        p.setflags(write=False)
        comp.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "components", comp)

    @property
    def order(self) -> int:
        return self.components.shape[0]

    @property
    def dim(self) -> int:
        return self.components.shape[1]

    def component(self, j: int) -> np.ndarray:
        """Derivative vector of order j, 1-indexed."""
        if not 1 <= j <= self.order:
            raise InputError(f"component order {j} outside 1..{self.order}")
        return self.components[j - 1]

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.components) ** 2)))


def jet_scale(c: complex, xi: JetVector) -> JetVector:
    """Action of a complex scalar: order-j component picks up c**j."""
    weights = np.asarray(c, dtype=complex) ** np.arange(1, xi.order + 1)
    return JetVector(xi.p, weights[:, None] * xi.components)


def jet_of_disc(f, order: int) -> JetVector:
    """Jet of an analytic disc at zeta = 0, read off its Taylor coefficients.

    The derivative of order j is j! times the coefficient of zeta^j, exact
    for the rational disc representation.
    """
    if order < 1:
        raise InputError("jet order must be at least 1")
    t = f.taylor_coefficients(order)
    comps = np.array(
        [factorial(j) * t[j] for j in range(1, order + 1)], dtype=complex
    )
    return JetVector(t[0], comps)


def jet_project(xi: JetVector) -> JetVector:
    """Forget the top derivative; defined for jets of order >= 2."""
    if xi.order < 2:
        raise InputError("cannot project a jet of order 1")
    return JetVector(xi.p, xi.components[:-1])


def first_nonzero_index(xi: JetVector, tol: float = 0.0) -> int:
    """Smallest order j with ||xi_j|| > tol, 1-indexed."""
    norms = np.sqrt(np.sum(np.abs(xi.components) ** 2, axis=1))
    idx = np.nonzero(norms > tol)[0]
    if idx.size == 0:
        raise AllZero("all jet components vanish")
    return int(idx[0]) + 1


def jet_to_dict(xi: JetVector) -> dict:
    """JSON-ready encoding with [re, im] pairs."""

    def enc(a):
        return [[float(z.real), float(z.imag)] for z in np.asarray(a).reshape(-1)]

    return {
        "p": enc(xi.p),
        "components": [enc(row) for row in xi.components],
    }


def jet_from_dict(data: dict) -> JetVector:
    def dec(pairs, where):
        try:
            return np.array([complex(re, im) for re, im in pairs], dtype=complex)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad complex list at {where}: {exc}") from None

    if "p" not in data or "components" not in data:
        raise InputError("jet JSON needs fields 'p' and 'components'")
    p = dec(data["p"], "p")
    comps = [dec(row, f"components[{i}]") for i, row in enumerate(data["components"])]
    return JetVector(p, np.array(comps))


# ---------------------------------------------------------------------------
# Truncated power series of holomorphic maps and the jet pushforward


@dataclass(frozen=True)
class AnalyticMapSeries:
    """Truncated Taylor expansion of a holomorphic map C^n_in -> C^n_out.

    ``terms`` maps a multi-index alpha (length n_in) to the vector
    coefficient of (z - p)^alpha.  ``order`` is the trust radius of the
    truncation: coefficients of total degree > order are unknown.  A value
    of None marks the series as exact (a polynomial map).
    """

    p: np.ndarray
    terms: dict
    order: int | None = field(default=None)

    def __post_init__(self):
        p = np.asarray(self.p, dtype=complex).reshape(-1)
        if p.size < 1:
            raise InputError("expansion point must have at least one coordinate")
        if not self.terms:
            raise InputError("series needs at least one term")
        n_in = p.size
        n_out = None
        clean = {}
        for alpha, vec in self.terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n_in or any(a < 0 for a in alpha):
                raise InputError(f"bad multi-index {alpha} for n_in = {n_in}")
            v = np.asarray(vec, dtype=complex).reshape(-1)
            if n_out is None:
                n_out = v.size
            elif v.size != n_out:
                raise InputError("inconsistent output dimensions across terms")
            v.setflags(write=False)
            clean[alpha] = v
        if self.order is not None and self.order < 1:
            raise InputError("series order must be at least 1")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", clean)

    @property
    def n_in(self) -> int:
        return self.p.size

    @property
    def n_out(self) -> int:
        return next(iter(self.terms.values())).size

    @property
    def degree(self) -> int:
        return max(sum(a) for a in self.terms)

    def available_order(self) -> float:
        return np.inf if self.order is None else self.order

    def constant_term(self) -> np.ndarray:
        zero = (0,) * self.n_in
        if zero in self.terms:
            return self.terms[zero]
        return np.zeros(self.n_out, dtype=complex)

    @classmethod
    def identity(cls, n: int, p=None) -> "AnalyticMapSeries":
        p = np.zeros(n, dtype=complex) if p is None else np.asarray(p, dtype=complex)
        terms = {(0,) * n: p.copy()}
        for i in range(n):
            alpha = tuple(1 if j == i else 0 for j in range(n))
            e = np.zeros(n, dtype=complex)
            e[i] = 1.0
            terms[alpha] = e
        return cls(p, terms)


def _series_mul(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    # univariate truncated product, coefficient arrays of length order+1
    return np.convolve(a, b)[: order + 1]


def jet_pushforward(phi: AnalyticMapSeries, xi: JetVector) -> JetVector:
    """Jet of phi composed with any disc representing xi.

    The canonical polynomial representative z(t) = p + sum xi_j t^j / j! is
    substituted into the series of phi and the composite is truncated at
    order k; the chain rule for higher derivatives is exactly this
    substitution, so the result is representative-independent.
    """
    k = xi.order
    if phi.n_in != xi.dim:
        raise InputError(
            f"map expects {phi.n_in} inputs, jet lives in dimension {xi.dim}"
        )
    if not np.allclose(phi.p, xi.p, atol=1e-12):
        raise InputError("jet base point must match the expansion point of the map")
    if phi.available_order() < k:
        raise InputError(
            f"series trusted to order {phi.order}, cannot push a {k}-jet"
        )
    n = xi.dim
    # shifted coordinates of the representative disc: z_i(t) - p_i
    shifted = np.zeros((n, k + 1), dtype=complex)
    for j in range(1, k + 1):
        shifted[:, j] = xi.components[j - 1] / factorial(j)
    out = np.zeros((phi.n_out, k + 1), dtype=complex)
    for alpha, coeff in phi.terms.items():
        if sum(alpha) > k:
            continue
        mono = np.zeros(k + 1, dtype=complex)
        mono[0] = 1.0
        for i, power in enumerate(alpha):
            for _ in range(power):
                mono = _series_mul(mono, shifted[i], k)
        out += coeff[:, None] * mono[None, :]
    base = out[:, 0]
    comps = np.array(
        [factorial(j) * out[:, j] for j in range(1, k + 1)], dtype=complex
    )
    return JetVector(base, comps)


def _mv_mul(a: dict, b: dict, order: int) -> dict:
    out = {}
    for al, ca in a.items():
        da = sum(al)
        for be, cb in b.items():
            if da + sum(be) > order:
                continue
            key = tuple(x + y for x, y in zip(al, be))
            out[key] = out.get(key, 0.0 + 0.0j) + ca * cb
    return out


def compose_series(
    phi: AnalyticMapSeries, psi: AnalyticMapSeries, order: int
) -> AnalyticMapSeries:
    """Truncated series of phi o psi around the base point of psi.

    Requires psi(p) to equal the expansion point of phi; the result is
    trusted to ``order``, capped by what the factors support.
    """
    if phi.n_in != psi.n_out:
        raise InputError("inner map output dimension does not match outer input")
    if not np.allclose(psi.constant_term(), phi.p, atol=1e-10):
        raise InputError("expansion point of outer map must equal psi(base point)")
    if min(phi.available_order(), psi.available_order()) < order:
        raise InputError("factors are not trusted to the requested order")
    n_in = psi.n_in
    zero = (0,) * n_in
    # coordinates of psi shifted to vanish at the base point
    shifted = []
    for i in range(phi.n_in):
        d = {}
        for alpha, vec in psi.terms.items():
            if sum(alpha) > order:
                continue
            c = vec[i] - (phi.p[i] if alpha == zero else 0.0)
            if c != 0.0:
                d[alpha] = c
        shifted.append(d)
    acc = {}
    for alpha, coeff in phi.terms.items():
        if sum(alpha) > order:
            continue
        mono = {zero: 1.0 + 0.0j}
        for i, power in enumerate(alpha):
            for _ in range(power):
                mono = _mv_mul(mono, shifted[i], order)
        for key, c in mono.items():
            cur = acc.get(key)
            add = c * coeff
            acc[key] = add if cur is None else cur + add
    terms = {k: v for k, v in acc.items() if np.any(np.abs(v) > 0.0)}
    if not terms:
        terms = {zero: np.zeros(phi.n_out, dtype=complex)}
    return AnalyticMapSeries(psi.p, terms, order=order)

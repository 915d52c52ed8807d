"""Command-line front end.

Subcommands mirror the library: ``metric``/``yu``/``extremal`` run the
solver, ``stationary`` and ``pairing`` certify discs, ``blaschke`` builds
finite products, ``verify`` runs the metric property suite, ``spectrum``
dumps boundary Fourier data.  Output is canonical JSON (sorted keys, two
space indent) so runs with equal inputs are byte-identical.  Exit codes:
0 success, 1 bad input, 2 a certification or convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

import numpy as np

from .circle_analysis import fourier_transform
from .discs import (
    AnalyticDisc,
    blaschke_product,
    boundary_trace,
    disc_from_dict,
    disc_to_dict,
)
from .domains import boundary_distance_profile, convexity_probe, domain_from_dict
from .domains import make_ball, make_unit_disc
from .errors import (
    AliasRisk,
    AllZero,
    BadLambda,
    BasePointNotZero,
    DegenerateRay,
    InfeasibleAtZero,
    InputError,
    InvalidDisc,
    KdiscError,
    ModulusNotLessThanOne,
    NearZero,
    NonPositiveCoefficient,
    NonzeroWinding,
    NotCentered,
    NotCertifiedStationary,
    NotConverged,
    NotHolomorphic,
    NotOnBoundary,
    NotSelfMap,
    OutsideClosedDisc,
    OutsideDomain,
    ProbeFailed,
    ResidualAboveTolerance,
    VanishingGradient,
    ZeroFunction,
    ZeroJet,
)
from .jets import jet_from_dict
from .kobayashi import SolverConfig, kobayashi_k_metric, metric_property_suite, yu_metric
from .stationarity import (
    StationarityConfig,
    pairing_sum,
    scalar_stationarity_exact,
    stationarity_search,
)

_INPUT_ERRORS = (
    InputError,
    NearZero,
    AliasRisk,
    ZeroFunction,
    AllZero,
    InvalidDisc,
    OutsideClosedDisc,
    ModulusNotLessThanOne,
    BadLambda,
    NotCentered,
    NotSelfMap,
    NonPositiveCoefficient,
    OutsideDomain,
    ZeroJet,
    BasePointNotZero,
    InfeasibleAtZero,
    NotOnBoundary,
    VanishingGradient,
    DegenerateRay,
)

_CERT_ERRORS = (
    NonzeroWinding,
    ResidualAboveTolerance,
    ProbeFailed,
    NotConverged,
    NotCertifiedStationary,
    NotHolomorphic,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; route through the input-error path instead
    def error(self, message):
        raise InputError(message)


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.complexfloating, complex)):
        return [float(obj.real), float(obj.imag)]
    return obj


def _dumps(payload) -> str:
    return json.dumps(_plain(payload), indent=2, sort_keys=True) + "\n"


def _parse_json(text, field):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{field}: not valid JSON ({exc})") from None


def _resolve_domain(text):
    text = text.strip()
    if text.startswith("{"):
        return domain_from_dict(_parse_json(text, "domain"))
    if text == "disc":
        return make_unit_disc()
    m = re.fullmatch(r"ball(\d*)", text)
    if m:
        return make_ball(int(m.group(1)) if m.group(1) else 1)
    raise InputError(
        f"domain: unknown shortcut {text!r}; use disc, ballN, or inline JSON"
    )


def _resolve_disc(args) -> AnalyticDisc:
    if getattr(args, "blaschke", None):
        zeros = _parse_json(args.blaschke, "blaschke")
        return blaschke_product([_as_complex(z, "blaschke") for z in zeros])
    if getattr(args, "disc", None):
        return disc_from_dict(_parse_json(args.disc, "disc"))
    raise InputError("disc: provide --disc JSON or --blaschke zeros")


def _as_complex(v, field):
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise InputError(f"{field}: expected a number or [re, im] pair, got {v!r}")


def _solver_config(args) -> SolverConfig:
    base = SolverConfig()
    return SolverConfig(
        degree=args.degree if args.degree is not None else base.degree,
        grid_size=args.grid if args.grid is not None else base.grid_size,
        bisect_tol=args.tol if args.tol is not None else base.bisect_tol,
        margin=args.margin if args.margin is not None else base.margin,
        seed=args.seed if args.seed is not None else base.seed,
    )


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_metric(args):
    domain = _resolve_domain(args.domain)
    xi = jet_from_dict(_parse_json(args.jet, "jet"))
    cfg = _solver_config(args)
    res = kobayashi_k_metric(domain, xi, cfg)
    payload = {
        "command": "metric",
        "value": res.value,
        "lambda": res.lam,
        "extremal": disc_to_dict(res.extremal),
        "report": res.solver_report,
        "config": cfg.to_dict(),
    }
    return payload, 0


def _cmd_yu(args):
    domain = _resolve_domain(args.domain)
    p = np.asarray(
        [_as_complex(v, "p") for v in _parse_json(args.p, "p")], dtype=complex
    )
    v = np.asarray(
        [_as_complex(w, "v") for w in _parse_json(args.v, "v")], dtype=complex
    )
    cfg = _solver_config(args)
    res = yu_metric(domain, p, v, args.k, cfg)
    payload = {
        "command": "yu",
        "order": args.k,
        "value": res.value,
        "lambda": res.lam,
        "extremal": disc_to_dict(res.extremal),
        "report": res.solver_report,
        "config": cfg.to_dict(),
    }
    return payload, 0


def _cmd_extremal(args):
    domain = _resolve_domain(args.domain)
    xi = jet_from_dict(_parse_json(args.jet, "jet"))
    cfg = _solver_config(args)
    res = kobayashi_k_metric(domain, xi, cfg)
    prof = boundary_distance_profile(domain, res.extremal, grid_size=512)
    vals = prof.samples.real[:, 0]
    payload = {
        "command": "extremal",
        "value": res.value,
        "lambda": res.lam,
        "extremal": disc_to_dict(res.extremal),
        "jet_error": res.solver_report["jet_error"],
        "boundary_rho": {
            "max": float(np.max(vals)),
            "min": float(np.min(vals)),
            "mean": float(np.mean(vals)),
        },
        "config": cfg.to_dict(),
    }
    if args.csv:
        theta = prof.thetas
        _write_csv(
            args.csv,
            ["theta", "rho"],
            [[f"{t:.17g}", f"{r:.17g}"] for t, r in zip(theta, vals)],
        )
        payload["csv"] = args.csv
    return payload, 0


def _stationarity_config(args) -> StationarityConfig:
    base = StationarityConfig()
    return StationarityConfig(
        grid_size=args.grid if args.grid is not None else base.grid_size,
        stat_tol=args.tol if args.tol is not None else base.stat_tol,
        seed=args.seed if args.seed is not None else base.seed,
    )


def _certify(args, domain, f, k):
    method = getattr(args, "method", "auto")
    if method == "exact" or (method == "auto" and domain.dim == 1):
        tol = args.tol if args.tol is not None else 1e-10
        grid = args.grid if args.grid is not None else 512
        return scalar_stationarity_exact(f, k, grid_size=grid, tol=tol)
    return stationarity_search(domain, f, k, _stationarity_config(args))


def _cmd_stationary(args):
    domain = _resolve_domain(args.domain)
    f = _resolve_disc(args)
    cert = _certify(args, domain, f, args.k)
    payload = {
        "command": "stationary",
        "certified": True,
        "certificate": cert.to_dict(),
    }
    return payload, 0


def _cmd_blaschke(args):
    if not args.blaschke:
        raise InputError("blaschke: --blaschke zeros are required")
    f = _resolve_disc(args)
    payload = {
        "command": "blaschke",
        "degree": f.degree,
        "value_at_zero": complex(f.eval(np.array(0.0 + 0.0j))[0]),
        "disc": disc_to_dict(f),
    }
    return payload, 0


def _cmd_pairing(args):
    domain = _resolve_domain(args.domain)
    f = _resolve_disc(args)
    cert = _certify(args, domain, f, args.k)
    lams = [args.lam] if args.lam is not None else [0.5, 0.7, 0.9, 0.99, 1.0]
    table = {}
    for lam in lams:
        s = pairing_sum(f, cert.lift, lam, args.k)
        table[f"{lam:g}"] = {"S": s, "product": (1.0 - lam) * s}
    payload = {
        "command": "pairing",
        "order": args.k,
        "residual": cert.residual,
        "pairing": table,
    }
    return payload, 0


def _cmd_verify(args):
    domain = _resolve_domain(args.domain)
    cfg = _solver_config(args)
    suite = metric_property_suite(
        domain,
        samples=args.samples,
        cfg=cfg,
        seed=args.seed if args.seed is not None else 0,
    )
    probe = convexity_probe(domain, seed=args.seed if args.seed is not None else 0)
    payload = {
        "command": "verify",
        "suite": suite,
        "convexity": probe,
        "config": cfg.to_dict(),
    }
    code = 0 if suite["pass"] and not probe["claim_contradicted"] else 2
    return payload, code


def _cmd_spectrum(args):
    f = _resolve_disc(args)
    grid = args.grid if args.grid is not None else 512
    u = boundary_trace(f, grid)
    spec = fourier_transform(u)
    C = spec.coefficients
    scale = float(np.max(np.abs(C))) or 1.0
    rows = []
    for i, j in enumerate(spec.indices):
        if np.max(np.abs(C[i])) > 1e-14 * scale:
            rows.append({"index": int(j), "c": [_plain(complex(v)) for v in C[i]]})
    payload = {
        "command": "spectrum",
        "grid_size": grid,
        "dim": u.dim,
        "negative_mass": spec.negative_mass(),
        "mass": spec.mass(),
        "coefficients": rows,
    }
    if args.csv:
        header = ["index"]
        for i in range(u.dim):
            header += [f"re{i}", f"im{i}"]
        table = []
        for i, j in enumerate(spec.indices):
            row = [str(int(j))]
            for v in C[i]:
                row += [f"{v.real:.17g}", f"{v.imag:.17g}"]
            table.append(row)
        _write_csv(args.csv, header, table)
        payload["csv"] = args.csv
    return payload, 0


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kdisc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, *, domain=True, jet=False, disc=False, k=False, solver=False):
        if domain:
            sp.add_argument("--domain", default="disc", help="disc, ballN, or JSON")
        if jet:
            sp.add_argument("--jet", required=True, help="jet JSON")
        if disc:
            sp.add_argument("--disc", help="disc JSON")
            sp.add_argument("--blaschke", help="JSON list of zeros")
        if k:
            sp.add_argument("--k", type=int, required=True, help="jet order")
        sp.add_argument("--grid", type=int, default=None, help="boundary grid size")
        sp.add_argument("--tol", type=float, default=None, help="primary tolerance")
        sp.add_argument("--seed", type=int, default=None, help="rng seed")
        if solver:
            sp.add_argument("--degree", type=int, default=None, help="search degree")
            sp.add_argument("--margin", type=float, default=None, help="witness margin")
        sp.add_argument("--out", default=None, help="also write the JSON here")
        sp.add_argument("--csv", default=None, help="write tabular data here")

    sp = sub.add_parser("metric", help="Kobayashi k-metric of a jet")
    common(sp, jet=True, solver=True)
    sp.set_defaults(func=_cmd_metric)

    sp = sub.add_parser("yu", help="higher-order metric of a direction vector")
    common(sp, k=True, solver=True)
    sp.add_argument("--p", required=True, help="base point JSON list")
    sp.add_argument("--v", required=True, help="direction JSON list")
    sp.set_defaults(func=_cmd_yu)

    sp = sub.add_parser("extremal", help="extremal disc with boundary profile")
    common(sp, jet=True, solver=True)
    sp.set_defaults(func=_cmd_extremal)

    sp = sub.add_parser("stationary", help="certify k-stationarity of a disc")
    common(sp, disc=True, k=True)
    sp.add_argument(
        "--method", choices=["auto", "exact", "search"], default="auto"
    )
    sp.set_defaults(func=_cmd_stationary)

    sp = sub.add_parser("blaschke", help="build a finite Blaschke product")
    common(sp, domain=False, disc=True)
    sp.set_defaults(func=_cmd_blaschke)

    sp = sub.add_parser("pairing", help="pairing sums S(lambda) of a certified disc")
    common(sp, disc=True, k=True)
    sp.add_argument("--method", choices=["auto", "exact", "search"], default="auto")
    sp.add_argument("--lam", type=float, default=None, help="single lambda in (0,1]")
    sp.set_defaults(func=_cmd_pairing)

    sp = sub.add_parser("verify", help="metric property suite on a domain")
    common(sp, solver=True)
    sp.add_argument("--samples", type=int, default=5, help="draws per property")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("spectrum", help="boundary Fourier coefficients of a disc")
    common(sp, domain=False, disc=True)
    sp.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload, code = args.func(args)
    except _CERT_ERRORS as exc:
        detail = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, NonzeroWinding):
            detail["winding"] = exc.winding
        if isinstance(exc, ResidualAboveTolerance):
            detail["best_residual"] = exc.best_residual
            detail["tol"] = exc.tol
        if isinstance(exc, ProbeFailed):
            detail["mu"] = exc.mu
            if exc.witness is not None:
                detail["witness"] = exc.witness
        sys.stderr.write(_dumps(detail))
        return 2
    except _INPUT_ERRORS as exc:
        sys.stderr.write(
            _dumps({"error": type(exc).__name__, "message": str(exc)})
        )
        return 1
    text = _dumps(payload)
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: solve, scan, critical, fluct, oracle.

All numeric output is formatted to 12 significant digits so that repeated
runs and CSV/JSON re-encodings are byte-stable and diff-friendly.  JSON
output is a single object with "params", "results", and "residuals" keys.

Exit codes: 0 success, 2 invalid input or regime, 3 undefined at the
requested point (e.g. fluctuation table in the normal phase).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .model import (
    CriticalBetaUndefinedError,
    DegenerateBoundaryError,
    DimensionCapError,
    InvalidRegimeError,
    ModelParams,
)
from . import mean_field as mf
from . import fluctuations as fl
from . import lattice as lat
from . import operators as ops

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNDEFINED = 3

SCAN_FIELDS = [
    "U", "beta", "lambda_mod", "rho0", "eta", "xi_plus", "xi_minus",
    "hbar_plus", "hbar_minus", "phase", "error",
]
FLUCT_FIELDS = [
    "pair", "generator", "frequency_class", "frequency", "hbar", "variance",
    "n", "max_cross_moment",
]
ORACLE_FIELDS = [
    "n_sites", "zero_mode_density", "sigma_z_per_site", "energy_density",
    "residual_type_exchange", "residual_particle_hole", "residual_gauge",
    "mf_rho0",
]


def fmt(x) -> str:
    """Fixed 12-significant-digit rendering (regression-stable)."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return f"{x:.12g}"
    return str(x)


def jnum(x: float):
    """Float rounded through the 12-digit formatting so JSON and CSV agree."""
    if math.isinf(x):
        return "inf"
    return float(f"{x:.12g}")


def _parse_beta(value: str) -> float:
    v = value.strip().lower()
    if v in ("inf", "infinity"):
        return math.inf
    return float(value)


def _parse_values(text: str) -> list[float]:
    """Grid syntax: comma list '0.1,0.2' or linspace 'start:stop:count'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range syntax is start:stop:count, got {text!r}")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError("count must be >= 1")
        return [float(v) for v in np.linspace(start, stop, count)]
    return [_parse_beta(v) for v in text.split(",") if v.strip()]


def _resolve_beta(args) -> float:
    if args.temperature is not None:
        if args.temperature == 0.0:
            return math.inf
        if args.temperature < 0.0:
            raise ValueError(f"temperature must be >= 0, got {args.temperature}")
        return 1.0 / args.temperature
    if args.beta is None:
        raise ValueError("one of --beta or --temperature is required")
    return args.beta


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_json(payload: dict, out_path: str | None) -> None:
    _write(json.dumps(payload, indent=2), out_path)


def _emit_csv(fields: list[str], rows: list[dict], out_path: str | None) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: fmt(row.get(k, "")) for k in fields})
    _write(buf.getvalue(), out_path)


def _params_dict(params: ModelParams) -> dict:
    return {"t": jnum(params.t), "U": jnum(params.U), "beta": jnum(params.beta)}


def _point_scalars(params: ModelParams, sol: mf.MeanFieldSolution) -> dict:
    """Closed-form per-point scalars for scan rows (limit values when normal)."""
    eta = sol.selected_eta
    xi_plus, xi_minus = eta + params.U, eta - params.U
    if eta > 0.0 and not params.is_ground_state:
        hbar_plus = (4.0 * xi_minus / eta) * math.tanh(params.beta * xi_plus / 2.0)
        hbar_minus = (4.0 * xi_plus / eta) * math.tanh(params.beta * xi_minus / 2.0)
    else:
        hbar_plus = hbar_minus = 0.0
    return {
        "lambda_mod": sol.lambda_mod,
        "rho0": sol.rho0,
        "eta": eta,
        "xi_plus": xi_plus,
        "xi_minus": xi_minus,
        "hbar_plus": hbar_plus,
        "hbar_minus": hbar_minus,
        "phase": sol.phase,
    }


def cmd_solve(args) -> int:
    params = ModelParams(t=args.t, U=args.U, beta=_resolve_beta(args))
    sol = mf.solve_gap(params)
    if params.is_ground_state:
        self_consistency = 0.0
    else:
        rho = ops.gibbs_density(params, sol.lambda_mod)
        traced = ops.expectation(rho, ops.pauli_site_operator(1, "minus"))
        self_consistency = abs(traced - sol.lambda_mod)
    payload = {
        "params": _params_dict(params),
        "results": {
            "lambda_mod": jnum(sol.lambda_mod),
            "eta": jnum(sol.selected_eta),
            "rho0": jnum(sol.rho0),
            "phase": sol.phase,
            "regime": sol.regime,
            "fixed_points": [jnum(r) for r in sol.fixed_points],
            "free_energy": jnum(sol.free_energy),
        },
        "residuals": {
            "gap": jnum(sol.gap_residual),
            "self_consistency": jnum(self_consistency),
        },
    }
    _emit_json(payload, args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    u_values = _parse_values(args.U)
    beta_values = [_parse_beta(str(b)) if not isinstance(b, float) else b for b in _parse_values(args.beta)]
    if not u_values or not beta_values:
        raise ValueError("scan grids must be nonempty")
    rows = []
    failures = 0
    for u in u_values:          # deterministic order: U outer, beta inner
        for beta in beta_values:
            row = {"U": u, "beta": beta, "error": ""}
            try:
                params = ModelParams(t=args.t, U=u, beta=beta)
                sol = mf.solve_gap(params)
                row.update(_point_scalars(params, sol))
            except Exception as exc:  # per-row failures stay in the table
                failures += 1
                row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
    if failures == len(rows):
        sys.stderr.write("scan: all rows failed\n")
        return EXIT_INVALID
    if args.format == "csv":
        _emit_csv(SCAN_FIELDS, rows, args.out)
    else:
        results = []
        for row in rows:
            item = {k: (jnum(v) if isinstance(v, float) else v) for k, v in row.items()}
            results.append(item)
        payload = {
            "params": {"t": jnum(args.t), "U_values": [jnum(u) for u in u_values],
                       "beta_values": [jnum(b) for b in beta_values]},
            "results": results,
            "residuals": {"failed_rows": failures},
        }
        _emit_json(payload, args.out)
    return EXIT_OK


def cmd_critical(args) -> int:
    kappa = mf.tricritical_kappa()
    kappa_residual = abs(
        math.log((1 + 2 * kappa) / (1 - 2 * kappa)) - 4 * kappa / (1 - 2 * kappa * kappa)
    )
    results: dict = {"kappa": jnum(kappa)}
    if args.t is not None and args.U is not None:
        params = ModelParams(t=args.t, U=args.U, beta=1.0)
        boundary = mf.phase_boundary(params)
        results["beta_c"] = jnum(boundary.beta_c) if boundary.beta_c is not None else "undefined"
        results["case_a_possible"] = boundary.case_a_possible
        results["second_order_guaranteed"] = boundary.second_order_guaranteed
        results["regime"] = mf.classify_regime(params)
        params_out = {"t": jnum(args.t), "U": jnum(args.U)}
    else:
        params_out = {}
    payload = {
        "params": params_out,
        "results": results,
        "residuals": {"kappa_equation": jnum(kappa_residual)},
    }
    _emit_json(payload, args.out)
    return EXIT_OK


def cmd_fluct(args) -> int:
    params = ModelParams(t=args.t, U=args.U, beta=_resolve_beta(args))
    sol = mf.solve_gap(params)
    if not sol.condensed:
        sys.stderr.write(
            f"fluct: point (t={args.t}, U={args.U}, beta={params.beta}) is not "
            "condensed; fluctuation pairs are degenerate there\n"
        )
        return EXIT_UNDEFINED
    pairs = fl.build_all_pairs(params, sol.lambda_mod)
    rho = ops.gibbs_density(params, sol.lambda_mod)
    cross = fl.max_cross_moment(pairs, rho)
    ccr_worst = max(fl.ccr_residual(p, rho) for p in pairs)
    rows = [
        {
            "pair": p.id.label,
            "generator": p.id.generator,
            "frequency_class": p.id.frequency_class,
            "frequency": p.frequency,
            "hbar": p.hbar,
            "variance": p.variance,
            "n": p.n,
            "max_cross_moment": cross,
        }
        for p in pairs
    ]
    if args.format == "csv":
        _emit_csv(FLUCT_FIELDS, rows, args.out)
    else:
        payload = {
            "params": _params_dict(params),
            "results": {
                "lambda_mod": jnum(sol.lambda_mod),
                "pairs": [{k: (jnum(v) if isinstance(v, float) else v) for k, v in row.items()}
                          for row in rows],
                "max_cross_moment": jnum(cross),
            },
            "residuals": {"ccr_identity": jnum(ccr_worst)},
        }
        _emit_json(payload, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    beta = _resolve_beta(args)
    if math.isinf(beta):
        raise ValueError("oracle requires finite beta")
    params = ModelParams(t=args.t, U=args.U, beta=beta)
    mf_rho0 = mf.solve_gap(params).rho0
    rows = []
    for n in range(1, args.n_max + 1):
        spec = lat.LatticeSpec(n_sites=n, params=params, site_cap=args.site_cap)
        obs = lat.lattice_observables(spec)
        rows.append(
            {
                "n_sites": n,
                "zero_mode_density": obs.zero_mode_density,
                "sigma_z_per_site": obs.sigma_z_per_site,
                "energy_density": obs.energy_density,
                "residual_type_exchange": obs.symmetry_residuals["type_exchange"],
                "residual_particle_hole": obs.symmetry_residuals["particle_hole"],
                "residual_gauge": obs.symmetry_residuals["gauge"],
                "mf_rho0": mf_rho0,
            }
        )
    if args.format == "csv":
        _emit_csv(ORACLE_FIELDS, rows, args.out)
    else:
        payload = {
            "params": _params_dict(params),
            "results": [
                {k: (jnum(v) if isinstance(v, float) else v) for k, v in row.items()}
                for row in rows
            ],
            "residuals": {
                "max_symmetry": jnum(max(
                    max(r["residual_type_exchange"], r["residual_particle_hole"], r["residual_gauge"])
                    for r in rows
                )),
            },
        }
        _emit_json(payload, args.out)
    return EXIT_OK


def _add_point_flags(p: argparse.ArgumentParser, need_beta: bool = True) -> None:
    p.add_argument("--t", type=float, required=True, help="hopping amplitude (physical regime t < 0)")
    p.add_argument("--U", type=float, required=True, help="inter-type coupling, >= 0")
    if need_beta:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--beta", type=_parse_beta, help="inverse temperature ('inf' for T = 0)")
        group.add_argument("--temperature", type=float, help="temperature (k_B = 1); 0 means T = 0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcb2",
        description="Two-type hard-core boson mean-field model: gap equation, "
                    "phase diagram, plasmon fluctuations, finite-lattice oracle.",
    )
    parser.add_argument("--version", action="version", version=f"hcb2 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve the gap equation at one point")
    _add_point_flags(p_solve)
    p_solve.add_argument("--out", default=None, help="output file (default: stdout)")
    p_solve.set_defaults(func=cmd_solve)

    p_scan = sub.add_parser("scan", help="phase-diagram scan over a (U, beta) grid")
    p_scan.add_argument("--t", type=float, required=True)
    p_scan.add_argument("--U", required=True,
                        help="U grid: comma list '0.1,0.2' or range 'start:stop:count'")
    p_scan.add_argument("--beta", required=True,
                        help="beta grid: comma list or range 'start:stop:count'")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--out", default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_crit = sub.add_parser("critical", help="critical temperature and tricritical ratio")
    p_crit.add_argument("--t", type=float, default=None)
    p_crit.add_argument("--U", type=float, default=None)
    p_crit.add_argument("--out", default=None)
    p_crit.set_defaults(func=cmd_critical)

    p_fluct = sub.add_parser("fluct", help="fluctuation-pair table at a condensed point")
    _add_point_flags(p_fluct)
    p_fluct.add_argument("--format", choices=("csv", "json"), default="json")
    p_fluct.add_argument("--out", default=None)
    p_fluct.set_defaults(func=cmd_fluct)

    p_oracle = sub.add_parser("oracle", help="finite-lattice diagonalization vs mean field")
    _add_point_flags(p_oracle)
    p_oracle.add_argument("--n-max", type=int, default=lat.DEFAULT_SITE_CAP,
                          help="largest lattice size (default 5)")
    p_oracle.add_argument("--site-cap", type=int, default=lat.DEFAULT_SITE_CAP,
                          help="hard cap on lattice size; raising past 5 is a memory opt-in")
    p_oracle.add_argument("--format", choices=("csv", "json"), default="csv")
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidRegimeError, DimensionCapError, DegenerateBoundaryError,
            CriticalBetaUndefinedError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())

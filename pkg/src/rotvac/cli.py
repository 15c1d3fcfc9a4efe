"""Command-line surface: parameter sweeps and validation checks emitting
machine-readable tables.

Tables are comma-separated with a '#'-prefixed metadata preamble (config and
seed echo); --format json switches to a structured document.  Exit code is 0
iff no row or check is flagged.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional

import numpy as np

from . import __version__
from . import cf_continuous as cfc
from . import cf_discrete as cfd
from . import montecarlo as mc
from . import thermo
from .constants import GEV_PER_FERMI_IN_J_PER_M, NATURAL, SI
from .kinematics import (LuminalOrbitError, RotationParams, fermi_walker_tetrad,
                         frenet_serret_tetrad)
from .numerics import QuadratureSpec
from .validation import KNOWN_FAILING, run_suite


def _constants(args):
    return NATURAL if args.units == "natural" else SI


def _params(args) -> RotationParams:
    const = _constants(args)
    if args.beta is not None:
        return RotationParams.from_beta(args.omega, args.beta, const)
    return RotationParams(omega=args.omega, radius=args.radius, constants=const)


def _spec(args) -> QuadratureSpec:
    if args.tol is None:
        return QuadratureSpec()
    return QuadratureSpec(rel_tol=args.tol, abs_tol=args.tol * 1e-4)


def _emit(args, meta: dict, header: List[str], rows: List[list], flagged: bool) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.format == "json":
            json.dump({"meta": meta, "columns": header, "rows": rows}, out, indent=2)
            out.write("\n")
        else:
            out.write(f"# rotvac {args.command} v{__version__}\n")
            for key in sorted(meta):
                out.write(f"# {key} = {meta[key]}\n")
            out.write(",".join(header) + "\n")
            for row in rows:
                out.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if args.out:
            out.close()
    return 1 if flagged else 0


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12e}"
    return str(v)


def _meta_common(args, params: Optional[RotationParams] = None) -> dict:
    meta = {"units": args.units}
    if params is not None:
        meta.update(omega=params.omega, radius=params.radius,
                    beta=params.beta, gamma=params.gamma)
    if getattr(args, "seed", None) is not None:
        meta["seed"] = args.seed
    return meta


def cmd_tetrad(args) -> int:
    params = _params(args)
    taus = np.linspace(args.tau_min, args.tau_max, args.tau_steps)
    build = fermi_walker_tetrad if args.kind == "fermi-walker" else frenet_serret_tetrad
    header = ["tau"] + [f"mu{a}_{c}" for a in range(1, 5) for c in "xyzt"] + ["residual"]
    rows, flagged = [], False
    for tau in taus:
        t = build(params, float(tau))
        resid = t.orthonormality_residual()
        rows.append([float(tau)] + [float(v) for v in t.matrix().ravel()] + [resid])
        flagged |= resid > 1e-10
    meta = _meta_common(args, params)
    meta["kind"] = args.kind
    return _emit(args, meta, header, rows, flagged)


def cmd_cf(args) -> int:
    params = _params(args)
    const = params.constants
    pair = (int(args.pair[0]), int(args.pair[1]))
    deltas = np.linspace(args.delta_min, args.delta_max, args.delta_steps)
    spec = _spec(args)
    header = ["delta", "method", "value", "stat_error", "flag"]
    rows, flagged = [], False
    ms = None
    if args.method in ("monte-carlo", "all") and args.kind != "scalar":
        if args.spectrum == "discrete":
            ms = mc.build_mode_set(params, n_max=args.n_max,
                                   n_theta=args.mc_theta, n_phi=args.mc_phi)
        else:
            ms = mc.build_mode_set(params, spectrum="continuous",
                                   omega_cutoff=args.n_max * params.omega,
                                   n_radial=4 * args.n_max,
                                   n_theta=args.mc_theta, n_phi=args.mc_phi)
    methods = (["closed-form", "quadrature"] if args.method == "all" else [args.method])
    if args.method == "all" and ms is not None:
        methods.append("monte-carlo")
    for delta in deltas:
        tau2 = float(delta) / (params.omega * params.gamma)
        for method in methods:
            try:
                if args.kind == "scalar":
                    if args.spectrum == "discrete":
                        cf = cfd.scalar_cf_discrete(0.0, tau2, params, spec)
                    elif method == "quadrature":
                        cf = cfc.scalar_cf_quadrature(0.0, tau2, params, spec)
                    else:
                        cf = cfc.scalar_cf_continuous(0.0, tau2, params)
                elif method == "monte-carlo":
                    cf = mc.empirical_cf(pair, args.kind, 0.0, tau2, params, ms,
                                         n_seeds=args.seeds, seed=args.seed)
                elif args.spectrum == "discrete":
                    if pair != (1, 1) or args.kind != "EE":
                        raise ValueError("discrete spectrum implements the (1,1) EE pair")
                    cf = cfd.em_cf_discrete(0.0, tau2, params, spec)
                else:
                    cf = cfc.em_cf_continuous(pair, args.kind, 0.0, tau2, params, method, spec)
                rows.append([float(delta), cf.method, cf.value,
                             cf.stat_error if cf.stat_error is not None else "", "ok"])
            except (cfc.CoincidenceError, cfd.ResonanceError, ValueError) as exc:
                rows.append([float(delta), method, "", "", f"error: {exc}"])
                flagged = True
    meta = _meta_common(args, params)
    meta.update(kind=args.kind, pair=f"{pair[0]}{pair[1]}", spectrum=args.spectrum)
    if ms is not None:
        meta["mc_note"] = ("band-limited estimate in the energy-density "
                           "normalization (2x the correlation convention)")
        meta["mc_modes"] = ms.mode_count
    return _emit(args, meta, header, rows, flagged)


def cmd_spectrum(args) -> int:
    params = _params(args)
    spec = _spec(args)
    phases = np.linspace(args.phase_min, args.phase_max, args.phase_steps)
    header = ["phase", "ladder_sum_closed", "zero_point_part", "thermal_part",
              "total", "rel_consistency", "flag"]
    rows, flagged = [], False
    for ph in phases:
        try:
            closed = cfd.cubic_ladder_sum_closed(float(ph))
            split = cfd.cubic_ladder_split(float(ph), spec=spec)
            rel = abs(split.total - closed) / abs(closed)
            rows.append([float(ph), closed, split.zero_point_part,
                         split.thermal_part, split.total, rel, "ok"])
            flagged |= rel > 1e-8
        except cfd.ResonanceError as exc:
            rows.append([float(ph), "", "", "", "", "", f"error: {exc}"])
            flagged = True
    meta = _meta_common(args, params)
    meta["T_rot"] = cfd.rotation_temperature(params)
    return _emit(args, meta, header, rows, flagged)


def cmd_energy(args) -> int:
    params = _params(args)
    rep = (thermo.scalar_energy_density(params, args.n_max)
           if args.field == "scalar" else thermo.em_energy_density(params, args.n_max))
    header = ["quantity", "value"]
    rows = [
        ["field_kind", rep.field_kind],
        ["T_rot", rep.T_rot],
        ["w_zp_cutoff", rep.w_zp_cutoff],
        ["w_thermal", rep.w_thermal],
        ["w_total_cutoff", rep.w_total_cutoff],
        ["anisotropy_factor", rep.anisotropy_factor],
        ["cutoff_n_max", rep.cutoff_n_max],
        ["mixed_moment_residual", rep.mixed_moment_residual],
    ]
    return _emit(args, _meta_common(args, params), header, rows, False)


def cmd_force_curve(args) -> int:
    const = _constants(args)
    params = RotationParams(omega=args.omega, radius=0.0, constants=const)
    r0 = const.c / args.omega
    rs = np.linspace(args.r_min * r0, args.r_max * r0, args.r_steps)
    header = ["r", "x", "w_thermal", "f_vac", "F_sphere", "F_gev_per_fermi", "flag"]
    rows, flagged = [], False
    for r in rs:
        try:
            pt = thermo.vacuum_force_density(params, float(r), sphere_radius=args.sphere_radius)
            wt = thermo.em_thermal_density_at(args.omega, float(r), const)
            F = pt.F_sphere if pt.F_sphere is not None else ""
            Fg = (pt.F_sphere / GEV_PER_FERMI_IN_J_PER_M) if pt.F_sphere is not None else ""
            rows.append([float(r), pt.x, wt, pt.f_vac, F, Fg, "ok"])
        except LuminalOrbitError as exc:
            rows.append([float(r), float(r) / r0, "", "", "", "", f"rejected: {exc}"])
            flagged = True
    meta = _meta_common(args, params)
    meta.update(r0=r0, T_rot=cfd.rotation_temperature(params),
                sphere_radius=args.sphere_radius)
    return _emit(args, meta, header, rows, flagged)


def cmd_estimate_hadron(args) -> int:
    est = thermo.hadron_estimates(a_sphere=args.a, r0=args.r0, x=1.0 - args.one_minus_x)
    header = ["quantity", "value"]
    rows = [
        ["x", est.x],
        ["force_newton", est.force_newton],
        ["force_gev_per_fermi", est.force_gev_per_fermi],
        ["prefactor_j_per_m", est.prefactor_j_per_m],
        ["f_vac", est.f_vac],
        ["T_rot", est.T_rot],
        ["quark_gluon_plasma_T_reference", thermo.QUARK_GLUON_PLASMA_T],
    ]
    meta = {"a": args.a, "r0": args.r0, "one_minus_x": args.one_minus_x, "units": "SI"}
    return _emit(args, meta, header, rows, False)


def cmd_mc_validate(args) -> int:
    params = _params(args)
    ms = mc.build_mode_set(params, n_max=args.n_max, n_theta=args.mc_theta, n_phi=args.mc_phi)
    est = mc.empirical_energy_density(params, ms, n_seeds=args.seeds, seed=args.seed,
                                      n_workers=args.workers)
    rep = thermo.em_energy_density(params, args.n_max)
    header = ["check", "measured", "target", "pull_or_flag"]
    rows, flagged = [], False
    pull = abs(est.w - rep.w_zp_cutoff) / est.w_err
    rows.append(["w_vs_truncated_ladder", est.w, rep.w_zp_cutoff, pull])
    flagged |= pull > 3.0
    for i in range(3):
        p = abs(est.lab_e2[i] - est.lab_h2[i]) / math.sqrt(
            est.lab_e2_err[i] ** 2 + est.lab_h2_err[i] ** 2)
        rows.append([f"lab_E{i+1}^2_vs_H{i+1}^2", est.lab_e2[i], est.lab_h2[i], p])
        flagged |= p > 3.0
    mixed_pull = abs(est.mixed) / est.mixed_err
    rows.append(["mixed_moment_null", est.mixed, 0.0, mixed_pull])
    flagged |= mixed_pull > 3.0
    b = mc.empirical_energy_density(params, ms, n_seeds=args.seeds, seed=args.seed,
                                    n_workers=max(2, args.workers))
    same = est.w == b.w
    rows.append(["worker_determinism", est.w, b.w, "ok" if same else "MISMATCH"])
    flagged |= not same
    meta = _meta_common(args, params)
    meta["manifest"] = json.dumps(mc.run_manifest(params, ms, args.seeds, args.seed))
    return _emit(args, meta, header, rows, flagged)


def cmd_validate(args) -> int:
    results = run_suite(args.suite, seed=args.seed, sigma_perturb=args.sigma_perturb)
    header = ["check", "status", "measured", "target", "tolerance", "detail"]
    rows = []
    n_fail = 0
    for r in results:
        status = "pass" if r.passed else ("known-fail" if r.name in KNOWN_FAILING else "FAIL")
        if not r.passed:
            n_fail += 1
        rows.append([r.name, status, r.measured, r.target, r.tolerance, r.detail])
    meta = {"suite": args.suite, "seed": args.seed, "checks": len(results),
            "failures": n_fail, "known_failing": ",".join(KNOWN_FAILING)}
    return _emit(args, meta, header, rows, n_fail > 0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotvac",
                                description="rotating zero-point radiation toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, motion=True):
        sp.add_argument("--units", choices=("SI", "natural"), default="natural")
        sp.add_argument("--tol", type=float, default=None, help="quadrature relative tolerance")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        if motion:
            sp.add_argument("--omega", type=float, default=1.0)
            group = sp.add_mutually_exclusive_group()
            group.add_argument("--radius", type=float, default=0.0)
            group.add_argument("--beta", type=float, default=None)

    sp = sub.add_parser("tetrad", help="tetrad components and orthonormality residuals")
    common(sp)
    sp.add_argument("--kind", choices=("frenet-serret", "fermi-walker"), default="frenet-serret")
    sp.add_argument("--tau-min", type=float, default=0.0)
    sp.add_argument("--tau-max", type=float, default=6.0)
    sp.add_argument("--tau-steps", type=int, default=13)
    sp.set_defaults(func=cmd_tetrad)

    sp = sub.add_parser("cf", help="correlation functions vs angular lag")
    common(sp)
    sp.add_argument("--kind", choices=("EE", "HH", "EH", "scalar"), default="EE")
    sp.add_argument("--pair", default="11", help="component pair, e.g. 11")
    sp.add_argument("--spectrum", choices=("continuous", "discrete"), default="continuous")
    sp.add_argument("--method", choices=("closed-form", "quadrature", "monte-carlo", "all"),
                    default="closed-form")
    sp.add_argument("--delta-min", type=float, default=0.5)
    sp.add_argument("--delta-max", type=float, default=5.0)
    sp.add_argument("--delta-steps", type=int, default=10)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--seeds", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mc-theta", type=int, default=16)
    sp.add_argument("--mc-phi", type=int, default=32)
    sp.set_defaults(func=cmd_cf)

    sp = sub.add_parser("spectrum", help="ladder sums and their zero-point/thermal split")
    common(sp)
    sp.add_argument("--phase-min", type=float, default=0.5)
    sp.add_argument("--phase-max", type=float, default=6.0)
    sp.add_argument("--phase-steps", type=int, default=12)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("energy", help="energy density report")
    common(sp)
    sp.add_argument("--field", choices=("em", "scalar"), default="em")
    sp.add_argument("--n-max", type=int, default=10)
    sp.set_defaults(func=cmd_energy)

    sp = sub.add_parser("force-curve", help="vacuum force vs orbit radius")
    common(sp, motion=False)
    sp.add_argument("--omega", type=float, required=True)
    sp.add_argument("--r-min", type=float, default=0.0, help="in units of r0 = c/omega")
    sp.add_argument("--r-max", type=float, default=1.2, help="in units of r0")
    sp.add_argument("--r-steps", type=int, default=25)
    sp.add_argument("--sphere-radius", type=float, default=None)
    sp.set_defaults(func=cmd_force_curve, units="SI")

    sp = sub.add_parser("estimate-hadron", help="hadron-scale force and temperature")
    sp.add_argument("--a", type=float, default=1e-18, help="particle radius, m")
    sp.add_argument("--r0", type=float, default=1e-15, help="limit radius c/omega, m")
    sp.add_argument("--one-minus-x", type=float, default=1e-6)
    sp.add_argument("--out", default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_estimate_hadron)

    sp = sub.add_parser("mc-validate", help="Monte Carlo cross-checks")
    common(sp)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--seeds", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--mc-theta", type=int, default=16)
    sp.add_argument("--mc-phi", type=int, default=32)
    sp.set_defaults(func=cmd_mc_validate)

    sp = sub.add_parser("validate", help="run the acceptance checks")
    sp.add_argument("--suite", choices=("quick", "full"), default="quick")
    sp.add_argument("--seed", type=int, default=20240817)
    sp.add_argument("--sigma-perturb", type=float, default=1.0,
                    help="multiply the Stefan-Boltzmann constant (negative control)")
    sp.add_argument("--out", default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_validate)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, LuminalOrbitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Sweep the vacuum-force curve over orbit radius for several angular
velocities and write one CSV per omega.

Usage:
    python scripts/force_curve_sweep.py --omegas 1e3 1e6 1e9 --points 200 --outdir out_force
"""

import argparse
from pathlib import Path

import numpy as np

from rotvac.cf_discrete import rotation_temperature
from rotvac.constants import SI
from rotvac.kinematics import RotationParams
from rotvac.thermo import em_thermal_density_at, vacuum_force_density


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--omegas", type=float, nargs="+", default=[1e3, 1e6, 1e9])
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--x-max", type=float, default=0.999)
    ap.add_argument("--outdir", default="out_force")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for omega in args.omegas:
        params = RotationParams(omega=omega, radius=0.0, constants=SI)
        r0 = SI.c / omega
        xs = np.linspace(0.0, args.x_max, args.points)
        rows = []
        for x in xs:
            pt = vacuum_force_density(params, float(x) * r0)
            rows.append((pt.r, pt.x, em_thermal_density_at(omega, pt.r), pt.f_vac))
        path = outdir / f"force_curve_omega_{omega:.3e}.csv"
        with path.open("w") as fh:
            fh.write(f"# omega = {omega}\n# r0 = {r0}\n")
            fh.write(f"# T_rot = {rotation_temperature(params)}\n")
            fh.write("r,x,w_thermal,f_vac\n")
            for row in rows:
                fh.write(",".join(f"{v:.12e}" for v in row) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

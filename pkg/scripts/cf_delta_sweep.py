#!/usr/bin/env python3
"""Correlation functions against angular lag for a set of orbital speeds.

Writes one CSV per beta holding the continuous closed form, the periodic
(harmonic-ladder) value, and the scalar-field closed form on a common lag
grid, in natural units.

Usage:
    python scripts/cf_delta_sweep.py --betas 0.1 0.5 0.9 --outdir out_cf
"""

import argparse
from pathlib import Path

import numpy as np

from rotvac.cf_continuous import em_cf_continuous, scalar_cf_continuous
from rotvac.cf_discrete import ResonanceError, em_cf_discrete
from rotvac.constants import NATURAL
from rotvac.kinematics import RotationParams


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--betas", type=float, nargs="+", default=[0.1, 0.5, 0.9])
    ap.add_argument("--delta-min", type=float, default=0.2)
    ap.add_argument("--delta-max", type=float, default=6.0)
    ap.add_argument("--points", type=int, default=120)
    ap.add_argument("--outdir", default="out_cf")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for beta in args.betas:
        params = RotationParams.from_beta(1.0, beta, NATURAL)
        deltas = np.linspace(args.delta_min, args.delta_max, args.points)
        path = outdir / f"cf_sweep_beta_{beta:.2f}.csv"
        with path.open("w") as fh:
            fh.write(f"# beta = {beta}, omega = 1 (natural units)\n")
            fh.write("delta,em_continuous,em_discrete,scalar\n")
            for delta in deltas:
                tau2 = float(delta) / (params.omega * params.gamma)
                em = em_cf_continuous((1, 1), "EE", 0.0, tau2, params, "closed-form")
                sc = scalar_cf_continuous(0.0, tau2, params)
                try:
                    emd = f"{em_cf_discrete(0.0, tau2, params).value:.12e}"
                except ResonanceError:
                    emd = "nan"
                fh.write(f"{delta:.6f},{em.value:.12e},{emd},{sc.value:.12e}\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

"""Physical constants and unit systems.

All physics code takes a ``Constants`` instance so the same formulas run in
SI (CODATA 2018) or in natural units (hbar = c = k_B = 1).  The
Stefan-Boltzmann constant is always derived from (hbar, c, k_B) so that
closed-form blackbody identities hold to machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Constants",
    "SI",
    "NATURAL",
    "GEV_PER_FERMI_IN_J_PER_M",
    "planck_occupancy",
]


@dataclass(frozen=True)
class Constants:
    hbar: float  # J s
    c: float     # m / s
    k_B: float   # J / K

    @property
    def sigma(self) -> float:
        """Stefan-Boltzmann constant, pi^2 k_B^4 / (60 hbar^3 c^2)."""
        return math.pi**2 * self.k_B**4 / (60.0 * self.hbar**3 * self.c**2)

    def label(self) -> str:
        return "natural" if self.c == 1.0 and self.hbar == 1.0 else "SI"


# CODATA 2018: h, c, k_B are exact; hbar derived.
SI = Constants(hbar=6.62607015e-34 / (2.0 * math.pi), c=299792458.0, k_B=1.380649e-23)

NATURAL = Constants(hbar=1.0, c=1.0, k_B=1.0)

# 1 GeV / fermi expressed in J / m.
GEV_PER_FERMI_IN_J_PER_M = 1.602176634e-10 / 1e-15


def planck_occupancy(omega, temperature, const: Constants = SI):
    """Bose occupancy 1 / (exp(hbar w / k_B T) - 1); vectorized in omega."""
    import numpy as np

    x = const.hbar * np.asarray(omega) / (const.k_B * temperature)
    return 1.0 / np.expm1(x)

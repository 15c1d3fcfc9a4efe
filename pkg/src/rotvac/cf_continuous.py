"""Continuous-spectrum two-point correlation functions along the rotating
worldline: printed closed forms, their angular-quadrature counterparts, and a
fully general tensor-contraction path usable for any component pair.

All two-time functions are stationary (depend on tau2 - tau1 only) and carry
the universal (lab time difference)^-4 scaling for the electromagnetic field,
(difference)^-2 for the massless scalar.  The coincidence limit is singular
and guarded; one-point quantities live in the thermo module.

The dimensionless shape parameters are

    delta = omega gamma (tau2 - tau1)          angular lag
    shape_k = -beta sin(delta/2) / (delta/2)   radial-integral constant

and the divergent radial integrals int_0^inf k^p cos(k G) dk enter through
their Abel-regularized values (6/G^4 for p = 3, -1/G^2 for p = 1), which the
series machinery in cf_discrete cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .fields import projection_matrix
from .kinematics import RotationParams, lab_position
from .numerics import DEFAULT_SPEC, QuadratureSpec, integrate_sphere

__all__ = [
    "CoincidenceError",
    "CFValue",
    "sinc_half",
    "shape_constant",
    "sin_power_integral",
    "phi_kernel_integral",
    "em_cf_continuous",
    "em_cf_tensor_quadrature",
    "scalar_cf_continuous",
    "scalar_cf_quadrature",
]

COINCIDENCE_TOL = 1e-9  # |delta| below this raises (physical divergence)


class CoincidenceError(ValueError):
    """Two-point function requested at (numerically) coincident times."""


@dataclass(frozen=True)
class CFValue:
    kind: str                 # "EE" | "HH" | "EH" | "scalar"
    pair: Tuple[int, int]     # tetrad component indices, 1-based; (0, 0) for scalar
    tau1: float
    tau2: float
    spectrum: str             # "continuous" | "discrete"
    value: float
    method: str               # "closed-form" | "quadrature" | "monte-carlo"
    stat_error: Optional[float] = None


def sinc_half(delta: float) -> float:
    """sin(delta/2) / (delta/2), stable near zero."""
    return float(np.sinc(delta / (2.0 * math.pi)))


def shape_constant(params: RotationParams, delta: float) -> float:
    """The constant -beta sin(delta/2)/(delta/2) entering all radial integrals."""
    return -params.beta * sinc_half(delta)


def sin_power_integral(p: int, k: float) -> float:
    """int_0^pi sin^p(theta) / (1 - k^2 sin^2 theta)^(7/2) dtheta for p = 1, 3, 5.

    Rational in 1/(1 - k^2); requires |k| < 1.
    """
    if abs(k) >= 1.0:
        raise ValueError(f"|k| must be < 1, got {k!r}")
    om = 1.0 / ((1.0 - k) * (1.0 + k))
    if p == 1:
        return 2.0 / 5.0 * om + 8.0 / 15.0 * om**2 + 16.0 / 15.0 * om**3
    if p == 3:
        return 4.0 / 15.0 * om**2 + 16.0 / 15.0 * om**3
    if p == 5:
        return 16.0 / 15.0 * om**3
    raise ValueError(f"p must be 1, 3 or 5, got {p!r}")


def phi_kernel_integral(m: int, b: float) -> float:
    """int_0^{2 pi} sin^m(phi) / (1 + b sin phi)^4 dphi for m = 0, 1, 2; |b| < 1."""
    if abs(b) >= 1.0:
        raise ValueError(f"|b| must be < 1, got {b!r}")
    w = ((1.0 - b) * (1.0 + b)) ** -3.5
    if m == 0:
        return math.pi * (2.0 + 3.0 * b * b) * w
    if m == 1:
        return -b * math.pi * (4.0 + b * b) * w
    if m == 2:
        return math.pi * (1.0 + 4.0 * b * b) * w
    raise ValueError(f"m must be 0, 1 or 2, got {m!r}")


def _lag(params: RotationParams, tau1: float, tau2: float):
    delta = params.alpha(tau2) - params.alpha(tau1)
    if abs(delta) < COINCIDENCE_TOL:
        raise CoincidenceError(
            f"|delta| = {abs(delta)!r} below the coincidence guard; "
            "two-point functions diverge there"
        )
    dt_lab = params.gamma * (tau2 - tau1)
    return delta, dt_lab


def _em_prefactor(params: RotationParams, dt_lab: float) -> float:
    const = params.constants
    return 3.0 * const.hbar * const.c / (2.0 * math.pi**2 * (const.c * dt_lab) ** 4)


def _closed_form_11(params: RotationParams, delta: float, dt_lab: float) -> float:
    b = params.beta
    k = shape_constant(params, delta)
    chalf = math.cos(delta / 2.0)
    c2 = chalf * chalf
    br1 = 2.0 * math.pi * math.cos(delta)
    br3 = math.pi * (3.0 * k * k * math.cos(delta) - 2.0 * c2 + 2.0 * b * b
                     - 8.0 * b * k * chalf + 1.0)
    br5 = math.pi * (-3.0 * k * k * c2 + 3.0 * b * b * k * k
                     - 2.0 * b * k**3 * chalf + 4.0 * k * k)
    return _em_prefactor(params, dt_lab) * params.gamma**2 * (
        br1 * sin_power_integral(1, k)
        + br3 * sin_power_integral(3, k)
        + br5 * sin_power_integral(5, k)
    )


def _diag_bracket(pair: Tuple[int, int], params: RotationParams, delta: float):
    """Angular bracket (coefficients of 1, ky, kx^2, ky^2) for diagonal pairs."""
    b, g = params.beta, params.gamma
    ch, sh = math.cos(delta / 2.0), math.sin(delta / 2.0)
    cd = math.cos(delta)
    if pair == (1, 1):
        return (g * g * cd, 2.0 * b * g * g * ch,
                g * g * (b * b - ch * ch), g * g * (b * b + sh * sh))
    if pair == (2, 2):
        return (cd, 0.0, sh * sh, -ch * ch)
    if pair == (3, 3):
        return (g * g * b * b * cd, -2.0 * b * g * g * ch,
                g * g * (1.0 - b * b * ch * ch), g * g * (1.0 + b * b * sh * sh))
    raise ValueError(f"no angular bracket for pair {pair!r}")


def _bracket_quadrature(pair, params, delta, dt_lab, spec) -> float:
    """Stationary quadrature path: angular integral of the printed bracket
    against the regularized radial factor (1 + k ky)^-4."""
    c0, cy, cxx, cyy = _diag_bracket(pair, params, delta)
    k = shape_constant(params, delta)
    const = params.constants

    def integrand(theta, phi):
        st = np.sin(theta)
        kx = st * np.cos(phi)
        ky = st * np.sin(phi)
        bracket = c0 + cy * ky + cxx * kx * kx + cyy * ky * ky
        return bracket / (1.0 + k * ky) ** 4

    val, _ = integrate_sphere(integrand, spec)
    pref = const.hbar * const.c / (4.0 * math.pi**2) * 6.0 / (const.c * dt_lab) ** 4
    return pref * val


# lab-frame polarization-summed kernel blocks: P = 1 - khat khat^T for EE/HH,
# the cross-product matrix for EH/HE
def _lab_kernel_rows(khat, row1, row2):
    """row1^T M(khat) row2 for khat of shape (..., 3); rows are 6-vectors."""
    kx, ky, kz = khat[..., 0], khat[..., 1], khat[..., 2]
    out = 0.0
    # EE and HH blocks: delta_ij - k_i k_j
    for base in (0, 3):
        for i in range(3):
            for j in range(3):
                cij = row1[base + i] * row2[base + j]
                if cij != 0.0:
                    out = out + cij * ((1.0 if i == j else 0.0) - khat[..., i] * khat[..., j])
    # EH block: <E_i H_j> ~ eps_{j a i} k_a ; HE block is its negative transpose
    eh = [[None, kz, -ky], [-kz, None, kx], [ky, -kx, None]]
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            c_eh = row1[i] * row2[3 + j]
            c_he = row1[3 + i] * row2[j]
            if c_eh != 0.0:
                out = out + c_eh * eh[i][j]
            if c_he != 0.0:
                out = out - c_he * eh[i][j]
    return out


def em_cf_tensor_quadrature(pair, kind, tau1, tau2, params: RotationParams,
                            spec: QuadratureSpec = DEFAULT_SPEC) -> CFValue:
    """General two-point CF via direct lab-frame tensor contraction.

    Makes no use of the stationarity variable change: the two projection rows
    are taken at their own worldline phases and the mode-phase difference is
    evaluated from the actual lab positions.  Works for any component pair
    and for kinds "EE", "HH", "EH"; serves as the independent oracle for the
    closed forms and brackets.
    """
    delta, dt_lab = _lag(params, tau1, tau2)
    const = params.constants
    m1 = projection_matrix(params.alpha(tau1), params.beta)
    m2 = projection_matrix(params.alpha(tau2), params.beta)
    a, bidx = pair
    row1 = m1[a - 1 if kind[0] == "E" else 2 + a]
    row2 = m2[bidx - 1 if kind[1] == "E" else 2 + bidx]

    t1, x1, y1, _ = lab_position(params, tau1)
    t2, x2, y2, _ = lab_position(params, tau2)
    dr = np.array([x1 - x2, y1 - y2, 0.0])
    cdt = const.c * (t1 - t2)

    def integrand(theta, phi):
        st = np.sin(theta)
        khat = np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)
        geom = khat @ dr - cdt
        return _lab_kernel_rows(khat, row1, row2) * 6.0 / geom**4

    val, _ = integrate_sphere(integrand, spec)
    value = const.hbar * const.c / (4.0 * math.pi**2) * val
    return CFValue(kind=kind, pair=pair, tau1=tau1, tau2=tau2,
                   spectrum="continuous", value=value, method="quadrature")


def em_cf_continuous(pair, kind, tau1, tau2, params: RotationParams,
                     method: str = "closed-form",
                     spec: QuadratureSpec = DEFAULT_SPEC) -> CFValue:
    """Electromagnetic two-point CF for the continuous zero-point spectrum.

    kind is "EE", "HH" or "EH"; pair indexes tetrad components (1-based).
    The closed form exists for the (1,1) pair (EE and, by the exact electric/
    magnetic symmetry of the stationary kernel, HH).  The quadrature method
    uses the stationary angular bracket for the diagonal pairs and falls back
    to the tensor-contraction path otherwise.

    Note on off-diagonals: the (1,3) and (2,3) pairs vanish identically (the
    integrand is odd in the z direction); the (1,2) pair does *not* vanish
    for separated times (it is antisymmetric under swapping the component
    order and only dies at coincidence), so it is computed honestly.
    """
    if kind not in ("EE", "HH", "EH"):
        raise ValueError(f"unknown kind {kind!r}")
    a, bidx = pair
    if not (1 <= a <= 3 and 1 <= bidx <= 3):
        raise ValueError(f"component indices must be 1..3, got {pair!r}")
    delta, dt_lab = _lag(params, tau1, tau2)

    if method == "closed-form":
        if pair != (1, 1) or kind == "EH":
            raise ValueError(
                f"no closed form for pair {pair!r} kind {kind!r}; use method='quadrature'"
            )
        value = _closed_form_11(params, delta, dt_lab)
    elif method == "quadrature":
        if kind in ("EE", "HH") and pair in ((1, 1), (2, 2), (3, 3)):
            value = _bracket_quadrature(pair, params, delta, dt_lab, spec)
        else:
            return em_cf_tensor_quadrature(pair, kind, tau1, tau2, params, spec)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CFValue(kind=kind, pair=pair, tau1=tau1, tau2=tau2,
                   spectrum="continuous", value=value, method=method)


def scalar_cf_continuous(tau1, tau2, params: RotationParams) -> CFValue:
    """Massless-scalar two-point CF, closed form.

    -(hbar c / pi) / [ (gamma c (tau2 - tau1))^2
                       - 4 r^2 sin^2(omega gamma (tau2 - tau1) / 2) ].
    The denominator is positive for all separations while beta < 1.
    """
    delta, dt_lab = _lag(params, tau1, tau2)
    const = params.constants
    denom = (const.c * dt_lab) ** 2 - 4.0 * params.radius**2 * math.sin(delta / 2.0) ** 2
    value = -const.hbar * const.c / math.pi / denom
    return CFValue(kind="scalar", pair=(0, 0), tau1=tau1, tau2=tau2,
                   spectrum="continuous", value=value, method="closed-form")


def scalar_cf_quadrature(tau1, tau2, params: RotationParams,
                         spec: QuadratureSpec = DEFAULT_SPEC) -> CFValue:
    """Scalar CF via angular quadrature of the regularized radial integral.

    The radial integral int_0^inf k cos(k G) dk carries its regularized value
    -1/G^2 with G the direction-dependent phase coefficient; theta and phi
    are integrated numerically.  Oracle for scalar_cf_continuous.
    """
    delta, dt_lab = _lag(params, tau1, tau2)
    const = params.constants
    B = const.c * dt_lab
    E0 = 2.0 * params.radius * math.sin(delta / 2.0)

    def integrand(theta, phi):
        G = B - E0 * np.sin(theta) * np.sin(phi)
        return -1.0 / G**2

    val, _ = integrate_sphere(integrand, spec)
    value = const.hbar * const.c / (4.0 * math.pi**2) * val
    return CFValue(kind="scalar", pair=(0, 0), tau1=tau1, tau2=tau2,
                   spectrum="continuous", value=value, method="quadrature")

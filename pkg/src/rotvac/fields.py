"""Field projection into the comoving tetrad, polarization machinery, and the
angular weight kernel shared by the quadrature and Monte Carlo paths."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import RotationParams, frenet_serret_tetrad

__all__ = [
    "FrameError",
    "Direction",
    "FieldTriplet",
    "project_fields_to_tetrad",
    "field_tensor",
    "project_fields_via_tensor",
    "polarization_basis",
    "polarization_sum_matrix",
    "angular_weight_kernel",
]

POLE_TOL = 1e-8  # directions this close to +/- z use the (x, y) basis


class FrameError(ValueError):
    """Field triplet is in the wrong frame for the requested operation."""


@dataclass(frozen=True)
class Direction:
    """Propagation direction in spherical angles, theta in [0, pi], phi in [0, 2 pi)."""

    theta: float
    phi: float

    @property
    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True)
class FieldTriplet:
    """Electric and magnetic 3-vectors tagged with their frame."""

    E: np.ndarray
    H: np.ndarray
    frame: str  # "lab" | "tetrad"
    tau: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "E", np.asarray(self.E, dtype=float))
        object.__setattr__(self, "H", np.asarray(self.H, dtype=float))
        if self.E.shape != (3,) or self.H.shape != (3,):
            raise ValueError("E and H must be 3-vectors")
        if not (np.all(np.isfinite(self.E)) and np.all(np.isfinite(self.H))):
            raise ValueError("field components must be finite")


def projection_matrix(alpha: float, beta: float) -> np.ndarray:
    """6x6 map from lab (E1,E2,E3,H1,H2,H3) to tetrad (E_(1..3), H_(1..3)).

    Row layout follows the comoving-frame component order; alpha is the
    rotation phase of the tetrad, beta the orbital speed.
    """
    g = 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))
    ca, sa = math.cos(alpha), math.sin(alpha)
    m = np.zeros((6, 6))
    m[0, 0], m[0, 1], m[0, 5] = g * ca, g * sa, -beta * g
    m[1, 0], m[1, 1] = -sa, ca
    m[2, 2], m[2, 3], m[2, 4] = g, beta * g * ca, beta * g * sa
    m[3, 3], m[3, 4], m[3, 2] = g * ca, g * sa, beta * g
    m[4, 3], m[4, 4] = -sa, ca
    m[5, 5], m[5, 0], m[5, 1] = g, -beta * g * ca, -beta * g * sa
    return m


def project_fields_to_tetrad(lab: FieldTriplet, params: RotationParams, tau: float) -> FieldTriplet:
    """Project lab-frame (E, H) into the Frenet-Serret frame at proper time tau."""
    if lab.frame != "lab":
        raise FrameError("project_fields_to_tetrad expects a lab-frame triplet")
    m = projection_matrix(params.alpha(tau), params.beta)
    out = m @ np.concatenate([lab.E, lab.H])
    return FieldTriplet(E=out[:3], H=out[3:], frame="tetrad", tau=tau)


def field_tensor(E, H) -> np.ndarray:
    """Antisymmetric field tensor F_ik on (x, y, z, ct) slots.

    Convention fixed by the identity-frame reduction: F_4k = E_k and
    (F_23, F_31, F_12) = (H_1, H_2, H_3).
    """
    E = np.asarray(E, dtype=float)
    H = np.asarray(H, dtype=float)
    F = np.zeros((4, 4))
    F[3, 0], F[3, 1], F[3, 2] = E
    F[0, 3], F[1, 3], F[2, 3] = -E
    F[1, 2], F[2, 1] = H[0], -H[0]
    F[2, 0], F[0, 2] = H[1], -H[1]
    F[0, 1], F[1, 0] = H[2], -H[2]
    return F


def project_fields_via_tensor(lab: FieldTriplet, params: RotationParams, tau: float) -> FieldTriplet:
    """Independent projection path: contract mu_(a) mu_(b) with the field tensor.

    Used as an oracle for project_fields_to_tetrad; the two must agree to
    roundoff for every input.
    """
    if lab.frame != "lab":
        raise FrameError("project_fields_via_tensor expects a lab-frame triplet")
    mu = frenet_serret_tetrad(params, tau).matrix()
    F = field_tensor(lab.E, lab.H)
    Fab = mu @ F @ mu.T
    E = np.array([Fab[3, 0], Fab[3, 1], Fab[3, 2]])
    H = np.array([Fab[1, 2], Fab[2, 0], Fab[0, 1]])
    return FieldTriplet(E=E, H=H, frame="tetrad", tau=tau)


def polarization_basis(direction: Direction):
    """Two unit polarization vectors orthogonal to the propagation direction.

    Near the poles (within POLE_TOL of +/- z) the basis is pinned to (x, y);
    only the lambda-summed completeness relation enters the physics, so no
    continuity requirement exists.
    """
    k = direction.unit_vector
    e1 = np.cross(np.array([0.0, 0.0, 1.0]), k)
    norm = np.linalg.norm(e1)
    if norm < POLE_TOL:
        e1 = np.array([1.0, 0.0, 0.0])
    else:
        e1 = e1 / norm
    e2 = np.cross(k, e1)
    e2 = e2 / np.linalg.norm(e2)
    return e1, e2


def polarization_sum_matrix(direction: Direction) -> np.ndarray:
    """Sum over polarizations of eps_i eps_j; equals delta_ij - khat_i khat_j."""
    e1, e2 = polarization_basis(direction)
    return np.outer(e1, e1) + np.outer(e2, e2)


def angular_weight_kernel(direction: Direction, delta: float, params: RotationParams) -> float:
    """Angular weight multiplying the spectral ladder in the periodic CF.

    delta is the dimensionless lab-angle separation omega gamma (tau2 - tau1).
    Normalized so the beta = 0, delta = 0 kernel integrates to 1 over the
    sphere.  Single source of truth for both the quadrature and Monte Carlo
    evaluations.
    """
    b, g = params.beta, params.gamma
    k = direction.unit_vector
    kx, ky = k[0], k[1]
    return (3.0 / (8.0 * math.pi)) * g**2 * (
        math.cos(delta)
        + 2.0 * b * math.cos(delta / 2.0) * ky
        + (b**2 - math.cos(delta / 2.0) ** 2) * kx**2
        + (b**2 + math.sin(delta / 2.0) ** 2) * ky**2
    )


def angular_weight_kernel_grid(theta, phi, delta: float, params: RotationParams):
    """Vectorized angular weight on (theta, phi) arrays; same formula as
    angular_weight_kernel."""
    b, g = params.beta, params.gamma
    st = np.sin(theta)
    kx = st * np.cos(phi)
    ky = st * np.sin(phi)
    return (3.0 / (8.0 * math.pi)) * g**2 * (
        np.cos(delta)
        + 2.0 * b * math.cos(delta / 2.0) * ky
        + (b**2 - math.cos(delta / 2.0) ** 2) * kx**2
        + (b**2 + math.sin(delta / 2.0) ** 2) * ky**2
    )

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotvac.constants import NATURAL
from rotvac.fields import (Direction, FieldTriplet, FrameError,
                           angular_weight_kernel, angular_weight_kernel_grid,
                           polarization_basis, polarization_sum_matrix,
                           project_fields_to_tetrad, project_fields_via_tensor)
from rotvac.kinematics import RotationParams
from rotvac.numerics import integrate_sphere

finite = st.floats(-10.0, 10.0)
triple = st.tuples(finite, finite, finite)
directions = st.builds(Direction, theta=st.floats(0.0, math.pi),
                       phi=st.floats(0.0, 2.0 * math.pi, exclude_max=True))


class TestProjection:
    def test_identity_frame(self):
        p = RotationParams(0.0, 0.0, NATURAL)
        lab = FieldTriplet(E=[1.0, 0.0, 0.0], H=[0.0, 0.0, 0.0], frame="lab")
        out = project_fields_to_tetrad(lab, p, 0.0)
        assert out.E == pytest.approx([1.0, 0.0, 0.0])
        assert out.H == pytest.approx([0.0, 0.0, 0.0])
        assert out.frame == "tetrad"

    def test_magnetic_z_at_phase_origin(self):
        # pure H_z input mixes into the first electric and third magnetic legs
        p = RotationParams(omega=1.0, radius=0.7, constants=NATURAL)
        lab = FieldTriplet(E=[0.0, 0.0, 0.0], H=[0.0, 0.0, 1.0], frame="lab")
        out = project_fields_to_tetrad(lab, p, 0.0)
        bg = p.beta * p.gamma
        assert out.E == pytest.approx([-bg, 0.0, 0.0], abs=1e-15)
        assert out.H == pytest.approx([0.0, 0.0, p.gamma], abs=1e-15)

    def test_frame_mismatch(self):
        p = RotationParams(0.0, 0.0, NATURAL)
        tet = FieldTriplet(E=[1, 0, 0], H=[0, 0, 0], frame="tetrad")
        with pytest.raises(FrameError):
            project_fields_to_tetrad(tet, p, 0.0)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            FieldTriplet(E=[np.inf, 0, 0], H=[0, 0, 0], frame="lab")

    @settings(max_examples=50, deadline=None)
    @given(e1=triple, h1=triple, e2=triple, h2=triple,
           a=st.floats(-3, 3), b=st.floats(-3, 3))
    def test_linearity(self, e1, h1, e2, h2, a, b):
        p = RotationParams(omega=1.0, radius=0.6, constants=NATURAL)
        tau = 0.8
        f1 = FieldTriplet(E=e1, H=h1, frame="lab")
        f2 = FieldTriplet(E=e2, H=h2, frame="lab")
        combo = FieldTriplet(E=a * f1.E + b * f2.E, H=a * f1.H + b * f2.H, frame="lab")
        lhs = project_fields_to_tetrad(combo, p, tau)
        r1 = project_fields_to_tetrad(f1, p, tau)
        r2 = project_fields_to_tetrad(f2, p, tau)
        assert lhs.E == pytest.approx(a * r1.E + b * r2.E, abs=1e-12)
        assert lhs.H == pytest.approx(a * r1.H + b * r2.H, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(e=triple, h=triple, beta=st.floats(0.0, 0.95), tau=st.floats(-5, 5))
    def test_tensor_contraction_oracle(self, e, h, beta, tau):
        p = (RotationParams(0.0, 0.0, NATURAL) if beta == 0.0
             else RotationParams.from_beta(1.0, beta, NATURAL))
        lab = FieldTriplet(E=e, H=h, frame="lab")
        direct = project_fields_to_tetrad(lab, p, tau)
        tensor = project_fields_via_tensor(lab, p, tau)
        assert np.max(np.abs(direct.E - tensor.E)) < 1e-12
        assert np.max(np.abs(direct.H - tensor.H)) < 1e-12


class TestPolarization:
    def test_z_axis_sum_rule(self):
        m = polarization_sum_matrix(Direction(0.0, 0.0))
        assert m == pytest.approx(np.diag([1.0, 1.0, 0.0]))

    @settings(max_examples=80, deadline=None)
    @given(d=directions.filter(lambda d: math.sin(d.theta) > 1e-7))
    def test_completeness(self, d):
        k = d.unit_vector
        m = polarization_sum_matrix(d)
        assert np.max(np.abs(m - (np.eye(3) - np.outer(k, k)))) < 1e-12

    def test_completeness_in_pole_patch(self):
        # inside the pinned-basis patch the residual is bounded by the patch size
        d = Direction(5e-9, 1.0)
        k = d.unit_vector
        m = polarization_sum_matrix(d)
        assert np.max(np.abs(m - (np.eye(3) - np.outer(k, k)))) < 2e-8

    @settings(max_examples=80, deadline=None)
    @given(d=directions.filter(lambda d: math.sin(d.theta) > 1e-7))
    def test_transversality_and_norms(self, d):
        e1, e2 = polarization_basis(d)
        k = d.unit_vector
        assert abs(e1 @ k) < 1e-14
        assert abs(e2 @ k) < 1e-14
        assert abs(e1 @ e2) < 1e-14
        assert np.linalg.norm(e1) == pytest.approx(1.0, abs=1e-14)
        assert np.linalg.norm(e2) == pytest.approx(1.0, abs=1e-14)

    def test_pole_convention(self):
        e1, e2 = polarization_basis(Direction(1e-9, 0.3))
        assert e1 == pytest.approx([1.0, 0.0, 0.0], abs=1e-8)
        assert e2 == pytest.approx([0.0, 1.0, 0.0], abs=1e-8)


class TestAngularWeight:
    def test_static_limit_form(self):
        p = RotationParams(0.0, 0.0, NATURAL)
        for d in (Direction(0.3, 1.0), Direction(2.0, 4.4)):
            kx = d.unit_vector[0]
            expect = 3.0 / (8.0 * math.pi) * (1.0 - kx * kx)
            assert angular_weight_kernel(d, 0.0, p) == pytest.approx(expect, rel=1e-14)

    def test_unit_normalization_at_rest(self):
        p = RotationParams(0.0, 0.0, NATURAL)
        val, _ = integrate_sphere(lambda th, ph: angular_weight_kernel_grid(th, ph, 0.0, p))
        assert val == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("beta", [0.2, 0.5, 0.9])
    def test_coincidence_moment(self, beta):
        p = RotationParams.from_beta(1.0, beta, NATURAL)
        val, _ = integrate_sphere(lambda th, ph: angular_weight_kernel_grid(th, ph, 0.0, p))
        assert val == pytest.approx(p.gamma**2 * (1.0 + beta**2), rel=1e-10)

    def test_azimuth_mirror_invariance(self, params_mid):
        # only kx^2 and ky enter, so phi -> pi - phi leaves the kernel alone
        d = Direction(1.2, 0.7)
        d_mir = Direction(d.theta, (math.pi - d.phi) % (2.0 * math.pi))
        for delta in (0.4, 2.9):
            assert angular_weight_kernel(d_mir, delta, params_mid) == pytest.approx(
                angular_weight_kernel(d, delta, params_mid), rel=1e-12)

    def test_shift_by_period_flips_ky(self, params_mid):
        # the ky-linear term flips sign with the half-angle cosine, so a 2 pi
        # shift in delta is equivalent to the reflection ky -> -ky
        d = Direction(1.2, 0.7)
        d_ref = Direction(d.theta, (-d.phi) % (2.0 * math.pi))
        for delta in (0.4, 2.9):
            shifted = angular_weight_kernel(d, delta + 2.0 * math.pi, params_mid)
            reflected = angular_weight_kernel(d_ref, delta, params_mid)
            assert shifted == pytest.approx(reflected, rel=1e-12)

    def test_grid_matches_scalar(self, params_mid):
        th = np.array([0.4, 1.3]); ph = np.array([0.2, 5.0])
        grid = angular_weight_kernel_grid(th, ph, 1.1, params_mid)
        for i in range(2):
            scalar = angular_weight_kernel(Direction(th[i], ph[i]), 1.1, params_mid)
            assert grid[i] == pytest.approx(scalar, rel=1e-15)

import math

import numpy as np
import pytest

from conftest import delta_to_tau
from rotvac.cf_continuous import CoincidenceError
from rotvac.cf_discrete import (ResonanceError, cubic_ladder_partial_fraction,
                                cubic_ladder_split, cubic_ladder_sum_closed,
                                em_cf_discrete, inertial_thermal_cf_integrand,
                                ladder_phase, linear_ladder_split,
                                linear_ladder_sum_closed, make_kernel,
                                rotation_temperature, scalar_cf_discrete,
                                thermal_integrand_planck,
                                thermal_integrand_rotation,
                                thermal_ladder_integral, zero_point_integrand)
from rotvac.constants import NATURAL, SI
from rotvac.kinematics import RotationParams
from rotvac.numerics import abel_sum

# frozen CODATA arithmetic: hbar / (2 pi k_B) and the r0 = 1 fm orbit
T_ROT_AT_UNIT_OMEGA = 1.215662471951891e-12   # K s
T_ROT_AT_PROTON_SCALE = 3.644464405648135e11  # K


class TestRotationTemperature:
    def test_unit_angular_velocity(self):
        p = RotationParams(omega=1.0, radius=0.0, constants=SI)
        assert rotation_temperature(p) == pytest.approx(T_ROT_AT_UNIT_OMEGA, rel=1e-12)

    def test_proton_scale(self):
        p = RotationParams(omega=SI.c / 1e-15, radius=0.0, constants=SI)
        assert rotation_temperature(p) == pytest.approx(T_ROT_AT_PROTON_SCALE, rel=1e-12)

    def test_static_limit(self):
        p = RotationParams(omega=0.0, radius=1.0, constants=SI)
        assert rotation_temperature(p) == 0.0


class TestLadderSums:
    def test_cubic_at_half_period(self):
        assert cubic_ladder_sum_closed(math.pi) == pytest.approx(0.125, rel=1e-15)

    def test_cubic_at_third_period(self):
        assert cubic_ladder_sum_closed(2.0 * math.pi / 3.0) == pytest.approx(1.0 / 3.0, rel=1e-14)

    def test_linear_at_half_period(self):
        assert linear_ladder_sum_closed(math.pi) == pytest.approx(-0.25, rel=1e-15)

    @pytest.mark.parametrize("phase,target", [(math.pi, 0.125), (2.0 * math.pi / 3.0, 1.0 / 3.0)])
    def test_cubic_vs_abel_oracle(self, phase, target):
        oracle = abel_sum(lambda n: n**3 * np.cos(n * phase))
        assert oracle.value == pytest.approx(cubic_ladder_sum_closed(phase), abs=1e-6)
        assert cubic_ladder_sum_closed(phase) == pytest.approx(target, rel=1e-12)

    def test_linear_vs_abel_oracle(self):
        oracle = abel_sum(lambda n: n * np.cos(n * math.pi))
        assert oracle.value == pytest.approx(linear_ladder_sum_closed(math.pi), abs=1e-8)

    def test_small_phase_leading_term(self):
        # S * phase^4 -> 6 as phase -> 0 (zero-point dominance)
        ph = 1e-2
        assert cubic_ladder_sum_closed(ph) * ph**4 == pytest.approx(6.0, rel=1e-9)

    def test_partial_fraction_route(self):
        for ph in (0.5, 1.0, 2.5):
            assert cubic_ladder_partial_fraction(ph, 10000) == pytest.approx(
                cubic_ladder_sum_closed(ph), rel=1e-8)

    def test_resonance_raises(self):
        for ph in (0.0, 2.0 * math.pi, -4.0 * math.pi):
            with pytest.raises(ResonanceError):
                cubic_ladder_sum_closed(ph)
            with pytest.raises(ResonanceError):
                linear_ladder_sum_closed(ph)

    def test_periodicity(self):
        for ph in (0.7, 2.0, 5.5):
            assert cubic_ladder_sum_closed(ph + 2.0 * math.pi) == pytest.approx(
                cubic_ladder_sum_closed(ph), rel=1e-12)


class TestThermalSplit:
    @pytest.mark.parametrize("phase", [0.5, 1.0, 2.0, math.pi, 4.0, 5.0, 6.0])
    def test_cubic_total_matches_closed(self, phase):
        split = cubic_ladder_split(phase)
        assert split.total == pytest.approx(cubic_ladder_sum_closed(phase), rel=1e-8)

    def test_scaling_with_omega(self):
        a = cubic_ladder_split(1.5, omega0=1.0)
        b = cubic_ladder_split(1.5, omega0=3.0)
        assert b.total == pytest.approx(81.0 * a.total, rel=1e-12)

    def test_thermal_low_phase_limit(self):
        # cosh -> 1: the pure Bose integral 2 Gamma(4) zeta(4) / (2 pi)^4
        assert thermal_ladder_integral(0.0, p=3) == pytest.approx(1.0 / 120.0, rel=1e-10)

    def test_divergence_guard(self):
        with pytest.raises(ResonanceError):
            thermal_ladder_integral(2.0 * math.pi, p=3)
        with pytest.raises(ResonanceError):
            cubic_ladder_split(6.5)

    @pytest.mark.parametrize("phase", [0.5, 2.0, math.pi, 5.0])
    def test_linear_total_matches_closed(self, phase):
        split = linear_ladder_split(phase)
        assert split.total == pytest.approx(linear_ladder_sum_closed(phase), rel=1e-8)

    def test_linear_parts_signs(self):
        split = linear_ladder_split(2.0)
        assert split.zero_point_part < 0.0
        assert split.thermal_part < 0.0


class TestPlanckStructure:
    def test_rotation_vs_planck_weights(self):
        # rewriting e^(2 pi w / omega) - 1 with T_rot is an exact identity
        p = RotationParams.from_beta(250.0, 0.4, SI)
        T = rotation_temperature(p)
        w = np.linspace(0.3, 9.0, 25) * p.omega
        lag = 0.4 / p.omega
        a = thermal_integrand_rotation(w, lag, p.omega)
        b = thermal_integrand_planck(w, lag, T, SI)
        assert np.max(np.abs(a / b - 1.0)) < 1e-12

    def test_coincidence_matches_rest_frame_integrand(self):
        p = RotationParams.from_beta(3.0, 0.2, NATURAL)
        T = rotation_temperature(p)
        w = np.linspace(0.1, 6.0, 13)
        rot = thermal_integrand_rotation(w, 0.0, p.omega)
        inertial = inertial_thermal_cf_integrand(w, 0.0, T, NATURAL)
        assert np.max(np.abs(rot / inertial - 1.0)) < 1e-12

    def test_zero_point_integrand_on_axis_plane(self):
        # with ky = 0 the time lag equals the lab time difference for any
        # beta, so the zero-point integrands agree pointwise
        p = RotationParams.from_beta(1.0, 0.8, NATURAL)
        delta = 1.1
        lab_dt = delta / p.omega
        ph = float(ladder_phase(delta, 0.0, p))
        assert ph == delta  # ky = 0 leaves the phase untouched
        w = np.linspace(0.2, 4.0, 9)
        assert np.max(np.abs(zero_point_integrand(w, ph / p.omega)
                             - w**3 * np.cos(w * lab_dt))) < 1e-12


class TestKernel:
    def test_phase_and_lag_bookkeeping(self):
        p = RotationParams.from_beta(2.0, 0.5, NATURAL)
        kern = make_kernel(1.2, 0.3, p)
        assert kern.phase == pytest.approx(1.2 - 2.0 * 0.5 * 0.3 * math.sin(0.6), rel=1e-14)
        assert kern.phase == pytest.approx(kern.omega0 * kern.time_lag, rel=1e-14)
        assert kern.k0 == pytest.approx(p.omega / p.constants.c, rel=1e-15)

    def test_vectorized_phase(self):
        p = RotationParams.from_beta(1.0, 0.5, NATURAL)
        ky = np.array([-1.0, 0.0, 1.0])
        ph = ladder_phase(2.0, ky, p)
        assert ph[1] == pytest.approx(2.0)
        assert ph[0] > ph[1] > ph[2]


class TestEmDiscrete:
    def test_periodic_under_full_turns(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        base = em_cf_discrete(0.0, delta_to_tau(p, math.pi / 2.0), p)
        for n in (1, 2):
            shifted = em_cf_discrete(
                0.0, delta_to_tau(p, math.pi / 2.0 + 2.0 * math.pi * n), p)
            assert shifted.value == pytest.approx(base.value, rel=1e-10)

    def test_split_parts_sum_to_total(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        cf, parts = em_cf_discrete(0.0, delta_to_tau(p, math.pi / 2.0), p, split=True)
        assert parts.total == pytest.approx(cf.value, rel=1e-6)
        assert parts.thermal_part > 0.0

    def test_resonant_lag_rejected(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        with pytest.raises(ResonanceError) as exc:
            em_cf_discrete(0.0, delta_to_tau(p, 2.0 * math.pi), p)
        assert exc.value.region is not None

    def test_no_interior_crossing_for_subluminal_orbits(self):
        # |phase - 2 pi m| >= |lag - 2 pi m| - 2 beta |sin(lag/2)| > 0 off the
        # exact resonant lags, because 2 |sin(e/2)| < |e|; nearby lags must
        # therefore evaluate cleanly even at high beta
        p = RotationParams.from_beta(1.0, 0.9, NATURAL)
        for delta in (2.0 * math.pi - 0.05, 2.0 * math.pi + 0.05):
            cf = em_cf_discrete(0.0, delta_to_tau(p, delta), p)
            assert math.isfinite(cf.value)

    def test_split_domain_guard(self):
        # the thermal integral only converges while |phase| < 2 pi everywhere
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        with pytest.raises(ResonanceError):
            em_cf_discrete(0.0, delta_to_tau(p, 7.0), p, split=True)

    def test_coincidence_guard(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        with pytest.raises(CoincidenceError):
            em_cf_discrete(0.3, 0.3, p)


class TestScalarDiscrete:
    def test_periodicity(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        base = scalar_cf_discrete(0.0, delta_to_tau(p, 1.0), p)
        shifted = scalar_cf_discrete(0.0, delta_to_tau(p, 1.0 + 2.0 * math.pi), p)
        assert shifted.value == pytest.approx(base.value, rel=1e-10)

    def test_split_parts(self):
        p = RotationParams.from_beta(1.0, 0.3, NATURAL)
        cf, parts = scalar_cf_discrete(0.0, delta_to_tau(p, 1.0), p, split=True)
        assert parts.total == pytest.approx(cf.value, rel=1e-6)
        assert parts.zero_point_part < 0.0
        assert parts.thermal_part < 0.0

    def test_static_limit_reduces_to_uniform_kernel(self):
        # beta -> 0: phase loses its direction dependence, so the CF equals
        # the closed ladder value times the full solid angle
        p = RotationParams(omega=1.0, radius=0.0, constants=NATURAL)
        delta = 1.0
        cf = scalar_cf_discrete(0.0, delta_to_tau(p, delta), p)
        k0 = p.omega / p.constants.c
        expect = (p.constants.hbar * p.constants.c * k0**2 / (4.0 * math.pi**2)
                  * 4.0 * math.pi * linear_ladder_sum_closed(delta))
        assert cf.value == pytest.approx(expect, rel=1e-10)

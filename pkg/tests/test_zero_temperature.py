"""Zero-temperature observables: closed forms, quadrature routes, deviations."""

import math

import numpy as np
import pytest

from casimir_impedance import (
    ALUMINUM,
    CODATA,
    Formalism,
    ImpedanceKind,
    ImpedanceModel,
    ObservableKind,
    energy_pp0,
    force_pp0,
    force_sphere0,
    ideal_closed_forms,
    normal_skin_pert0,
    relative_deviation,
)
from casimir_impedance.zero_temperature import energy_bracket, force_bracket


def test_ideal_closed_forms():
    a = 1e-6
    e, f = ideal_closed_forms(a)
    hc = CODATA.hbar * CODATA.c
    assert e == pytest.approx(-math.pi**2 * hc / (720.0 * a**3), rel=1e-15)
    assert f == pytest.approx(-math.pi**2 * hc / (240.0 * a**4), rel=1e-15)
    # F = -dE/da holds exactly for the power laws
    assert f == pytest.approx(3.0 * e / a, rel=1e-15)
    with pytest.raises(ValueError, match="positive"):
        ideal_closed_forms(0.0)


def test_brackets_at_zero_reflection_factor():
    y = np.array([0.5, 2.0, 10.0])
    np.testing.assert_allclose(
        energy_bracket(0.0, 0.0, y), 2.0 * np.log(-np.expm1(-y)), rtol=1e-12
    )
    np.testing.assert_allclose(
        force_bracket(0.0, 0.0, y), 2.0 / np.expm1(y), rtol=1e-14
    )


def test_force_bracket_saturates_at_unit_factor():
    assert force_bracket(1.0, 1.0, 3.0) == 0.0


def test_ideal_quadrature_matches_closed_form(ideal_model):
    a = 1e-6
    e_closed, f_closed = ideal_closed_forms(a)
    e = energy_pp0(a, ideal_model)
    f = force_pp0(a, ideal_model)
    assert e.value == pytest.approx(e_closed, rel=1e-9)
    assert f.value == pytest.approx(f_closed, rel=1e-9)
    assert e.quadrature.converged and f.quadrature.converged


def test_lifshitz_ideal_matches_closed_form():
    a = 5e-7
    model = ImpedanceModel(ImpedanceKind.IDEAL_METAL, Formalism.LIFSHITZ)
    e = energy_pp0(a, model)
    assert e.value == pytest.approx(ideal_closed_forms(a)[0], rel=1e-9)


def test_observable_metadata(aluminum, plasma_impedance, fast_config):
    a = 1e-6
    obs = energy_pp0(a, plasma_impedance, aluminum, fast_config)
    assert obs.kind is ObservableKind.ENERGY_PER_AREA
    assert obs.temperature == 0.0
    assert obs.geometry.separation == a
    assert obs.model is plasma_impedance
    assert obs.quadrature.value == obs.value
    assert abs(obs.quadrature.abs_error_estimate) < abs(obs.value)


def test_real_metal_binds_less_than_ideal(aluminum, plasma_impedance, fast_config):
    a = 1e-6
    e_ideal = ideal_closed_forms(a)[0]
    e = energy_pp0(a, plasma_impedance, aluminum, fast_config).value
    assert e < 0.0
    assert abs(e) < abs(e_ideal)


def test_attraction_weakens_with_separation(aluminum, plasma_impedance, fast_config):
    f1 = force_pp0(1e-7, plasma_impedance, aluminum, fast_config).value
    f2 = force_pp0(2e-7, plasma_impedance, aluminum, fast_config).value
    assert f1 < f2 < 0.0


def test_force_is_energy_gradient(aluminum, plasma_impedance, fast_config):
    # F = -dE/da via central difference on the full quadrature route
    a, h = 1e-6, 1e-8
    e_hi = energy_pp0(a + h, plasma_impedance, aluminum, fast_config).value
    e_lo = energy_pp0(a - h, plasma_impedance, aluminum, fast_config).value
    f = force_pp0(a, plasma_impedance, aluminum, fast_config).value
    assert f == pytest.approx(-(e_hi - e_lo) / (2.0 * h), rel=1e-3)


def test_sphere_plate_mapping(aluminum, plasma_impedance, fast_config):
    a, R = 1e-6, 1e-4
    e = energy_pp0(a, plasma_impedance, aluminum, fast_config)
    f_sp = force_sphere0(a, R, plasma_impedance, aluminum, fast_config)
    assert f_sp.kind is ObservableKind.SPHERE_PLATE_FORCE
    assert f_sp.value == pytest.approx(2.0 * math.pi * R * e.value, rel=1e-14)
    f_sp2 = force_sphere0(a, 2.0 * R, plasma_impedance, aluminum, fast_config)
    assert f_sp2.value == pytest.approx(2.0 * f_sp.value, rel=1e-14)


def test_deviation_pins_at_100nm(aluminum, fast_config):
    # frozen values for Al at a = 100 nm, both formalisms fully converged
    d_f = relative_deviation(
        ObservableKind.FORCE_PER_AREA, 1e-7, aluminum,
        ImpedanceKind.PLASMA_EXACT, fast_config,
    )
    assert d_f == pytest.approx(4.635e-3, rel=2e-3)
    d_e = relative_deviation(
        ObservableKind.ENERGY_PER_AREA, 1e-7, aluminum,
        ImpedanceKind.PLASMA_EXACT, fast_config,
    )
    assert d_e == pytest.approx(3.0933e-3, rel=2e-3)


def test_deviation_approx_kind(aluminum, fast_config):
    d_e = relative_deviation(
        ObservableKind.ENERGY_PER_AREA, 1e-7, aluminum,
        ImpedanceKind.PLASMA_APPROX, fast_config,
    )
    assert d_e == pytest.approx(3.030e-3, rel=2e-3)


def test_deviation_shrinks_with_separation(aluminum, fast_config):
    d_near = relative_deviation(
        ObservableKind.FORCE_PER_AREA, 1e-7, aluminum,
        ImpedanceKind.PLASMA_EXACT, fast_config,
    )
    d_far = relative_deviation(
        ObservableKind.FORCE_PER_AREA, 1e-6, aluminum,
        ImpedanceKind.PLASMA_EXACT, fast_config,
    )
    assert 0.0 < abs(d_far) < abs(d_near)


def test_deviation_rejects_sphere_kind(aluminum):
    with pytest.raises(ValueError, match="plate observables"):
        relative_deviation(
            ObservableKind.SPHERE_PLATE_FORCE, 1e-7, aluminum,
            ImpedanceKind.PLASMA_EXACT,
        )


def test_normal_skin_corrections(aluminum):
    a = 1e-3
    e, f = normal_skin_pert0(a, aluminum)
    e0, f0 = ideal_closed_forms(a)
    root = math.sqrt(CODATA.c / (aluminum.sigma * a))
    assert 1.0 - e / e0 == pytest.approx(1.6578e-3, rel=1e-3)
    assert 1.0 - f / f0 == pytest.approx(1.9341e-3, rel=1e-3)
    # the coefficients multiplying sqrt(c/(sigma a))
    assert (1.0 - e / e0) / root == pytest.approx(1.656273, rel=1e-5)
    assert (1.0 - f / f0) / root == pytest.approx(1.932318, rel=1e-5)


def test_normal_skin_domain(aluminum):
    with pytest.raises(ValueError, match="out of range"):
        normal_skin_pert0(1e-7, aluminum)

"""Finite-temperature observables and the thermal perturbation expansions."""

import math

import pytest

from casimir_impedance import (
    ALUMINUM,
    CODATA,
    Formalism,
    ImpedanceKind,
    ImpedanceModel,
    Material,
    ObservableKind,
    QuadratureConfig,
    delta_T_energy_pert,
    delta_T_force_pert,
    effective_temperature,
    energy_pp0,
    energy_ppT,
    force_ppT,
    ideal_closed_forms,
    ideal_energy_T,
    ideal_energy_T_integral,
    integrate_y_from,
    log1mexp,
    riemann_zeta,
    sphere_plate_T,
    sum_matsubara_primed,
    thermal_ideal_ratios,
)


def test_closed_series_matches_integral_route():
    for a, T in ((1e-6, 300.0), (1e-3, 1.0), (5e-7, 70.0)):
        closed = ideal_energy_T(a, T)
        integral = ideal_energy_T_integral(a, T)
        assert closed == pytest.approx(integral, rel=1e-8)


def test_zero_temperature_limit():
    a = 1e-6
    e0 = ideal_closed_forms(a)[0]
    assert ideal_energy_T(a, 1e-3) == pytest.approx(e0, rel=1e-8)


def test_classical_high_temperature_limit():
    # far above T_eff only the l = 0 mode survives:
    # E -> -zeta(3) k_B T / (8 pi a^2)
    a = 1e-6
    T = 50.0 * effective_temperature(a)
    classical = -riemann_zeta(3.0) * CODATA.k_B * T / (8.0 * math.pi * a**2)
    assert ideal_energy_T_integral(a, T) == pytest.approx(classical, rel=1e-10)
    assert ideal_energy_T(a, T) == pytest.approx(classical, rel=1e-6)


def test_thermal_energy_grows_with_temperature():
    a = 1e-6
    e0 = abs(ideal_closed_forms(a)[0])
    prev = e0
    for tau in (0.1, 0.5, 1.0, 3.0):
        e = abs(ideal_energy_T(a, tau * effective_temperature(a)))
        assert e > prev
        prev = e


def test_primed_sum_convention():
    # explicit half-weight l = 0 reimplementation of the mode sum
    a, T = 1e-6, 300.0
    tau = T / effective_temperature(a)

    def term(l):
        return integrate_y_from(lambda y: y * log1mexp(y), 2.0 * math.pi * tau * l).value

    assert term(0) == pytest.approx(-riemann_zeta(3.0), rel=1e-10)
    explicit = 0.5 * term(0) + sum(term(l) for l in range(1, 40))
    assert sum_matsubara_primed(term).value == pytest.approx(explicit, rel=1e-10)
    expected = CODATA.k_B * T / (4.0 * math.pi * a**2) * explicit
    assert ideal_energy_T_integral(a, T) == pytest.approx(expected, rel=1e-10)


def test_ideal_model_short_circuits(ideal_model):
    a, T = 1e-6, 300.0
    obs = energy_ppT(a, T, ideal_model)
    assert obs.value == ideal_energy_T(a, T)
    assert obs.quadrature.converged


def test_thermal_observable_metadata(aluminum, plasma_impedance):
    a, T = 1e-6, 300.0
    obs = energy_ppT(a, T, plasma_impedance, aluminum)
    assert obs.kind is ObservableKind.ENERGY_PER_AREA
    assert obs.temperature == T
    assert obs.geometry.separation == a
    assert obs.decomposition is None
    assert obs.value < 0.0


def test_decomposition_identity(aluminum, plasma_impedance, fast_config):
    a, T = 1e-6, 300.0
    obs = energy_ppT(a, T, plasma_impedance, aluminum, fast_config, decompose=True)
    zero, thermal = obs.decomposition
    assert zero + thermal == obs.value
    assert zero == pytest.approx(
        energy_pp0(a, plasma_impedance, aluminum, fast_config).value, rel=1e-12
    )


def test_temperature_validation(plasma_impedance, aluminum):
    with pytest.raises(ValueError, match="temperature"):
        energy_ppT(1e-6, 0.0, plasma_impedance, aluminum)
    with pytest.raises(ValueError, match="separation"):
        energy_ppT(-1e-6, 300.0, plasma_impedance, aluminum)


def test_normal_skin_zero_frequency_is_safe(aluminum):
    # Z(0) = 0 at the l = 0 mode must not produce division noise
    model = ImpedanceModel(ImpedanceKind.NORMAL_SKIN, Formalism.IMPEDANCE)
    obs = energy_ppT(1e-6, 300.0, model, aluminum)
    assert math.isfinite(obs.value) and obs.quadrature.converged


def test_normal_skin_lifshitz_rejected_at_finite_T(aluminum):
    model = ImpedanceModel(ImpedanceKind.NORMAL_SKIN, Formalism.LIFSHITZ)
    with pytest.raises(ValueError, match="normal-skin"):
        energy_ppT(1e-6, 300.0, model, aluminum)


def test_energy_stable_under_tolerance_refinement(aluminum, plasma_impedance):
    a, T = 1e-6, 300.0
    coarse = energy_ppT(a, T, plasma_impedance, aluminum, QuadratureConfig(rel_tol=1e-6))
    fine = energy_ppT(a, T, plasma_impedance, aluminum, QuadratureConfig(rel_tol=1e-8))
    assert coarse.value == pytest.approx(fine.value, rel=1e-6)


def test_sphere_plate_thermal_mapping(aluminum, plasma_impedance, fast_config):
    a, R, T = 1e-6, 1e-4, 300.0
    e = energy_ppT(a, T, plasma_impedance, aluminum, fast_config)
    f_sp = sphere_plate_T(a, R, T, plasma_impedance, aluminum, fast_config)
    assert f_sp.value == pytest.approx(2.0 * math.pi * R * e.value, rel=1e-14)
    assert f_sp.kind is ObservableKind.SPHERE_PLATE_FORCE


def test_ideal_pert_matches_closed_difference():
    # with no material the expansion must reproduce E(T) - E(0) exactly
    for a, T in ((1e-6, 300.0), (1e-3, 1.0)):
        expected = ideal_energy_T(a, T) - ideal_closed_forms(a)[0]
        assert delta_T_energy_pert(a, T) == pytest.approx(expected, rel=1e-6)


def test_ideal_force_pert_matches_direct_difference(ideal_model):
    a, T = 1e-6, 300.0
    direct = force_ppT(a, T, ideal_model).value - ideal_closed_forms(a)[1]
    assert delta_T_force_pert(a, T) == pytest.approx(direct, rel=1e-6)


def test_pert_corrections_negative(aluminum):
    # thermal fluctuations deepen the attraction
    assert delta_T_energy_pert(1e-3, 1.0, aluminum) < 0.0
    assert delta_T_force_pert(1e-3, 1.0, aluminum) < 0.0


def test_pert_depends_only_on_skin_depth(aluminum):
    stiff = Material(omega_p=aluminum.omega_p, gamma=2.0 * aluminum.gamma, name="alt")
    assert stiff.delta_0 == aluminum.delta_0
    assert delta_T_energy_pert(1e-3, 1.0, stiff) == delta_T_energy_pert(
        1e-3, 1.0, aluminum
    )


def test_pert_domain(aluminum):
    with pytest.raises(ValueError, match="delta_0/a"):
        delta_T_energy_pert(1e-7, 300.0, aluminum)
    with pytest.raises(ValueError, match="delta_0/a"):
        delta_T_force_pert(1e-7, 300.0, aluminum)


def test_ratio_pins_1mm(aluminum):
    # frozen values for Al plates 1 mm apart at 1 K and 2 K; at millimeter
    # separations the metal responds in the normal skin regime
    model = ImpedanceModel(ImpedanceKind.NORMAL_SKIN, Formalism.IMPEDANCE)
    e_ratio, f_ratio = thermal_ideal_ratios(1e-3, 1.0, model, aluminum)
    assert e_ratio == pytest.approx(0.9999169, abs=2e-6)
    assert f_ratio == pytest.approx(0.9997448, abs=2e-6)
    e_ratio2, f_ratio2 = thermal_ideal_ratios(1e-3, 2.0, model, aluminum)
    assert e_ratio2 == pytest.approx(0.9999991, abs=2e-6)
    assert f_ratio2 == pytest.approx(0.9999945, abs=2e-6)


def test_ratios_approach_unity_with_temperature(aluminum):
    # at 1 mm the impedance correction fades as T grows past T_eff
    model = ImpedanceModel(ImpedanceKind.NORMAL_SKIN, Formalism.IMPEDANCE)
    _, f1 = thermal_ideal_ratios(1e-3, 1.0, model, aluminum)
    _, f2 = thermal_ideal_ratios(1e-3, 2.0, model, aluminum)
    assert abs(1.0 - f2) < abs(1.0 - f1)

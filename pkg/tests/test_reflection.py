"""Impedance functions and the per-polarization reflection factors."""

import math

import numpy as np
import pytest

from casimir_impedance import (
    ALUMINUM,
    CODATA,
    Formalism,
    ImpedanceKind,
    ImpedanceModel,
    impedance,
    reflection_factors,
    static_reflection_factors,
)

A = 1e-6
W_P = 2 * A * ALUMINUM.omega_p / CODATA.c
SIGMA_R = 2 * A * ALUMINUM.sigma / CODATA.c


def test_impedance_closed_forms():
    xi = np.array([0.0, 0.3, 2.0, 40.0])
    np.testing.assert_allclose(
        impedance(ImpedanceKind.PLASMA_EXACT, xi, A, ALUMINUM),
        xi / np.sqrt(W_P**2 + xi**2),
        rtol=1e-14,
    )
    np.testing.assert_allclose(
        impedance(ImpedanceKind.PLASMA_APPROX, xi, A, ALUMINUM), xi / W_P, rtol=1e-14
    )
    np.testing.assert_allclose(
        impedance(ImpedanceKind.NORMAL_SKIN, xi, A, ALUMINUM),
        np.sqrt(xi / (4 * math.pi * SIGMA_R)),
        rtol=1e-14,
    )
    assert impedance(ImpedanceKind.IDEAL_METAL, 5.0, A) == 0.0


def test_impedance_requires_material():
    with pytest.raises(ValueError, match="material"):
        impedance(ImpedanceKind.PLASMA_EXACT, 1.0, A)


def test_plasma_forms_agree_at_low_frequency():
    xi = np.array([1e-4, 1e-3])
    exact = impedance(ImpedanceKind.PLASMA_EXACT, xi, A, ALUMINUM)
    approx = impedance(ImpedanceKind.PLASMA_APPROX, xi, A, ALUMINUM)
    np.testing.assert_allclose(exact, approx, rtol=1e-7)


def test_factors_bounded_on_random_points():
    rng = np.random.default_rng(7)
    xi = rng.uniform(0.0, 30.0, 2000)
    y = xi + rng.uniform(0.0, 30.0, 2000)
    for kind in (ImpedanceKind.PLASMA_EXACT, ImpedanceKind.NORMAL_SKIN):
        Z = impedance(kind, xi, A, ALUMINUM)
        for formalism in Formalism:
            x_par, x_perp = reflection_factors(Z, y, xi, formalism)
            assert np.all((x_par >= 0) & (x_par <= 1))
            assert np.all((x_perp >= 0) & (x_perp <= 1))


def test_formalisms_coincide_on_diagonal():
    # at y = xi the propagation is purely along the normal and both
    # descriptions reduce to the same single-angle reflection
    xi = np.linspace(0.01, 25.0, 40)
    Z = impedance(ImpedanceKind.PLASMA_EXACT, xi, A, ALUMINUM)
    imp = reflection_factors(Z, xi, xi, Formalism.IMPEDANCE)
    lif = reflection_factors(Z, xi, xi, Formalism.LIFSHITZ)
    np.testing.assert_allclose(imp[0], lif[0], rtol=1e-12)
    np.testing.assert_allclose(imp[1], lif[1], rtol=1e-12)


def test_zero_impedance_recovers_ideal():
    x_par, x_perp = reflection_factors(0.0, 3.0, 1.0, Formalism.IMPEDANCE)
    assert x_par == 0.0 and x_perp == 0.0


def test_domain_validation():
    with pytest.raises(ValueError, match="y >= xi"):
        reflection_factors(0.5, 1.0, 2.0)
    with pytest.raises(ValueError, match=">= 0"):
        reflection_factors(-0.1, 2.0, 1.0)


def test_lifshitz_matches_permittivity_route():
    # independent reimplementation: Fresnel coefficients with the plasma
    # permittivity eps = 1 + (w_p/xi)^2; the mode-sum factors are 1 - r^2
    rng = np.random.default_rng(11)
    xi = rng.uniform(0.05, 20.0, 500)
    y = xi + rng.uniform(0.001, 20.0, 500)
    eps = 1.0 + (W_P / xi) ** 2
    K = np.sqrt(y**2 + (eps - 1.0) * xi**2)
    r_tm = (eps * y - K) / (eps * y + K)
    r_te = (y - K) / (y + K)
    Z = impedance(ImpedanceKind.PLASMA_EXACT, xi, A, ALUMINUM)
    x_par, x_perp = reflection_factors(Z, y, xi, Formalism.LIFSHITZ)
    np.testing.assert_allclose(x_par, 1.0 - r_tm**2, rtol=1e-10)
    np.testing.assert_allclose(x_perp, 1.0 - r_te**2, rtol=1e-10)


def test_static_factors_impedance_formalism_vanish():
    y = np.linspace(0.0, 40.0, 17)
    for kind in ImpedanceKind:
        model = ImpedanceModel(kind, Formalism.IMPEDANCE)
        x_par, x_perp = static_reflection_factors(model, y, A, ALUMINUM)
        assert np.all(x_par == 0.0) and np.all(x_perp == 0.0)


def test_static_factors_lifshitz_plasma():
    y = np.linspace(0.1, 30.0, 9)
    model = ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ)
    x_par, x_perp = static_reflection_factors(model, y, A, ALUMINUM)
    q = np.hypot(y, W_P)
    np.testing.assert_allclose(x_perp, 4 * y * q / (y + q) ** 2, rtol=1e-13)
    assert np.all(x_par == 0.0)


def test_static_factors_normal_skin_lifshitz_rejected():
    model = ImpedanceModel(ImpedanceKind.NORMAL_SKIN, Formalism.LIFSHITZ)
    with pytest.raises(ValueError, match="normal-skin"):
        static_reflection_factors(model, 1.0, A, ALUMINUM)


def test_factors_continuous_at_small_xi():
    # the xi -> 0 limit of the running factors matches the static values
    model = ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ)
    y = np.linspace(0.5, 10.0, 5)
    xs_par, xs_perp = static_reflection_factors(model, y, A, ALUMINUM)
    Z = impedance(ImpedanceKind.PLASMA_EXACT, 1e-8, A, ALUMINUM)
    xr_par, xr_perp = reflection_factors(Z, y, 1e-8, Formalism.LIFSHITZ)
    np.testing.assert_allclose(xr_perp, xs_perp, atol=1e-6)
    np.testing.assert_allclose(xr_par, xs_par, atol=1e-6)

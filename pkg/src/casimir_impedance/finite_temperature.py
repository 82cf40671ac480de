"""Finite-temperature Casimir observables via the primed Matsubara sum.

At temperature T the frequency integral of the zero-T theory collapses to a
sum over reduced Matsubara frequencies xi_l = 2 pi (T / T_eff) l, with the
l = 0 term at half weight (the prime on the sum):

    E(a, T) = E_ideal(a, T) + k_B T / (8 pi a^2) * S'_l I_E(xi_l)
    F(a, T) = -k_B T / (8 pi a^3) * S'_l I_F(xi_l)

    I_E = int_{xi_l} dy y   [ln(1 + x_par/(e^y - 1)) + ln(1 + x_perp/(e^y - 1))]
    I_F = int_{xi_l} dy y^2 [(1 - x_par)/(e^y - 1 + x_par) + (x_par -> x_perp)]

The ideal-metal energy E_ideal has an equivalent closed series in coth and
sinh^-2 (``ideal_energy_T``); the sum-of-integrals form is kept alongside as
an independent cross-check (``ideal_energy_T_integral``).

The thermal correction Delta_T = Q(a, T) - Q(a, 0) also has closed expansions
to second order in delta_0 / a, the penetration-depth-to-gap ratio
(``delta_T_energy_pert``, ``delta_T_force_pert``).  Their l-sums split into a
power-law part, summed exactly with zeta values, and an exponentially decaying
remainder in coth(pi l t) - 1 and sinh^-2(pi l t), t = T_eff / T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import CODATA, PhysicalConstants
from .geometry import Geometry, ThermalState
from .materials import Material
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    dilog,
    integrate_y_from,
    log1mexp,
    riemann_zeta,
    sum_matsubara_primed,
)
from .reflection import (
    ImpedanceKind,
    ImpedanceModel,
    impedance,
    reflection_factors,
    static_reflection_factors,
)
from .zero_temperature import (
    ObservableKind,
    energy_pp0,
    force_bracket,
    force_pp0,
    ideal_closed_forms,
)

__all__ = [
    "ThermalObservable",
    "ideal_energy_T",
    "ideal_energy_T_integral",
    "energy_ppT",
    "force_ppT",
    "sphere_plate_T",
    "delta_T_energy_pert",
    "delta_T_force_pert",
    "thermal_ideal_ratios",
]

# Arguments beyond this make every exponential thermal factor underflow; the
# hyperbolic helpers clamp there instead of evaluating exp(-2z) subnormals.
_CLAMP_Z = 350.0

# The second-order expansion in delta_0 / a loses meaning past this ratio.
_PERT_RATIO_MAX = 0.1


def _coth_minus_one(z: float) -> float:
    """coth(z) - 1 = 2 e^(-2z) / (1 - e^(-2z)), stable for all z > 0."""
    if z > _CLAMP_Z:
        return 0.0
    return 2.0 * math.exp(-2.0 * z) / (-math.expm1(-2.0 * z))


def _csch2(z: float) -> float:
    """sinh(z)^-2 = 4 e^(-2z) / (1 - e^(-2z))^2, stable for all z > 0."""
    if z > _CLAMP_Z:
        return 0.0
    return 4.0 * math.exp(-2.0 * z) / math.expm1(-2.0 * z) ** 2


@dataclass(frozen=True)
class ThermalObservable:
    """A finite-temperature Casimir quantity with its provenance attached.

    When ``decomposition`` is present it holds the (zero-T part, thermal
    correction) pair whose sum reproduces ``value``.
    """

    kind: ObservableKind
    value: float
    geometry: Geometry
    model: ImpedanceModel
    temperature: float
    quadrature: QuadratureResult
    decomposition: tuple[float, float] | None = None


def _thermal_state(a: float, T: float, constants: PhysicalConstants) -> ThermalState:
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    if not (T > 0.0):
        raise ValueError(f"temperature must be positive, got {T!r}")
    return ThermalState.for_gap(a, T, constants)


def ideal_energy_T(
    a: float,
    T: float,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Ideal-metal energy per unit area at temperature T, in J/m^2.

    Closed series relative to the zero-T value E0:

        E = E0 * {1 + (45/pi^3) * S_n [tau^3 n^-3 coth(pi n / tau)
                                       + pi tau^2 n^-2 sinh^-2(pi n / tau)]
                    - tau^4},    tau = T / T_eff.

    The coth is split as 1 + (coth - 1): the power-law part sums to
    tau^3 zeta(3) exactly and the remainder decays like e^(-2 pi n / tau),
    so truncation on series_tail_tol is geometric.
    """
    state = _thermal_state(a, T, constants)
    tau = 1.0 / state.t
    e0 = ideal_closed_forms(a, constants)[0]

    total = riemann_zeta(3.0) * tau**3
    terms = []
    for n in range(1, config.max_matsubara_terms + 1):
        z = math.pi * n / tau
        term = tau**3 / n**3 * _coth_minus_one(z) + math.pi * tau**2 / n**2 * _csch2(z)
        terms.append(term)
        if abs(term) <= config.series_tail_tol * total:
            break
    total += math.fsum(terms)
    return e0 * (1.0 + 45.0 / math.pi**3 * total - tau**4)


def ideal_energy_T_integral(
    a: float,
    T: float,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Ideal-metal energy at T from the primed sum of mode integrals.

    E = k_B T / (4 pi a^2) * S'_l int_{xi_l} dy y ln(1 - e^-y).  Slower than
    the closed series of :func:`ideal_energy_T` but independent of it; the
    two agree to quadrature accuracy.
    """
    state = _thermal_state(a, T, constants)
    tau = 1.0 / state.t

    def term(l: int) -> float:
        lower = 2.0 * math.pi * tau * l
        return integrate_y_from(lambda y: y * log1mexp(y), lower, config).value

    total = sum_matsubara_primed(term, config)
    return constants.k_B * T / (4.0 * math.pi * a**2) * total.value


def _matsubara_correction(
    a: float,
    T: float,
    model: ImpedanceModel,
    material: Material | None,
    config: QuadratureConfig,
    constants: PhysicalConstants,
    integrand_kind: ObservableKind,
) -> QuadratureResult:
    """Primed Matsubara sum of the per-frequency y-integrals.

    For the energy the integrand is the material-dependent part of the mode
    sum alone (the ideal-metal piece is carried by the closed series); for the
    force it is the complete bracket.
    """
    state = _thermal_state(a, T, constants)
    tau = 1.0 / state.t
    side = {"err": 0.0, "evals": 0, "ok": True}

    def factors_at(l: int, y: np.ndarray):
        if l == 0:
            return static_reflection_factors(model, y, a, material, constants)
        xi_l = 2.0 * math.pi * tau * l
        Z = impedance(model.kind, xi_l, a, material, constants)
        return reflection_factors(Z, y, xi_l, model.formalism)

    def term(l: int) -> float:
        lower = 2.0 * math.pi * tau * l

        def integrand(y: np.ndarray) -> np.ndarray:
            x_par, x_perp = factors_at(l, y)
            if integrand_kind is ObservableKind.ENERGY_PER_AREA:
                em1 = np.expm1(y)
                return y * (np.log1p(x_par / em1) + np.log1p(x_perp / em1))
            return y * y * force_bracket(x_par, x_perp, y)

        res = integrate_y_from(integrand, lower, config)
        side["err"] += res.abs_error_estimate
        side["evals"] += res.evaluations
        side["ok"] = side["ok"] and res.converged
        return res.value

    total = sum_matsubara_primed(term, config)
    return QuadratureResult(
        value=total.value,
        abs_error_estimate=total.abs_error_estimate + side["err"],
        evaluations=total.evaluations + side["evals"],
        converged=bool(total.converged and side["ok"]),
    )


def energy_ppT(
    a: float,
    T: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
    decompose: bool = False,
) -> ThermalObservable:
    """Casimir energy per unit area of parallel plates at temperature T.

    The ideal-metal part is evaluated from its closed series; the impedance
    correction is the primed Matsubara sum of y-integrals over the
    material-dependent logarithms.  With ``decompose=True`` the result also
    carries the (zero-T value, thermal correction) split.
    """
    geometry = Geometry(separation=a)
    ideal = ideal_energy_T(a, T, config, constants)
    if model.kind is ImpedanceKind.IDEAL_METAL:
        value = ideal
        quad = QuadratureResult(
            value=value, abs_error_estimate=0.0, evaluations=0, converged=True
        )
    else:
        corr = _matsubara_correction(
            a, T, model, material, config, constants, ObservableKind.ENERGY_PER_AREA
        )
        pref = constants.k_B * T / (8.0 * math.pi * a**2)
        value = ideal + pref * corr.value
        quad = replace(
            corr, value=value, abs_error_estimate=pref * corr.abs_error_estimate
        )
    decomposition = None
    if decompose:
        zero = energy_pp0(a, model, material, config, constants).value
        decomposition = (zero, value - zero)
    return ThermalObservable(
        kind=ObservableKind.ENERGY_PER_AREA,
        value=value,
        geometry=geometry,
        model=model,
        temperature=T,
        quadrature=quad,
        decomposition=decomposition,
    )


def force_ppT(
    a: float,
    T: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
    decompose: bool = False,
) -> ThermalObservable:
    """Casimir pressure between parallel plates at temperature T, in Pa.

    The complete bracket is summed over Matsubara frequencies; the ideal
    metal goes through the same path with both reflection factors zero, so
    the real-to-ideal comparison shares one code path.
    """
    geometry = Geometry(separation=a)
    corr = _matsubara_correction(
        a, T, model, material, config, constants, ObservableKind.FORCE_PER_AREA
    )
    pref = -constants.k_B * T / (8.0 * math.pi * a**3)
    value = pref * corr.value
    quad = replace(
        corr, value=value, abs_error_estimate=abs(pref) * corr.abs_error_estimate
    )
    decomposition = None
    if decompose:
        zero = force_pp0(a, model, material, config, constants).value
        decomposition = (zero, value - zero)
    return ThermalObservable(
        kind=ObservableKind.FORCE_PER_AREA,
        value=value,
        geometry=geometry,
        model=model,
        temperature=T,
        quadrature=quad,
        decomposition=decomposition,
    )


def sphere_plate_T(
    a: float,
    R: float,
    T: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> ThermalObservable:
    """Force on a sphere above a plate at temperature T: F = 2 pi R E(a, T)."""
    geometry = Geometry(separation=a, sphere_radius=R)
    energy = energy_ppT(a, T, model, material, config, constants)
    scale = 2.0 * math.pi * R
    return ThermalObservable(
        kind=ObservableKind.SPHERE_PLATE_FORCE,
        value=scale * energy.value,
        geometry=geometry,
        model=model,
        temperature=T,
        quadrature=replace(
            energy.quadrature,
            value=scale * energy.value,
            abs_error_estimate=scale * energy.quadrature.abs_error_estimate,
        ),
    )


def _pert_ratio(a: float, material: Material | None) -> float:
    if material is None:
        return 0.0
    d = material.delta_0 / a
    if d >= _PERT_RATIO_MAX:
        raise ValueError(
            f"delta_0/a = {d:.3g} is not small; the second-order thermal "
            f"expansion requires delta_0/a < {_PERT_RATIO_MAX}"
        )
    return d


def _pert_sum(term, config: QuadratureConfig) -> float:
    """Sum term(l) for l >= 1; terms decay like e^(-2 pi l t)."""
    res = sum_matsubara_primed(lambda l: 0.0 if l == 0 else term(l), config)
    if not res.converged:
        raise RuntimeError("thermal expansion l-sum did not converge")
    return res.value


def delta_T_energy_pert(
    a: float,
    T: float,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Thermal correction to the plate energy, second order in delta_0/a.

    Evaluates the closed l-sum expansion of Delta_T E in J/m^2.  The
    power-law parts are summed exactly:

        pi zeta(3)/(2 t^3) - zeta(4)/t^4
        + d (pi zeta(3)/t^3 - 4 zeta(4)/t^4) - d^2 pi zeta(5)/t^5

    with d = delta_0/a and t = T_eff/T; the remainder decays like
    e^(-2 pi l t) and is truncated on its geometric tail.  With no material
    the skin-depth corrections vanish and the ideal-metal correction is
    returned, which equals ideal_energy_T(a, T) - E0.
    """
    state = _thermal_state(a, T, constants)
    t = state.t
    d = _pert_ratio(a, material)
    z3, z4, z5 = riemann_zeta(3.0), riemann_zeta(4.0), riemann_zeta(5.0)

    algebraic = (
        math.pi * z3 / (2.0 * t**3)
        - z4 / t**4
        + d * (math.pi * z3 / t**3 - 4.0 * z4 / t**4)
        - d**2 * math.pi * z5 / t**5
    )

    def remainder(l: int) -> float:
        u = l * t
        z = math.pi * u
        r = _coth_minus_one(z)
        c2 = _csch2(z)
        order0 = math.pi / (2.0 * u**3) * r + math.pi**2 / (2.0 * u**2) * c2
        order1 = (
            math.pi / u**3 * r
            + math.pi**2 / u**2 * c2
            + 2.0 * math.pi**3 / u * (1.0 + r) * c2
        )
        # Bracket of the second order, minus its pi/u^5 power-law part.
        poly = 1.0 - 3.0 * (1.0 + r) ** 2 + (1.0 + r) / z - 1.0 / z**2
        logs = (
            2.0 * z * log1mexp(2.0 * z)
            - z**2 * r
            - float(dilog(math.exp(-2.0 * z) if z < _CLAMP_Z else 0.0))
        )
        order2 = 2.0 * math.pi**4 * c2 * poly + 6.0 / (math.pi * u**5) * logs
        return order0 + d * order1 - d**2 * order2

    total = algebraic + _pert_sum(remainder, config)
    return -constants.hbar * constants.c / (8.0 * math.pi**2 * a**3) * total


def delta_T_force_pert(
    a: float,
    T: float,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Thermal correction to the plate pressure, second order in delta_0/a.

    Same structure as :func:`delta_T_energy_pert`; the exact power-law part
    is zeta(4)/t^4 + d pi zeta(3)/t^3 and the remainder is sinh^-2 damped.
    """
    state = _thermal_state(a, T, constants)
    t = state.t
    d = _pert_ratio(a, material)
    z3, z4 = riemann_zeta(3.0), riemann_zeta(4.0)

    algebraic = z4 / t**4 + d * math.pi * z3 / t**3

    def remainder(l: int) -> float:
        u = l * t
        z = math.pi * u
        r = _coth_minus_one(z)
        c2 = _csch2(z)
        coth = 1.0 + r
        order0 = -math.pi**3 / u * coth * c2
        order1 = (
            math.pi**3
            / u
            * (
                r / z**2
                + c2 * (4.0 * coth + 2.0 * z - 6.0 * z * coth**2 + 1.0 / z)
            )
        )
        order2 = (
            3.0
            * math.pi**3
            / u
            * c2
            * (
                -4.0 * z
                + 5.0 * z**2 * coth
                + 12.0 * z * coth**2
                - 8.0 * z**2 * coth**3
                - 4.0 * coth
            )
        )
        return order0 + d * order1 + d**2 * order2

    total = algebraic + _pert_sum(remainder, config)
    return -constants.hbar * constants.c / (8.0 * math.pi**2 * a**4) * total


def thermal_ideal_ratios(
    a: float,
    T: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> tuple[float, float]:
    """(energy ratio, force ratio) of a real metal to the ideal metal at T.

    The energy denominator is the ideal-metal closed series; the force
    denominator runs the full Matsubara path with zero reflection factors.
    """
    ideal = ImpedanceModel(ImpedanceKind.IDEAL_METAL)
    e_ratio = (
        energy_ppT(a, T, model, material, config, constants).value
        / ideal_energy_T(a, T, config, constants)
    )
    f_ratio = (
        force_ppT(a, T, model, material, config, constants).value
        / force_ppT(a, T, ideal, None, config, constants).value
    )
    return e_ratio, f_ratio

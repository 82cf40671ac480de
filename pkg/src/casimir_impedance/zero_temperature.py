"""Zero-temperature Casimir observables for parallel plates and sphere-plate.

The energy per unit area and the pressure between parallel plates are wedge
integrals over reduced variables (xi, y):

    E(a) =  hbar c / (32 pi^2 a^3) * II_E
    F(a) = -hbar c / (32 pi^2 a^4) * II_F

    II_E = int dxi int_xi dy  y   [2 ln(1 - e^-y) + sum_p ln(1 + x_p/(e^y - 1))]
    II_F = int dxi int_xi dy  y^2 sum_p (1 - x_p) / (e^y - 1 + x_p)

with the polarization factors x_p from :mod:`casimir_impedance.reflection`.
Setting both factors to zero recovers the ideal-metal closed forms
E = -pi^2 hbar c/(720 a^3) and F = -pi^2 hbar c/(240 a^4).  The sphere-plate
force follows from the proximity mapping F_sp = 2 pi R E(a).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import CODATA, PhysicalConstants
from .geometry import Geometry
from .materials import Material
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    integrate_xi_y,
    log1mexp,
    riemann_zeta,
)
from .reflection import Formalism, ImpedanceKind, ImpedanceModel, impedance, reflection_factors

__all__ = [
    "ObservableKind",
    "Observable",
    "ideal_closed_forms",
    "energy_pp0",
    "force_pp0",
    "force_sphere0",
    "relative_deviation",
    "normal_skin_pert0",
]


class ObservableKind(enum.Enum):
    ENERGY_PER_AREA = "energy_per_area"    # J / m^2
    FORCE_PER_AREA = "force_per_area"      # Pa
    SPHERE_PLATE_FORCE = "sphere_plate_force"  # N


@dataclass(frozen=True)
class Observable:
    """A computed Casimir quantity with its provenance attached."""

    kind: ObservableKind
    value: float
    geometry: Geometry
    model: ImpedanceModel
    temperature: float
    quadrature: QuadratureResult


def ideal_closed_forms(
    a: float, constants: PhysicalConstants = CODATA
) -> tuple[float, float]:
    """Ideal-metal (E, F) at separation a: -pi^2 hbar c/(720 a^3), /(240 a^4)."""
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    hc = constants.hbar * constants.c
    return (
        -math.pi**2 * hc / (720.0 * a**3),
        -math.pi**2 * hc / (240.0 * a**4),
    )


def _factor_fn(model, a, material, constants):
    def factors(xi: np.ndarray, y: np.ndarray):
        Z = impedance(model.kind, xi, a, material, constants)
        return reflection_factors(Z, y, xi, model.formalism)

    return factors


def energy_bracket(x_par, x_perp, y):
    """Mode-sum bracket of the energy integrand (both polarizations)."""
    em1 = np.expm1(y)
    ideal = 2.0 * log1mexp(y)
    return ideal + np.log1p(x_par / em1) + np.log1p(x_perp / em1)


def force_bracket(x_par, x_perp, y):
    """Mode-sum bracket of the force integrand (both polarizations)."""
    em1 = np.expm1(y)
    return (1.0 - x_par) / (em1 + x_par) + (1.0 - x_perp) / (em1 + x_perp)


def energy_pp0(
    a: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> Observable:
    """Casimir energy per unit area of parallel plates at T = 0, in J/m^2."""
    geometry = Geometry(separation=a)
    factors = _factor_fn(model, a, material, constants)

    def integrand(xi: np.ndarray, y: np.ndarray) -> np.ndarray:
        x_par, x_perp = factors(xi, y)
        return y * energy_bracket(x_par, x_perp, y)

    raw = integrate_xi_y(integrand, config)
    scale = constants.hbar * constants.c / (32.0 * math.pi**2 * a**3)
    return Observable(
        kind=ObservableKind.ENERGY_PER_AREA,
        value=scale * raw.value,
        geometry=geometry,
        model=model,
        temperature=0.0,
        quadrature=replace(
            raw, value=scale * raw.value, abs_error_estimate=scale * raw.abs_error_estimate
        ),
    )


def force_pp0(
    a: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> Observable:
    """Casimir pressure between parallel plates at T = 0, in Pa (negative)."""
    geometry = Geometry(separation=a)
    factors = _factor_fn(model, a, material, constants)

    def integrand(xi: np.ndarray, y: np.ndarray) -> np.ndarray:
        x_par, x_perp = factors(xi, y)
        return y * y * force_bracket(x_par, x_perp, y)

    raw = integrate_xi_y(integrand, config)
    scale = -constants.hbar * constants.c / (32.0 * math.pi**2 * a**4)
    return Observable(
        kind=ObservableKind.FORCE_PER_AREA,
        value=scale * raw.value,
        geometry=geometry,
        model=model,
        temperature=0.0,
        quadrature=replace(
            raw,
            value=scale * raw.value,
            abs_error_estimate=abs(scale) * raw.abs_error_estimate,
        ),
    )


def force_sphere0(
    a: float,
    R: float,
    model: ImpedanceModel,
    material: Material | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> Observable:
    """Force on a sphere of radius R above a plate, F = 2 pi R E(a), in N.

    Valid to leading order in a/R; constructing the geometry warns when the
    ratio exceeds the trusted range.
    """
    geometry = Geometry(separation=a, sphere_radius=R)
    energy = energy_pp0(a, model, material, config, constants)
    scale = 2.0 * math.pi * R
    return Observable(
        kind=ObservableKind.SPHERE_PLATE_FORCE,
        value=scale * energy.value,
        geometry=geometry,
        model=model,
        temperature=0.0,
        quadrature=replace(
            energy.quadrature,
            value=scale * energy.value,
            abs_error_estimate=scale * energy.quadrature.abs_error_estimate,
        ),
    )


def relative_deviation(
    kind: ObservableKind,
    a: float,
    material: Material,
    impedance_kind: ImpedanceKind,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Relative difference (Q_L - Q_imp) / Q_L between the two formalisms.

    Q_L uses the permittivity-based reflection factors and Q_imp the impedance
    boundary condition, both with the same impedance kind.  Positive values
    mean the impedance approach binds the plates less strongly.
    """
    if kind is ObservableKind.ENERGY_PER_AREA:
        op = energy_pp0
    elif kind is ObservableKind.FORCE_PER_AREA:
        op = force_pp0
    else:
        raise ValueError(f"relative deviation is defined for plate observables, not {kind}")
    q_l = op(a, ImpedanceModel(impedance_kind, Formalism.LIFSHITZ), material, config, constants)
    q_i = op(a, ImpedanceModel(impedance_kind, Formalism.IMPEDANCE), material, config, constants)
    return (q_l.value - q_i.value) / q_l.value


# Largest normal-skin expansion parameter for which the first-order forms are
# meaningful; (1/sqrt(8 pi)) sqrt(c/(sigma a)) must stay below this.
_NORMAL_SKIN_PARAM_MAX = 0.01


def normal_skin_pert0(
    a: float,
    material: Material,
    constants: PhysicalConstants = CODATA,
) -> tuple[float, float]:
    """First-order normal-skin (E, F) at T = 0 from the analytic expansion.

    The expansion parameter is sqrt(c / (sigma a)); both observables shrink
    relative to the ideal metal:

        E = E_ideal [1 - (405 sqrt(2) / (4 pi^4)) zeta(7/2) sqrt(c/(sigma a))]
        F = F_ideal [1 - (945 sqrt(2) / (8 pi^4)) zeta(7/2) sqrt(c/(sigma a))]
    """
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    root = math.sqrt(constants.c / (material.sigma * a))
    small = root / math.sqrt(8.0 * math.pi)
    if small >= _NORMAL_SKIN_PARAM_MAX:
        raise ValueError(
            f"normal-skin expansion parameter {small:.3g} is out of range "
            f"(requires < {_NORMAL_SKIN_PARAM_MAX}); use the numerical route"
        )
    z72 = riemann_zeta(3.5)
    e_ideal, f_ideal = ideal_closed_forms(a, constants)
    e_coeff = 405.0 * math.sqrt(2.0) / (4.0 * math.pi**4) * z72
    f_coeff = 945.0 * math.sqrt(2.0) / (8.0 * math.pi**4) * z72
    return e_ideal * (1.0 - e_coeff * root), f_ideal * (1.0 - f_coeff * root)

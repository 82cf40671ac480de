"""Power series of the zero-temperature force in the penetration depth.

For small d = delta_0 / a the plate force admits the expansion

    F(a) = F0(a) * [c0 + c1 d + c2 d^2 + c3 d^3 + c4 d^4 + ...]

around the ideal value F0 = -pi^2 hbar c / (240 a^4).  Three coefficient
families are provided.  They share c0 = 1, c1 = -16/3, c2 = 24 and differ
from third order on:

    LifshitzPlasma   c3 = -(640/7)(1 - pi^2/210)     c4 = (2800/9)(1 - 163 pi^2/7350)
    ImpedanceExact   c3 = -(640/7)(1 + pi^2/280)     c4 = (2800/9)(1 + 5 pi^2/294)
    ImpedanceApprox  c3 = -(11520/(7 pi^4)) [zeta(3) + zeta(5)/8]
                     c4 = (14000/(3 pi^4)) [zeta(3) + zeta(5)/2]

All are stored as closed forms, not rounded decimals.  ImpedanceExact belongs
to the plasma impedance evaluated with its exact frequency dependence,
LifshitzPlasma to the permittivity route, and ImpedanceApprox is the
published series for the constant low-frequency impedance Z = xi / w_p.
Note that the direct quadrature of the force with that constant impedance
does NOT reproduce the ImpedanceApprox coefficients beyond second order (see
README); the set is kept because the comparison curves in the validation
suite are drawn from it.

``recover_coefficients`` inverts the problem: given numerically computed
force ratios it fits the polynomial and reports conditioning diagnostics, so
the closed forms above can be checked against the quadrature engine.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import CODATA, PhysicalConstants
from .materials import Material
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, riemann_zeta
from .reflection import Formalism, ImpedanceKind, ImpedanceModel
from .zero_temperature import force_pp0, ideal_closed_forms

__all__ = [
    "CoefficientVariant",
    "CoefficientSet",
    "CoefficientFit",
    "coefficients",
    "series_factor",
    "series_force",
    "series_force_deviation",
    "recover_coefficients",
]

# Beyond this ratio the quartic polynomial is meaningless.
_SERIES_RATIO_MAX = 0.3
# Above this the truncation error is no longer small; warn but proceed.
_SERIES_RATIO_WARN = 0.1
# Fits are only accepted deep in the asymptotic regime.
_FIT_RATIO_MAX = 0.05
_FIT_CONDITION_LIMIT = 1e10


class CoefficientVariant(enum.Enum):
    """Which closed-form coefficient family the series uses."""

    LIFSHITZ_PLASMA = "lifshitz-plasma"
    IMPEDANCE_EXACT = "impedance-exact"
    IMPEDANCE_APPROX = "impedance-approx"


@dataclass(frozen=True)
class CoefficientSet:
    """Coefficients c0..c4 of the force series for one variant."""

    variant: CoefficientVariant
    c: tuple[float, float, float, float, float]


def coefficients(variant: CoefficientVariant) -> CoefficientSet:
    """Exact closed-form series coefficients for the requested variant."""
    c0, c1, c2 = 1.0, -16.0 / 3.0, 24.0
    pi2 = math.pi**2
    if variant is CoefficientVariant.LIFSHITZ_PLASMA:
        c3 = -640.0 / 7.0 * (1.0 - pi2 / 210.0)
        c4 = 2800.0 / 9.0 * (1.0 - 163.0 * pi2 / 7350.0)
    elif variant is CoefficientVariant.IMPEDANCE_EXACT:
        c3 = -640.0 / 7.0 * (1.0 + pi2 / 280.0)
        c4 = 2800.0 / 9.0 * (1.0 + 5.0 * pi2 / 294.0)
    elif variant is CoefficientVariant.IMPEDANCE_APPROX:
        z3, z5 = riemann_zeta(3.0), riemann_zeta(5.0)
        c3 = -11520.0 / (7.0 * math.pi**4) * (z3 + z5 / 8.0)
        c4 = 14000.0 / (3.0 * math.pi**4) * (z3 + z5 / 2.0)
    else:
        raise ValueError(f"unknown coefficient variant: {variant!r}")
    return CoefficientSet(variant=variant, c=(c0, c1, c2, c3, c4))


def _check_order(order: int) -> int:
    if not (0 <= order <= 4):
        raise ValueError(f"series order must lie in 0..4, got {order!r}")
    return order


def series_factor(d: float, variant: CoefficientVariant, order: int = 4) -> float:
    """Polynomial factor F/F0 at d = delta_0/a, truncated at the given order."""
    order = _check_order(order)
    if not (0.0 <= d < _SERIES_RATIO_MAX):
        raise ValueError(
            f"delta_0/a = {d:.3g} is outside the series domain [0, {_SERIES_RATIO_MAX})"
        )
    if d > _SERIES_RATIO_WARN:
        warnings.warn(
            f"delta_0/a = {d:.3g} exceeds {_SERIES_RATIO_WARN}; the truncated "
            "series is only qualitative here",
            stacklevel=2,
        )
    c = coefficients(variant).c
    return float(np.polynomial.polynomial.polyval(d, c[: order + 1]))


def series_force(
    a: float,
    material: Material,
    variant: CoefficientVariant,
    order: int = 4,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Series approximation to the zero-T plate pressure, in Pa."""
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    f0 = ideal_closed_forms(a, constants)[1]
    return f0 * series_factor(material.delta_0 / a, variant, order)


def series_force_deviation(
    a: float,
    material: Material,
    variant: CoefficientVariant = CoefficientVariant.IMPEDANCE_APPROX,
    order: int = 4,
    config: QuadratureConfig = DEFAULT_CONFIG,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Relative deviation (F_L - F_series)/F_L of a series from the reference.

    The reference F_L is the numerically integrated force in the
    permittivity formalism with the exact plasma impedance, i.e. the same
    baseline against which the direct quadratures are compared.
    """
    reference = force_pp0(
        a,
        ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ),
        material,
        config,
        constants,
    ).value
    approx = series_force(a, material, variant, order, constants)
    return (reference - approx) / reference


@dataclass(frozen=True)
class CoefficientFit:
    """Least-squares estimate of series coefficients from force samples.

    ``sensitivity[k]`` bounds the change of ``estimates[k]`` per unit 2-norm
    perturbation of the sampled ratios; ``condition_number`` is that of the
    scaled Vandermonde matrix actually solved.
    """

    order: int
    estimates: tuple[float, ...]
    condition_number: float
    sensitivity: tuple[float, ...]
    residual_norm: float


def recover_coefficients(
    samples: Sequence[tuple[float, float]],
    material: Material,
    order: int = 4,
) -> CoefficientFit:
    """Fit c0..c_order from (separation, force/F0 ratio) samples.

    The fit runs on the scaled variable x/x_max, where x = delta_0/a, which
    keeps the Vandermonde condition number moderate over a decade of x.
    Conditioning above 1e10 is reported with a warning, not an error.
    """
    order = _check_order(order)
    if len(samples) < order + 2:
        raise ValueError(
            f"need at least order + 2 = {order + 2} samples, got {len(samples)}"
        )
    a_vals = np.asarray([s[0] for s in samples], dtype=float)
    ratios = np.asarray([s[1] for s in samples], dtype=float)
    if np.any(a_vals <= 0.0):
        raise ValueError("all separations must be positive")
    x = material.delta_0 / a_vals
    if np.max(x) >= _FIT_RATIO_MAX:
        raise ValueError(
            f"samples must stay below delta_0/a = {_FIT_RATIO_MAX}; "
            f"largest is {np.max(x):.3g}"
        )
    if np.max(x) / np.min(x) < 10.0:
        raise ValueError("samples must span at least a decade in delta_0/a")

    x_max = float(np.max(x))
    V = np.vander(x / x_max, N=order + 1, increasing=True)
    beta, res, rank, _ = np.linalg.lstsq(V, ratios, rcond=None)
    cond = float(np.linalg.cond(V))
    if cond > _FIT_CONDITION_LIMIT:
        warnings.warn(
            f"Vandermonde condition number {cond:.3g} exceeds "
            f"{_FIT_CONDITION_LIMIT:.0e}; coefficient estimates are unreliable",
            stacklevel=2,
        )
    scale = x_max ** np.arange(order + 1)
    estimates = beta / scale
    pinv = np.linalg.pinv(V)
    sens = np.linalg.norm(pinv, axis=1) / scale
    fitted = V @ beta
    return CoefficientFit(
        order=order,
        estimates=tuple(float(b) for b in estimates),
        condition_number=cond,
        sensitivity=tuple(float(s) for s in sens),
        residual_norm=float(np.linalg.norm(ratios - fitted)),
    )

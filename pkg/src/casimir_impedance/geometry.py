"""Geometry, thermal state, and the dimensionless variables of the problem.

All integrals are evaluated in reduced variables: frequencies are scaled as
xi = 2 a zeta / c and transverse quantities as y = 2 R a, where a is the gap.
Temperature enters through the effective temperature k_B T_eff = hbar c / (2a)
of the gap.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants

__all__ = [
    "Geometry",
    "ThermalState",
    "to_reduced",
    "to_reduced_y",
    "effective_temperature",
    "matsubara_frequencies",
]

# Proximity treatment of the sphere is good to relative order a/R; past this
# ratio the leading-order mapping is no longer quantitatively trustworthy.
_PROXIMITY_RATIO_WARN = 0.01


@dataclass(frozen=True)
class Geometry:
    """Plate separation, optionally with a sphere radius above the plate."""

    separation: float
    sphere_radius: float | None = None

    def __post_init__(self) -> None:
        if not (self.separation > 0.0):
            raise ValueError(f"separation must be positive, got {self.separation!r}")
        if self.sphere_radius is not None:
            if not (self.sphere_radius > 0.0):
                raise ValueError(
                    f"sphere_radius must be positive, got {self.sphere_radius!r}"
                )
            ratio = self.separation / self.sphere_radius
            if ratio > _PROXIMITY_RATIO_WARN:
                warnings.warn(
                    f"separation/sphere_radius = {ratio:.3g} exceeds "
                    f"{_PROXIMITY_RATIO_WARN}; the sphere-plate mapping has an "
                    "error of this order",
                    stacklevel=2,
                )


@dataclass(frozen=True)
class ThermalState:
    """Temperature of a gap together with its derived reduced quantities.

    ``t = T_eff / T`` is finite only for T > 0; the zero-temperature state
    carries t = inf.
    """

    T: float
    T_eff: float
    t: float

    def __post_init__(self) -> None:
        if self.T < 0.0:
            raise ValueError(f"temperature must be >= 0, got {self.T!r}")

    @classmethod
    def for_gap(
        cls, a: float, T: float, constants: PhysicalConstants = CODATA
    ) -> "ThermalState":
        T_eff = effective_temperature(a, constants)
        t = T_eff / T if T > 0.0 else math.inf
        return cls(T=T, T_eff=T_eff, t=t)


def effective_temperature(a: float, constants: PhysicalConstants = CODATA) -> float:
    """Effective temperature of a gap of width a: k_B T_eff = hbar c / (2 a)."""
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    return constants.hbar * constants.c / (2.0 * a * constants.k_B)


def to_reduced(zeta, a: float, constants: PhysicalConstants = CODATA):
    """Map an imaginary angular frequency zeta (rad/s) to xi = 2 a zeta / c."""
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    zeta = np.asarray(zeta, dtype=float)
    if np.any(zeta < 0.0):
        raise ValueError("imaginary frequency zeta must be >= 0")
    out = 2.0 * a * zeta / constants.c
    return float(out) if out.ndim == 0 else out


def to_reduced_y(R, a: float):
    """Map the radial wave number R (1/m) to the reduced variable y = 2 R a."""
    if not (a > 0.0):
        raise ValueError(f"separation must be positive, got {a!r}")
    R = np.asarray(R, dtype=float)
    if np.any(R < 0.0):
        raise ValueError("radial wave number must be >= 0")
    out = 2.0 * R * a
    return float(out) if out.ndim == 0 else out


def matsubara_frequencies(
    T: float, a: float, l_max: int, constants: PhysicalConstants = CODATA
) -> np.ndarray:
    """Reduced Matsubara frequencies xi_l = 2 pi (T / T_eff) l for l = 0..l_max.

    The underlying dimensional frequencies are zeta_l = 2 pi k_B T l / hbar.
    """
    if not (T > 0.0):
        raise ValueError(f"temperature must be positive, got {T!r}")
    if l_max < 0:
        raise ValueError(f"l_max must be >= 0, got {l_max!r}")
    T_eff = effective_temperature(a, constants)
    return 2.0 * math.pi * (T / T_eff) * np.arange(l_max + 1, dtype=float)

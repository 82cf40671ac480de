"""Casimir energy and force between aluminum plates vs ideal mirrors.

Walks the separation range where finite conductivity matters most and
prints how far each impedance model falls short of the ideal-metal
closed forms.
"""

import numpy as np

from casimir_impedance import (
    ALUMINUM,
    Formalism,
    ImpedanceKind,
    ImpedanceModel,
    energy_pp0,
    force_pp0,
    force_sphere0,
    ideal_closed_forms,
)

MODELS = {
    "plasma exact": ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.IMPEDANCE),
    "plasma approx": ImpedanceModel(ImpedanceKind.PLASMA_APPROX, Formalism.IMPEDANCE),
    "permittivity": ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ),
}


def main():
    print(f"material: {ALUMINUM.name}, omega_p = {ALUMINUM.omega_p:.3e} rad/s")
    print(f"plasma skin depth delta_0 = {ALUMINUM.delta_0 * 1e9:.2f} nm\n")

    header = f"{'a [um]':>8} {'E_ideal [J/m^2]':>15}"
    for name in MODELS:
        header += f" {name + ' E/E0':>15}"
    print(header)
    for a in np.geomspace(1e-7, 5e-6, 8):
        e0, _ = ideal_closed_forms(a)
        row = f"{a * 1e6:8.3f} {e0:15.4e}"
        for model in MODELS.values():
            ratio = energy_pp0(a, model, ALUMINUM).value / e0
            row += f" {ratio:15.6f}"
        print(row)

    # the sphere-plate force is what experiments actually measure
    a, R = 2e-7, 1e-4
    f_sphere = force_sphere0(
        a, R, ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.IMPEDANCE), ALUMINUM
    )
    f_plate = force_pp0(a, MODELS["plasma exact"], ALUMINUM)
    print(f"\nsphere R = {R * 1e6:.0f} um at a = {a * 1e9:.0f} nm:")
    print(f"  plate-plate pressure {f_plate.value:.4e} Pa")
    print(f"  sphere-plate force   {f_sphere.value:.4e} N "
          f"(error estimate {f_sphere.quadrature.abs_error_estimate:.1e})")


if __name__ == "__main__":
    main()

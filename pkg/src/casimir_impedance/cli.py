"""Command-line frontend: point values, separation scans, deviation curves.

Commands
--------
point          energy and force at one (a, T)
scan           energy and force over a separation grid
figure1        force deviation curves: direct impedance quadrature and the
               constant-impedance series, both against the permittivity-route
               reference
figure2        energy deviation curves, both impedance kinds directly
coefficients   the three closed-form series coefficient families
thermal-ratio  real-to-ideal energy and force ratios at temperature T

Output is CSV: ``#``-prefixed provenance header (constants, material, model,
tolerances, tool version, column names), then purely numeric rows in
scientific notation with 17 significant digits.  Rows derived from quadrature
carry the error estimate and a converged flag.  Scans are computed in a
thread pool (capped by the CASIMIR_THREADS environment variable) and written
in grid order, so identical configurations produce byte-identical files.

Exit status: 0 on success, 1 on configuration errors (the message names the
offending field), 2 when any output row failed to converge.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

from . import __version__
from .constants import CODATA
from .finite_temperature import (
    energy_ppT,
    force_ppT,
    ideal_energy_T,
    sphere_plate_T,
)
from .geometry import effective_temperature
from .materials import PRESETS, Material, load_material
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .reflection import Formalism, ImpedanceKind, ImpedanceModel
from .series import CoefficientVariant, coefficients, series_force
from .zero_temperature import energy_pp0, force_pp0, force_sphere0

__all__ = [
    "RunSpec",
    "SpecError",
    "parse_config",
    "serialize_config",
    "parse_length",
    "parse_grid",
    "run",
    "main",
]

_COMMANDS = ("point", "scan", "figure1", "figure2", "coefficients", "thermal-ratio")

_LENGTH_SUFFIXES = {"nm": 1e-9, "um": 1e-6, "mm": 1e-3}


class SpecError(ValueError):
    """Configuration problem; the message names the offending field."""


@dataclass(frozen=True)
class RunSpec:
    """A fully described run: command, physics choices, grid, output."""

    command: str
    material: str | None = None
    model: str = "plasma-exact"
    formalism: str = "impedance"
    a: float | None = None
    grid: tuple[float, float, int, bool] | None = None
    T: float = 0.0
    R: float | None = None
    rel_tol: float | None = None
    out: str | None = None


def parse_length(text: str | float, key: str = "a") -> float:
    """A length in meters; strings may carry an nm/um/mm suffix."""
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        text = text.strip()
        scale = 1.0
        for suffix, mult in _LENGTH_SUFFIXES.items():
            if text.endswith(suffix):
                text, scale = text[: -len(suffix)], mult
                break
        try:
            value = float(text) * scale
        except ValueError:
            raise SpecError(f"{key}: cannot parse length {text!r}") from None
    if not (value > 0.0) or not math.isfinite(value):
        raise SpecError(f"{key}: length must be positive and finite, got {value!r}")
    return value


def parse_grid(text) -> tuple[float, float, int, bool]:
    """A separation grid MIN:MAX:COUNT[:log|lin], lengths with suffixes."""
    if isinstance(text, (list, tuple)):
        parts = [str(p) for p in text]
    else:
        parts = str(text).strip().split(":")
    if len(parts) not in (3, 4):
        raise SpecError(f"grid: expected MIN:MAX:COUNT[:log|lin], got {text!r}")
    lo = parse_length(parts[0], "grid")
    hi = parse_length(parts[1], "grid")
    try:
        count = int(parts[2])
    except ValueError:
        raise SpecError(f"grid: count must be an integer, got {parts[2]!r}") from None
    log = False
    if len(parts) == 4:
        if parts[3] not in ("log", "lin"):
            raise SpecError(f"grid: spacing must be 'log' or 'lin', got {parts[3]!r}")
        log = parts[3] == "log"
    if not (lo < hi):
        raise SpecError(f"grid: min must be below max, got {lo!r} >= {hi!r}")
    if count < 2:
        raise SpecError(f"grid: count must be at least 2, got {count}")
    return (lo, hi, count, log)


# Per-key coercers from raw file/flag values to RunSpec field values.
_PARSERS = {
    "command": lambda v: str(v),
    "material": lambda v: str(v),
    "model": lambda v: str(v),
    "formalism": lambda v: str(v),
    "a": lambda v: parse_length(v, "a"),
    "grid": parse_grid,
    "T": lambda v: float(v),
    "R": lambda v: parse_length(v, "R"),
    "rel_tol": lambda v: float(v),
    "out": lambda v: str(v),
}


def _validate(spec: RunSpec) -> RunSpec:
    if spec.command not in _COMMANDS:
        raise SpecError(
            f"command: must be one of {', '.join(_COMMANDS)}, got {spec.command!r}"
        )
    try:
        kind = ImpedanceKind(spec.model)
    except ValueError:
        raise SpecError(f"model: unknown impedance kind {spec.model!r}") from None
    try:
        Formalism(spec.formalism)
    except ValueError:
        raise SpecError(f"formalism: unknown formalism {spec.formalism!r}") from None
    if (
        spec.command != "coefficients"
        and kind is not ImpedanceKind.IDEAL_METAL
        and spec.material is None
    ):
        raise SpecError(f"material: required for model {spec.model!r}")
    if spec.command in ("point", "thermal-ratio") and spec.a is None:
        raise SpecError(f"a: required for command {spec.command!r}")
    if spec.command in ("scan", "figure1", "figure2") and spec.grid is None:
        raise SpecError(f"grid: required for command {spec.command!r}")
    if not (spec.T >= 0.0):
        raise SpecError(f"T: temperature must be non-negative, got {spec.T!r}")
    if spec.command == "thermal-ratio" and spec.T == 0.0:
        raise SpecError("T: thermal-ratio requires T > 0")
    if spec.rel_tol is not None and not (0.0 < spec.rel_tol < 1.0):
        raise SpecError(f"rel_tol: must lie in (0, 1), got {spec.rel_tol!r}")
    return spec


def parse_config(path: str | Path | None, flags: dict | None = None) -> RunSpec:
    """Build a validated RunSpec from a config file plus flag overrides.

    The file may be JSON or key=value lines (# comments allowed); CLI flag
    values take precedence over file values.  Either source may be empty as
    long as the merge is complete.
    """
    raw: dict = {}
    if path is not None:
        text = Path(path).read_text()
        if text.lstrip().startswith("{"):
            try:
                raw = json.loads(text)
            except json.JSONDecodeError as exc:
                raise SpecError(f"config: invalid JSON ({exc})") from None
        else:
            for ln, line in enumerate(text.splitlines(), start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise SpecError(f"config: line {ln} is not key=value: {line!r}")
                key, _, value = line.partition("=")
                raw[key.strip()] = value.strip()
    for key, value in (flags or {}).items():
        if value is not None:
            raw[key] = value
    merged = {}
    for key, value in raw.items():
        if key not in _PARSERS:
            raise SpecError(f"{key}: unknown configuration key")
        try:
            merged[key] = _PARSERS[key](value)
        except SpecError:
            raise
        except (TypeError, ValueError) as exc:
            raise SpecError(f"{key}: {exc}") from None
    if "command" not in merged:
        raise SpecError("command: required")
    return _validate(RunSpec(**merged))


def serialize_config(spec: RunSpec) -> str:
    """Render a RunSpec as key=value lines that parse_config reads back."""
    lines = []
    for f in fields(spec):
        value = getattr(spec, f.name)
        if value is None:
            continue
        if f.name == "grid":
            lo, hi, count, log = value
            value = f"{lo!r}:{hi!r}:{count}:{'log' if log else 'lin'}"
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{f.name}={value}")
    return "\n".join(lines) + "\n"


def _resolve_material(spec: RunSpec) -> Material | None:
    if spec.material is None:
        return None
    if spec.material in PRESETS:
        return PRESETS[spec.material]
    path = Path(spec.material)
    if not path.exists():
        raise SpecError(
            f"material: {spec.material!r} is neither a preset "
            f"({', '.join(sorted(PRESETS))}) nor a file"
        )
    return load_material(path)


def _config(spec: RunSpec) -> QuadratureConfig:
    if spec.rel_tol is None:
        return DEFAULT_CONFIG
    return QuadratureConfig(rel_tol=spec.rel_tol)


def _threads() -> int:
    env = os.environ.get("CASIMIR_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise SpecError(f"CASIMIR_THREADS: not an integer: {env!r}") from None
        if n < 1:
            raise SpecError(f"CASIMIR_THREADS: must be >= 1, got {n}")
        return n
    return min(32, os.cpu_count() or 1)


def _grid_points(grid: tuple[float, float, int, bool]) -> list[float]:
    import numpy as np

    lo, hi, count, log = grid
    if log:
        return list(np.geomspace(lo, hi, count))
    return list(np.linspace(lo, hi, count))


def _fmt(value: float) -> str:
    return f"{value:.16e}"


class _Csv:
    """Accumulates provenance lines and numeric rows, then writes them."""

    def __init__(self, spec: RunSpec, material: Material | None, columns: list[str]):
        config = _config(spec)
        self.header = [
            f"# tool = casimir-impedance {__version__}",
            f"# command = {spec.command}",
            f"# hbar_Js = {CODATA.hbar!r}",
            f"# c_m_s = {CODATA.c!r}",
            f"# k_B_J_K = {CODATA.k_B!r}",
            f"# material = {material.name if material else 'none'}",
            f"# omega_p_rad_s = {material.omega_p!r}" if material else "# omega_p_rad_s = nan",
            f"# gamma_rad_s = {material.gamma!r}" if material else "# gamma_rad_s = nan",
            f"# model = {spec.model}",
            f"# formalism = {spec.formalism}",
            f"# T_K = {spec.T!r}",
            f"# rel_tol = {config.rel_tol!r}",
            f"# series_tail_tol = {config.series_tail_tol!r}",
        ]
        if spec.command == "point":
            self.header.append("# kind = 0 energy, 1 force, 2 sphere")
        self.header.append(f"# columns = {','.join(columns)}")
        self.rows: list[list[float]] = []

    def add(self, *values: float) -> None:
        self.rows.append(list(values))

    def render(self) -> str:
        lines = self.header + [",".join(_fmt(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def _point_rows(spec: RunSpec, material, model, config):
    """One row per observable: kind index, value, error, converged."""
    rows = []
    if spec.T == 0.0:
        e = energy_pp0(spec.a, model, material, config)
        f = force_pp0(spec.a, model, material, config)
        obs = [e, f]
        if spec.R is not None:
            obs.append(force_sphere0(spec.a, spec.R, model, material, config))
    else:
        e = energy_ppT(spec.a, spec.T, model, material, config)
        f = force_ppT(spec.a, spec.T, model, material, config)
        obs = [e, f]
        if spec.R is not None:
            obs.append(sphere_plate_T(spec.a, spec.R, spec.T, model, material, config))
    for index, ob in enumerate(obs):
        rows.append(
            (
                spec.a,
                spec.T,
                float(index),
                ob.value,
                ob.quadrature.abs_error_estimate,
                float(ob.quadrature.converged),
            )
        )
    return rows


def _scan_row(a: float, spec: RunSpec, material, model, config):
    if spec.T == 0.0:
        e = energy_pp0(a, model, material, config)
        f = force_pp0(a, model, material, config)
    else:
        e = energy_ppT(a, spec.T, model, material, config)
        f = force_ppT(a, spec.T, model, material, config)
    return (
        a,
        e.value,
        e.quadrature.abs_error_estimate,
        float(e.quadrature.converged),
        f.value,
        f.quadrature.abs_error_estimate,
        float(f.quadrature.converged),
    )


def _figure1_row(a: float, material, config):
    reference = force_pp0(
        a, ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ), material, config
    )
    direct = force_pp0(
        a, ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.IMPEDANCE), material, config
    )
    approx = series_force(a, material, CoefficientVariant.IMPEDANCE_APPROX, 4)
    d_exact = (reference.value - direct.value) / reference.value
    d_approx = (reference.value - approx) / reference.value
    err = (
        reference.quadrature.abs_error_estimate + direct.quadrature.abs_error_estimate
    ) / abs(reference.value)
    conv = reference.quadrature.converged and direct.quadrature.converged
    return (a, d_exact, d_approx, err, float(conv))


def _figure2_row(a: float, material, config):
    row = [a]
    err = 0.0
    conv = True
    for kind in (ImpedanceKind.PLASMA_EXACT, ImpedanceKind.PLASMA_APPROX):
        reference = energy_pp0(
            a, ImpedanceModel(kind, Formalism.LIFSHITZ), material, config
        )
        direct = energy_pp0(
            a, ImpedanceModel(kind, Formalism.IMPEDANCE), material, config
        )
        row.append((reference.value - direct.value) / reference.value)
        err += (
            reference.quadrature.abs_error_estimate
            + direct.quadrature.abs_error_estimate
        ) / abs(reference.value)
        conv = conv and reference.quadrature.converged and direct.quadrature.converged
    row.extend([err, float(conv)])
    return tuple(row)


def _thermal_ratio_row(spec: RunSpec, material, model, config):
    ideal = ImpedanceModel(ImpedanceKind.IDEAL_METAL)
    e_real = energy_ppT(spec.a, spec.T, model, material, config)
    e_ideal = ideal_energy_T(spec.a, spec.T, config)
    f_real = force_ppT(spec.a, spec.T, model, material, config)
    f_ideal = force_ppT(spec.a, spec.T, ideal, None, config)
    e_ratio = e_real.value / e_ideal
    f_ratio = f_real.value / f_ideal.value
    err = e_real.quadrature.abs_error_estimate / abs(e_ideal) + (
        f_real.quadrature.abs_error_estimate
        + abs(f_ratio) * f_ideal.quadrature.abs_error_estimate
    ) / abs(f_ideal.value)
    conv = (
        e_real.quadrature.converged
        and f_real.quadrature.converged
        and f_ideal.quadrature.converged
    )
    return (
        spec.a,
        spec.T,
        effective_temperature(spec.a),
        e_ratio,
        f_ratio,
        err,
        float(conv),
    )


_COLUMNS = {
    "point": ["a_m", "T_K", "kind", "value", "abs_error", "converged"],
    "scan": [
        "a_m",
        "energy_J_m2",
        "energy_abs_error",
        "energy_converged",
        "force_Pa",
        "force_abs_error",
        "force_converged",
    ],
    "figure1": ["a_m", "deltaF_exact", "deltaF_approx", "abs_error", "converged"],
    "figure2": ["a_m", "deltaE_exact", "deltaE_approx", "abs_error", "converged"],
    "coefficients": ["k", "lifshitz_plasma", "impedance_exact", "impedance_approx"],
    "thermal-ratio": [
        "a_m",
        "T_K",
        "T_eff_K",
        "energy_ratio",
        "force_ratio",
        "abs_error",
        "converged",
    ],
}


def run(spec: RunSpec, stream=None) -> int:
    """Execute a validated RunSpec; returns the process exit status."""
    spec = _validate(spec)
    material = _resolve_material(spec)
    model = ImpedanceModel(ImpedanceKind(spec.model), Formalism(spec.formalism))
    config = _config(spec)
    csv = _Csv(spec, material, _COLUMNS[spec.command])

    if spec.command == "point":
        for row in _point_rows(spec, material, model, config):
            csv.add(*row)
    elif spec.command == "scan":
        points = _grid_points(spec.grid)
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            rows = list(
                pool.map(lambda a: _scan_row(a, spec, material, model, config), points)
            )
        for row in rows:
            csv.add(*row)
    elif spec.command == "figure1":
        points = _grid_points(spec.grid)
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            rows = list(pool.map(lambda a: _figure1_row(a, material, config), points))
        for row in rows:
            csv.add(*row)
    elif spec.command == "figure2":
        points = _grid_points(spec.grid)
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            rows = list(pool.map(lambda a: _figure2_row(a, material, config), points))
        for row in rows:
            csv.add(*row)
    elif spec.command == "coefficients":
        sets = {v: coefficients(v).c for v in CoefficientVariant}
        for k in range(5):
            csv.add(
                float(k),
                sets[CoefficientVariant.LIFSHITZ_PLASMA][k],
                sets[CoefficientVariant.IMPEDANCE_EXACT][k],
                sets[CoefficientVariant.IMPEDANCE_APPROX][k],
            )
    elif spec.command == "thermal-ratio":
        csv.add(*_thermal_ratio_row(spec, material, model, config))

    text = csv.render()
    if spec.out is not None:
        Path(spec.out).write_text(text)
    elif stream is not None:
        stream.write(text)
    else:
        sys.stdout.write(text)

    converged_column = (
        _COLUMNS[spec.command].index("converged")
        if "converged" in _COLUMNS[spec.command]
        else None
    )
    if converged_column is not None:
        if any(row[converged_column] == 0.0 for row in csv.rows):
            return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir",
        description="Casimir energy and force between real metals, "
        "surface-impedance boundary conditions.",
    )
    parser.add_argument("command", choices=_COMMANDS)
    parser.add_argument("--config", help="key=value or JSON file with defaults")
    parser.add_argument("--material", help="preset name (Al) or parameter file")
    parser.add_argument(
        "--model", help="ideal | plasma-exact | plasma-approx | normal-skin"
    )
    parser.add_argument("--formalism", help="impedance | lifshitz")
    parser.add_argument("--a", help="separation, meters or with nm/um/mm suffix")
    parser.add_argument("--grid", help="separation grid MIN:MAX:COUNT[:log|lin]")
    parser.add_argument("--T", help="temperature in K (0 = zero-temperature)")
    parser.add_argument("--R", help="sphere radius, meters or with suffix")
    parser.add_argument("--rel-tol", dest="rel_tol", help="quadrature tolerance")
    parser.add_argument("--out", help="output CSV path (default: stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    flags = {
        "command": args.command,
        "material": args.material,
        "model": args.model,
        "formalism": args.formalism,
        "a": args.a,
        "grid": args.grid,
        "T": args.T,
        "R": args.R,
        "rel_tol": args.rel_tol,
        "out": args.out,
    }
    try:
        spec = parse_config(args.config, flags)
        return run(spec)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

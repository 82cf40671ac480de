"""Shared fixtures: the aluminum preset and commonly used model choices."""

import pytest

from casimir_impedance import (
    ALUMINUM,
    Formalism,
    ImpedanceKind,
    ImpedanceModel,
    QuadratureConfig,
)

# One summary line per acceptance check, echoed after the run so the
# verdicts are visible regardless of output capturing.
_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_acceptance():
    def record(number: int, label: str, passed: bool, details: str) -> None:
        verdict = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"ACCEPTANCE {number} {label}: {verdict} ({details})")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance summary")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def aluminum():
    return ALUMINUM


@pytest.fixture
def ideal_model():
    return ImpedanceModel(ImpedanceKind.IDEAL_METAL)


@pytest.fixture
def plasma_impedance():
    return ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.IMPEDANCE)


@pytest.fixture
def plasma_lifshitz():
    return ImpedanceModel(ImpedanceKind.PLASMA_EXACT, Formalism.LIFSHITZ)


@pytest.fixture
def fast_config():
    """Looser tolerance for property-style tests where speed matters."""
    return QuadratureConfig(rel_tol=1e-7)

import cmath

import pytest

from vertexff.config import load_defaults

NUS = (0.17, 0.5, 0.83)
OMEGAS = (cmath.exp(1j * cmath.pi / 3), 0.7 * cmath.exp(-0.4j))

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def defaults():
    return load_defaults()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

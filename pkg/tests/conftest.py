import pytest

from qbch.code import build_spec
from qbch.field import build_field
from qbch.matring import MatRingElem

_criteria: list[str] = []


@pytest.fixture
def record():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def _record(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _criteria.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_spec():
    return build_spec(2, 1, 2, 3, 2)


@pytest.fixture(scope="session")
def wb_spec():
    return build_spec(2, 2, 2, 5, 3)


@pytest.fixture(scope="session")
def scalar_spec():
    f16 = build_field(2, 4)
    return build_spec(2, 4, 2, 15, 7, MatRingElem.scalar(f16, 2, f16.generator))

import pytest

from graphene_revivals import FieldParams, SpectrumModel

# acceptance-criterion results, printed as one line each at the end of the run
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def field10() -> FieldParams:
    return FieldParams(b_tesla=10.0)


@pytest.fixture(scope="session")
def model10(field10) -> SpectrumModel:
    return SpectrumModel(field10)

import pytest

from joq.core import triple_grid

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def grid():
    return triple_grid()


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def check(label: str, ok: bool, desc: str) -> None:
        _criteria.append((label, bool(ok), desc))
        assert ok, f"criterion {label}: {desc}"

    return check


def _key(label: str):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (int(digits), label)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, ok, desc in sorted(_criteria, key=lambda c: _key(c[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label:>4}  {desc}")

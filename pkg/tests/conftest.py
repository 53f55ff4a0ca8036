import pytest

_LINES: dict[str, str] = {}


@pytest.fixture
def acceptance():
    """``report(number, ok, detail)`` records one acceptance line."""

    def report(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {detail}"
        _LINES[str(number)] = line
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance")
    for key in sorted(_LINES, key=int):
        terminalreporter.write_line(_LINES[key])

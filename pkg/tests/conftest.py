import pytest

from spindaha import WeylType

TARGETS = [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 4), ("D", 5)]
SMALL = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4)]

_criteria: dict[int, tuple[str, bool]] = {}


def types(pairs=TARGETS):
    """Parametrize values for a ``typ`` argument, one per (family, n)."""
    return [pytest.param(WeylType(f, n), id=f"{f}{n}") for f, n in pairs]


def record_criterion(number: int, title: str, passed: bool) -> None:
    _criteria[number] = (title, passed)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {title}")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        title, ok = _criteria[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} {title}")

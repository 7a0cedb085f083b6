from __future__ import annotations

import pytest

from rfuchsian.exactnum import Field

TEST_FIELDS = (1, 2, 3, 5, 7)

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(params=TEST_FIELDS, ids=lambda d: f"d{d}")
def field(request) -> Field:
    return Field(request.param)


@pytest.fixture
def record_criterion():
    """record_criterion(number, title, ok, detail) stores one acceptance verdict."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE[number] = (title, ok, line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[n][2])

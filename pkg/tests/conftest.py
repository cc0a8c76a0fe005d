import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"
_acceptance_lines: list[str] = []


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def record_criterion():
    """Collect one summary line per acceptance criterion."""

    def record(label: str, passed: bool, detail: str = "") -> None:
        _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

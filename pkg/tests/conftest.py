from pathlib import Path

import pytest

from privperm.counting import RuleKind

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Discussion table, n = 1..10
PAPER_TABLE = {
    RuleKind.P1: [1, 2, 4, 8, 20, 48, 216, 576, 1392, 7200],
    RuleKind.P2: [1, 2, 4, 8, 16, 36, 136, 216, 672, 2592],
    RuleKind.P3: [1, 2, 4, 6, 12, 40, 144, 384, 1008, 6816],
    RuleKind.P4: [1, 2, 4, 6, 12, 28, 104, 152, 528, 2208],
    RuleKind.P5: [1, 2, 4, 6, 16, 28, 120, 264, 576, 2784],
    RuleKind.C1: [1, 2, 6, 8, 60, 144, 336, 384, 8640, 57600],
    RuleKind.C2: [1, 2, 6, 8, 40, 96, 168, 384, 1728, 15360],
}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _criteria[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{_criteria[label]}] {label}")

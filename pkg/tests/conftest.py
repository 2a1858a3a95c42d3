import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# Lines registered by the acceptance suite; printed after the test run so
# they are visible even when pytest captures per-test stdout.
ACCEPTANCE_LINES = []


def record_acceptance(number: int, ok: bool, description: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"ACCEPTANCE {number}: {verdict} - {description}")
    assert ok, f"acceptance criterion {number} failed: {description}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in criterion order."""
    rows = []
    for outcome in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if rep.when != "call" and outcome == "passed":
                continue
            name = nodeid.split("::")[-1][len("test_criterion_"):]
            number, _, label = name.partition("_")
            rows.append((int(number), label.replace("_", " "), "PASS" if outcome == "passed" else "FAIL"))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, verdict in sorted(set(rows)):
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {label}")

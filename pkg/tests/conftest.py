import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def oracle():
    """Rest-frame reference values from scripts/rest_frame_oracle.py."""
    with open(DATA / "rest_frame_oracle.json") as fh:
        return json.load(fh)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: (int(s.split(".")[0].split("-")[0]), s)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")

import os
from pathlib import Path

import pytest

from sylreg.ctable import ingest

REPO = Path(__file__).resolve().parent.parent


def fixtures_dir() -> Path | None:
    env = os.environ.get("SYLREG_FIXTURES")
    d = Path(env) if env else REPO / "fixtures"
    return d if d.is_dir() else None


def load_fixture(name: str):
    d = fixtures_dir()
    if d is None or not (d / f"{name}.json").is_file():
        pytest.skip(f"fixture {name} not available")
    return ingest(d / f"{name}.json")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])

import json
import subprocess
import sys
from pathlib import Path

import pytest

from airisk import AssessmentProfile, parse_assessment

PKG_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = PKG_ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def load_fixture(name: str) -> AssessmentProfile:
    return parse_assessment((FIXTURES / f"{name}.json").read_bytes())


@pytest.fixture(scope="session")
def roomba() -> AssessmentProfile:
    return load_fixture("roomba")


@pytest.fixture(scope="session")
def hal9000() -> AssessmentProfile:
    return load_fixture("hal9000")


@pytest.fixture(scope="session")
def tay() -> AssessmentProfile:
    return load_fixture("tay")


def run_cli(*args: str, cwd: Path | None = None) -> subprocess.CompletedProcess:
    """Invoke the CLI as a subprocess, capturing stdout/stderr as bytes."""
    return subprocess.run(
        [sys.executable, "-m", "airisk", *args],
        capture_output=True,
        cwd=cwd or PKG_ROOT,
        timeout=60,
    )


def write_doc(path: Path, obj) -> Path:
    path.write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def roomba_doc() -> dict:
    """A fresh mutable copy of the roomba document object."""
    return json.loads((FIXTURES / "roomba.json").read_text(encoding="utf-8"))

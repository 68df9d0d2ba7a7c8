"""Runs the pytest smoke tests when the npscan extension is importable."""

import subprocess
import sys
from pathlib import Path

try:
    import npscan._core  # noqa: F401
    import pytest  # noqa: F401
except ImportError:
    print("npscan Python module not installed; run `pip install --no-build-isolation -e .` to enable")
    sys.exit(77)

tests = Path(__file__).resolve().parent.parent / "python" / "tests"
sys.exit(subprocess.call([sys.executable, "-m", "pytest", "-q", str(tests)]))

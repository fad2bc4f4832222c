#!/usr/bin/env python3
"""Run the acceptance suite with its per-criterion pass/fail lines visible.

Equivalent to `pytest -s tests/test_acceptance.py`; exits nonzero if any
criterion fails.
"""
import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    sys.exit(pytest.main(["-v", "-s", str(target), *sys.argv[1:]]))

"""Regenerate tests/golden from tests/golden_cases.py (run from the repo root)."""

import sys
from pathlib import Path

sys.path.insert(0, "tests")
from golden_cases import cases  # noqa: E402

out = Path("tests/golden")
out.mkdir(exist_ok=True)
for name, produce, seed in cases():
    (out / name).write_text(produce(seed))
    print(name)

#!/usr/bin/env python3
"""Refresh tests/goldens/ from the bundled sample data at the frozen clock.

Run from the repository root after any intentional change to scoring,
debate templates, serialization, or the sample data:

    python3 scripts/regen_goldens.py

Review the resulting diff before committing; every changed byte is a
behavior change somebody downstream will see.
"""

from __future__ import annotations

import os
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "tests"))

from goldens_flow import FIXED_TIME, GOLDEN_FILES, build_golden_session  # noqa: E402

os.environ["CANOE_FIXED_TIME"] = FIXED_TIME

from canoe.canonical import sha256_hex, write_json  # noqa: E402


def main() -> None:
    golden_root = REPO / "tests" / "goldens"
    session_out = golden_root / "session"
    with tempfile.TemporaryDirectory() as tmp:
        built = Path(tmp) / "session"
        build_golden_session(built)
        if session_out.exists():
            shutil.rmtree(session_out)
        session_out.mkdir(parents=True)
        hashes = {}
        for name in GOLDEN_FILES:
            data = (built / name).read_bytes()
            (session_out / name).write_bytes(data)
            hashes[name] = sha256_hex(data)
    write_json(
        golden_root / "manifest.json",
        {"files": hashes, "fixed_time": FIXED_TIME, "format_version": 1},
    )
    print(f"wrote {len(hashes)} session files + manifest under {golden_root}")


if __name__ == "__main__":
    main()

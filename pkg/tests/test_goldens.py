"""Byte-exact regression goldens for the full lifecycle.

A fresh run of the golden flow must reproduce every checked-in session
file bit for bit. Failures here mean observable behavior changed: either
fix the regression or rerun scripts/regen_goldens.py and review the diff.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from canoe.canonical import read_json, sha256_hex
from goldens_flow import FIXED_TIME, GOLDEN_FILES, build_golden_session

GOLDEN_ROOT = Path(__file__).parent / "goldens"


@pytest.fixture(scope="module")
def fresh_session(tmp_path_factory) -> Path:
    assert os.environ["CANOE_FIXED_TIME"] == FIXED_TIME
    out = tmp_path_factory.mktemp("golden-regen") / "session"
    build_golden_session(out)
    return out


@pytest.mark.parametrize("name", GOLDEN_FILES)
def test_file_reproduced_byte_exactly(fresh_session, name):
    fresh = (fresh_session / name).read_bytes()
    golden = (GOLDEN_ROOT / "session" / name).read_bytes()
    assert fresh == golden, f"{name} drifted from tests/goldens/session/{name}"


def test_manifest_matches_checked_in_bytes():
    manifest = read_json(GOLDEN_ROOT / "manifest.json")
    assert manifest["format_version"] == 1
    assert manifest["fixed_time"] == FIXED_TIME
    assert set(manifest["files"]) == set(GOLDEN_FILES)
    for name, digest in manifest["files"].items():
        data = (GOLDEN_ROOT / "session" / name).read_bytes()
        assert sha256_hex(data) == digest, f"{name} does not match its manifest hash"


def test_no_stray_golden_files():
    on_disk = {p.name for p in (GOLDEN_ROOT / "session").iterdir()}
    assert on_disk == set(GOLDEN_FILES)

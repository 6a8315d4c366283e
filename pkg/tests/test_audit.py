"""Audit chain: hashing, verification, tamper detection, file round trip."""

from dataclasses import replace

import pytest

from canoe.canonical import sha256_hex
from canoe.contestation import GENESIS_HASH, load_audit, verify_chain
from canoe.contestation.audit import append_entry, compute_entry_hash, entry_from_doc, make_entry
from canoe.errors import BrokenChain

from oracles import entry_hash_oracle

INITIAL = sha256_hex(b"state-0")


def build_chain(n=3):
    entries = []
    prev_entry_hash = GENESIS_HASH
    pre = INITIAL
    for seq in range(1, n + 1):
        post = sha256_hex(f"state-{seq}".encode())
        entry = make_entry(
            seq=seq,
            timestamp=f"2026-08-18T12:00:0{seq}Z",
            actor="human_reviewer",
            kind="accept",
            target=f"arg-{seq}",
            payload={"note": seq},
            pre_hash=pre,
            post_hash=post,
            prev_entry_hash=prev_entry_hash,
        )
        entries.append(entry)
        prev_entry_hash = entry.entry_hash
        pre = post
    return entries


def test_clean_chain_verifies():
    verify_chain(build_chain(), initial_graph_hash=INITIAL)


def test_empty_chain_verifies():
    verify_chain([], initial_graph_hash=INITIAL)


def test_entry_hash_matches_oracle():
    prev = GENESIS_HASH
    for entry in build_chain(4):
        assert entry.entry_hash == entry_hash_oracle(prev, entry.to_doc())
        prev = entry.entry_hash


@pytest.mark.parametrize(
    "field, value",
    [
        ("timestamp", "2026-08-18T12:59:59Z"),
        ("actor", "human_care_planner"),
        ("kind", "reject"),
        ("target", "arg-x"),
        ("target", None),
        ("payload", {"note": 99}),
        ("pre_hash", "f" * 64),
        ("post_hash", "f" * 64),
        ("entry_hash", "f" * 64),
    ],
)
def test_any_field_tamper_is_detected(field, value):
    entries = build_chain(3)
    entries[1] = replace(entries[1], **{field: value})
    with pytest.raises(BrokenChain) as exc_info:
        verify_chain(entries, initial_graph_hash=INITIAL)
    assert exc_info.value.seq == 2


def test_seq_gap_detected():
    entries = build_chain(3)
    with pytest.raises(BrokenChain) as exc_info:
        verify_chain([entries[0], entries[2]], initial_graph_hash=INITIAL)
    assert exc_info.value.seq == 2


def test_reordered_entries_detected():
    entries = build_chain(2)
    swapped = [replace(entries[1], seq=1), replace(entries[0], seq=2)]
    with pytest.raises(BrokenChain):
        verify_chain(swapped, initial_graph_hash=INITIAL)


def test_dropped_first_entry_detected():
    entries = build_chain(3)
    with pytest.raises(BrokenChain) as exc_info:
        verify_chain(entries[1:], initial_graph_hash=INITIAL)
    assert exc_info.value.seq == 1


def test_unknown_kind_rejected():
    entry = build_chain(1)[0]
    bogus = replace(entry, kind="annotate",
                    entry_hash=compute_entry_hash(GENESIS_HASH,
                                                  replace(entry, kind="annotate").core_doc()))
    with pytest.raises(BrokenChain, match="unknown audit kind"):
        verify_chain([bogus], initial_graph_hash=INITIAL)


def test_wrong_initial_hash_detected():
    with pytest.raises(BrokenChain) as exc_info:
        verify_chain(build_chain(2), initial_graph_hash=sha256_hex(b"other"))
    assert exc_info.value.seq == 1


def test_initial_hash_optional():
    # without a baseline the first pre_hash is taken on trust
    verify_chain(build_chain(2))


def test_target_omitted_from_core_doc_when_absent():
    entry = make_entry(
        seq=1, timestamp="2026-08-18T12:00:00Z", actor="human_reviewer",
        kind="revalidate", target=None, payload={}, pre_hash=INITIAL,
        post_hash=INITIAL, prev_entry_hash=GENESIS_HASH,
    )
    assert "target" not in entry.core_doc()
    assert "target" not in entry.to_doc()
    verify_chain([entry], initial_graph_hash=INITIAL)


class TestAuditFile:
    def path(self, tmp_path):
        return tmp_path / "audit.log"

    def test_append_and_load_round_trip(self, tmp_path):
        path = self.path(tmp_path)
        entries = build_chain(3)
        for entry in entries:
            append_entry(path, entry)
        loaded = load_audit(path)
        assert loaded == entries
        verify_chain(loaded, initial_graph_hash=INITIAL)

    def test_missing_file_is_empty_chain(self, tmp_path):
        assert load_audit(self.path(tmp_path)) == []

    def test_one_canonical_line_per_entry(self, tmp_path):
        path = self.path(tmp_path)
        for entry in build_chain(2):
            append_entry(path, entry)
        lines = path.read_bytes().decode("utf-8").splitlines()
        assert len(lines) == 2
        assert all(line.startswith('{"actor":') for line in lines)

    def test_blank_lines_skipped(self, tmp_path):
        path = self.path(tmp_path)
        for entry in build_chain(2):
            append_entry(path, entry)
        with open(path, "ab") as fh:
            fh.write(b"\n  \n")
        assert len(load_audit(path)) == 2

    def test_byte_flip_breaks_verification(self, tmp_path):
        path = self.path(tmp_path)
        for entry in build_chain(3):
            append_entry(path, entry)
        data = bytearray(path.read_bytes())
        data[len(data) // 2] ^= 0x55
        path.write_bytes(bytes(data))
        with pytest.raises(BrokenChain):
            verify_chain(load_audit(path), initial_graph_hash=INITIAL)

    def test_invalid_utf8_line_is_broken_chain(self, tmp_path):
        path = self.path(tmp_path)
        append_entry(path, build_chain(1)[0])
        with open(path, "ab") as fh:
            fh.write(b"\xff\xfe not json\n")
        with pytest.raises(BrokenChain) as exc_info:
            load_audit(path)
        assert exc_info.value.seq == 2

    def test_non_json_line_is_broken_chain(self, tmp_path):
        path = self.path(tmp_path)
        path.write_text("not json at all\n", encoding="utf-8")
        with pytest.raises(BrokenChain) as exc_info:
            load_audit(path)
        assert exc_info.value.seq == 1

    def test_missing_field_is_broken_chain(self, tmp_path):
        path = self.path(tmp_path)
        path.write_text('{"seq": 1}\n', encoding="utf-8")
        with pytest.raises(BrokenChain):
            load_audit(path)


def test_entry_round_trips_through_doc():
    for entry in build_chain(3):
        assert entry_from_doc(entry.to_doc(), seq_hint=entry.seq) == entry


def test_entry_hash_depends_on_previous_entry():
    entries = build_chain(2)
    a = compute_entry_hash(GENESIS_HASH, entries[1].core_doc())
    b = compute_entry_hash(entries[0].entry_hash, entries[1].core_doc())
    assert a != b


def test_audit_entry_is_frozen():
    entry = build_chain(1)[0]
    with pytest.raises(AttributeError):
        entry.payload2 = {}
    with pytest.raises(Exception):
        entry.seq = 2

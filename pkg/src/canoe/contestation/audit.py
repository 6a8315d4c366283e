"""Append-only audit log with a per-entry hash chain.

Every entry hashes the previous entry's hash together with its own
canonical serialization, so flipping any byte anywhere in the log
(timestamps included) breaks verification at that entry. Graph
pre/post hashes exclude timestamps, which keeps replay equality
content-based.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

from ..canonical import canonical_line, sha256_hex
from ..errors import BrokenChain

GENESIS_HASH = "0" * 64

# the six human edit kinds plus the lifecycle events the chain also covers
AUDIT_KINDS = (
    "accept",
    "reject",
    "modify",
    "add",
    "pin_tau",
    "add_relation",
    "revalidate",
    "approve",
    "plan",
)


@dataclass(frozen=True)
class AuditEntry:
    seq: int
    timestamp: str
    actor: str
    kind: str
    target: str | None
    payload: dict
    pre_hash: str
    post_hash: str
    entry_hash: str

    def core_doc(self) -> dict:
        """Everything the entry hash covers (all fields except the hash itself)."""
        doc = {
            "seq": self.seq,
            "timestamp": self.timestamp,
            "actor": self.actor,
            "kind": self.kind,
            "payload": self.payload,
            "pre_hash": self.pre_hash,
            "post_hash": self.post_hash,
        }
        if self.target is not None:
            doc["target"] = self.target
        return doc

    def to_doc(self) -> dict:
        doc = self.core_doc()
        doc["entry_hash"] = self.entry_hash
        return doc


def compute_entry_hash(prev_entry_hash: str, core_doc: dict) -> str:
    return sha256_hex(f"{prev_entry_hash}\n{canonical_line(core_doc)}".encode("utf-8"))


def make_entry(
    seq: int,
    timestamp: str,
    actor: str,
    kind: str,
    target: str | None,
    payload: dict,
    pre_hash: str,
    post_hash: str,
    prev_entry_hash: str,
) -> AuditEntry:
    entry = AuditEntry(
        seq=seq,
        timestamp=timestamp,
        actor=actor,
        kind=kind,
        target=target,
        payload=payload,
        pre_hash=pre_hash,
        post_hash=post_hash,
        entry_hash="",
    )
    return replace(entry, entry_hash=compute_entry_hash(prev_entry_hash, entry.core_doc()))


def entry_from_doc(doc: dict, seq_hint: int) -> AuditEntry:
    try:
        return AuditEntry(
            seq=int(doc["seq"]),
            timestamp=str(doc["timestamp"]),
            actor=str(doc["actor"]),
            kind=str(doc["kind"]),
            target=str(doc["target"]) if "target" in doc else None,
            payload=dict(doc["payload"]),
            pre_hash=str(doc["pre_hash"]),
            post_hash=str(doc["post_hash"]),
            entry_hash=str(doc["entry_hash"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BrokenChain(f"unparseable audit entry: {exc}", seq=seq_hint) from exc


def verify_chain(entries: list[AuditEntry], initial_graph_hash: str | None = None) -> None:
    """Raise BrokenChain at the first entry where the chain fails."""
    prev_entry_hash = GENESIS_HASH
    prev_post = initial_graph_hash
    for i, entry in enumerate(entries):
        seq = i + 1
        if entry.seq != seq:
            raise BrokenChain(f"expected seq {seq}, found {entry.seq}", seq=seq)
        if entry.kind not in AUDIT_KINDS:
            raise BrokenChain(f"unknown audit kind {entry.kind!r}", seq=seq)
        if compute_entry_hash(prev_entry_hash, entry.core_doc()) != entry.entry_hash:
            raise BrokenChain("entry hash mismatch", seq=seq)
        if prev_post is not None and entry.pre_hash != prev_post:
            raise BrokenChain("hash chain not contiguous", seq=seq)
        prev_entry_hash = entry.entry_hash
        prev_post = entry.post_hash


def load_audit(path: str | Path) -> list[AuditEntry]:
    path = Path(path)
    entries: list[AuditEntry] = []
    if not path.exists():
        return entries
    raw_lines = path.read_bytes().splitlines()
    for lineno, raw in enumerate(raw_lines, start=1):
        if not raw.strip():
            continue
        try:
            doc = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, ValueError) as exc:
            raise BrokenChain(f"unparseable audit line: {exc}", seq=lineno) from exc
        entries.append(entry_from_doc(doc, seq_hint=lineno))
    return entries


def append_entry(path: str | Path, entry: AuditEntry) -> None:
    """Append one canonical line and fsync before returning."""
    line = canonical_line(entry.to_doc()) + "\n"
    with open(path, "ab") as fh:
        fh.write(line.encode("utf-8"))
        fh.flush()
        os.fsync(fh.fileno())

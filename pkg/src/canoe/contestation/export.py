"""Governance exports: audit log and participation summary as CSV, the
argument graph as DOT for visual review."""

from __future__ import annotations

import csv
import io

from ..argcore import ArgumentGraph, Polarity, participation_summary
from ..canonical import canonical_line

AUDIT_COLUMNS = [
    "seq",
    "timestamp",
    "actor",
    "kind",
    "target",
    "payload",
    "pre_hash",
    "post_hash",
    "entry_hash",
]


def audit_csv(entries) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(AUDIT_COLUMNS)
    for entry in entries:
        writer.writerow(
            [
                entry.seq,
                entry.timestamp,
                entry.actor,
                entry.kind,
                entry.target or "",
                canonical_line(entry.payload),
                entry.pre_hash,
                entry.post_hash,
                entry.entry_hash,
            ]
        )
    return out.getvalue()


def participation_csv(graph: ArgumentGraph) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["role", "support_count", "challenge_count"])
    for role, counts in participation_summary(graph).items():
        writer.writerow([role.value, counts["support_count"], counts["challenge_count"]])
    return out.getvalue()


def export_dot(graph: ArgumentGraph, degrees: dict[str, float]) -> str:
    """Support edges solid, attack edges dashed, labels carry τ and f."""

    def quoted(s: str) -> str:
        # escape only double quotes; labels embed \n as a DOT escape
        return '"' + s.replace('"', '\\"') + '"'

    lines = ["digraph argument_graph {"]
    for aid in graph.argument_ids():
        arg = graph.arguments[aid]
        f = degrees.get(aid, 0.0)
        label = f"{aid}\\nτ={arg.tau:.3f}, f={f:.3f}"
        lines.append(f"  {quoted(aid)} [label={quoted(label)}];")
    for rel in graph.sorted_relations():
        style = "solid" if rel.polarity == Polarity.SUPPORT else "dashed"
        lines.append(f"  {quoted(rel.source)} -> {quoted(rel.target)} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

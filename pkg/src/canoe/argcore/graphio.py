"""Graph file format: canonical JSON, format_version 1.

Arguments are written sorted by arg_id, options by option_id, relations
by (source, target, polarity). graph_hash() hashes exactly the bytes
save_graph() would write, so a loaded-and-resaved graph keeps its hash.
"""

from __future__ import annotations

from pathlib import Path

from ..canonical import canonical_bytes, read_json, sha256_hex, write_json
from ..errors import ValidationError
from .model import Argument, ArgumentGraph, CareOption, Relation

FORMAT_VERSION = 1


def graph_to_doc(graph: ArgumentGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "options": [graph.options[oid].to_doc() for oid in graph.option_ids()],
        "arguments": [graph.arguments[aid].to_doc() for aid in graph.argument_ids()],
        "relations": [r.to_doc() for r in graph.sorted_relations()],
    }


def doc_to_graph(doc: dict) -> ArgumentGraph:
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported graph format_version: {version!r}")
    try:
        options = {o["option_id"]: CareOption.from_doc(o) for o in doc.get("options", [])}
        arguments = {a["arg_id"]: Argument.from_doc(a) for a in doc.get("arguments", [])}
        relations = tuple(Relation.from_doc(r) for r in doc.get("relations", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed graph document: {exc}") from exc
    graph = ArgumentGraph(arguments=arguments, relations=relations, options=options)
    graph.check_integrity()
    return graph


def graph_hash(graph: ArgumentGraph) -> str:
    return sha256_hex(canonical_bytes(graph_to_doc(graph)))


def save_graph(path: str | Path, graph: ArgumentGraph, fsync: bool = False) -> str:
    """Write the graph file and return its content hash."""
    doc = graph_to_doc(graph)
    write_json(path, doc, fsync=fsync)
    return sha256_hex(canonical_bytes(doc))


def load_graph(path: str | Path) -> ArgumentGraph:
    return doc_to_graph(read_json(path))

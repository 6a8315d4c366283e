"""Token-overlap evidence retrieval over a document corpus.

A corpus is a directory of text files plus manifest.json assigning each
doc_id a file, a source_type, and a reliability score. Retrieval stamps
the similarity into each returned doc; ordering is total and
deterministic (similarity desc, doc_id asc).
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

from ..argcore import EvidenceDoc, SourceType
from ..errors import EmptyCorpus, ValidationError
from ..textutil import overlap


def load_corpus(corpus_dir: str | Path) -> list[EvidenceDoc]:
    corpus_dir = Path(corpus_dir)
    manifest_path = corpus_dir / "manifest.json"
    if not manifest_path.is_file():
        raise ValidationError(f"no manifest.json in {corpus_dir}")
    manifest = json.loads(manifest_path.read_text("utf-8"))
    if manifest.get("format_version") != 1:
        raise ValidationError("unsupported corpus manifest format_version")

    docs: list[EvidenceDoc] = []
    seen: set[str] = set()
    for entry in manifest["documents"]:
        doc_id = str(entry["doc_id"])
        if doc_id in seen:
            raise ValidationError(f"duplicate doc_id in corpus: {doc_id}")
        seen.add(doc_id)
        text = (corpus_dir / entry["file"]).read_text("utf-8")
        docs.append(
            EvidenceDoc(
                doc_id=doc_id,
                text=text,
                source_type=SourceType(entry["source_type"]),
                reliability=float(entry["reliability"]),
            )
        )
    docs.sort(key=lambda d: d.doc_id)
    return docs


def retrieve_evidence(query: str, corpus: list[EvidenceDoc], top_k: int = 8) -> list[EvidenceDoc]:
    if top_k < 1:
        raise ValidationError("top_k must be >= 1")
    if not corpus:
        raise EmptyCorpus("retrieval over an empty corpus")
    scored = [replace(doc, similarity=overlap(query, doc.text)) for doc in corpus]
    scored.sort(key=lambda d: (-d.similarity, d.doc_id))
    return scored[:top_k]

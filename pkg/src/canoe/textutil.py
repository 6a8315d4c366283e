"""Tokenization shared by retrieval and intrinsic-strength scoring.

One tokenizer everywhere: lowercase, keep runs of [a-z0-9], drop the
rest. Overlap scores divide by the query side, so identical texts score
exactly 1.0.
"""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokens(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def unique_tokens(text: str) -> set[str]:
    return set(tokens(text))


def overlap(query: str, target: str) -> float:
    """|query tokens ∩ target tokens| / |query tokens|; 0 for an empty query."""
    q = unique_tokens(query)
    if not q:
        return 0.0
    return len(q & unique_tokens(target)) / len(q)

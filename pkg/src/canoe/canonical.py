"""Canonical JSON: the byte-determinism anchor for every file this system writes.

Rules: object keys sorted, floats printed with 9 significant digits,
no NaN/inf, -0 normalized to 0. Files are indented (diffable) and end
with a newline; audit-log lines use the compact form. Content hashes
are sha256 over the exact file bytes, so hash == hash-of-file always.

9 significant decimal digits round-trip losslessly through a float64,
so load -> dump is byte-stable. Values that must survive a round trip
bit-exactly (intrinsic strengths, weights) are rounded with round9()
at the point they are produced.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any


def round9(v: float) -> float:
    """Round to 9 significant decimal digits (the canonical float grid)."""
    return float(format(float(v), ".9g"))


def _fmt_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        raise ValueError(f"non-finite float not serializable: {v!r}")
    if v == 0.0:
        return "0"
    return format(v, ".9g")


def _dump(obj: Any, out: list[str], indent: int | None, level: int) -> None:
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end_pad = "" if indent is None else "\n" + " " * (indent * level)
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        keys = sorted(obj)
        for i, k in enumerate(keys):
            if not isinstance(k, str):
                raise TypeError(f"non-string key: {k!r}")
            out.append(pad)
            out.append(json.dumps(k, ensure_ascii=False))
            out.append(": " if indent is not None else ":")
            _dump(obj[k], out, indent, level + 1)
            if i < len(keys) - 1:
                out.append(",")
        out.append(end_pad)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[")
        for i, item in enumerate(obj):
            out.append(pad)
            _dump(item, out, indent, level + 1)
            if i < len(obj) - 1:
                out.append(",")
        out.append(end_pad)
        out.append("]")
    else:
        raise TypeError(f"not canonically serializable: {type(obj).__name__}")


def canonical_dumps(obj: Any, indent: int | None = 2) -> str:
    """Serialize to the canonical form. indent=None gives one compact line."""
    out: list[str] = []
    _dump(obj, out, indent, 0)
    return "".join(out)


def canonical_bytes(obj: Any) -> bytes:
    """Canonical file body: indented form plus trailing newline."""
    return (canonical_dumps(obj, indent=2) + "\n").encode("utf-8")


def canonical_line(obj: Any) -> str:
    """Compact single-line form (audit log entries)."""
    return canonical_dumps(obj, indent=None)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def content_hash(obj: Any) -> str:
    """Hash of the canonical file bytes of obj."""
    return sha256_hex(canonical_bytes(obj))


def read_json(path: str | Path) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str | Path, obj: Any, fsync: bool = False) -> None:
    """Atomic canonical write: temp file in the same directory, then rename."""
    path = Path(path)
    data = canonical_bytes(obj)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
            if fsync:
                fh.flush()
                os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

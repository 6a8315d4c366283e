"""UTC clock with a freeze point for reproducible runs.

Timestamps only ever land in designated audit/metadata fields; nothing
numeric depends on them. Setting CANOE_FIXED_TIME (ISO 8601, e.g.
2026-08-18T12:00:00Z) makes every stamped field, and therefore whole
output directories, byte-identical across runs.
"""

from __future__ import annotations

import os
from datetime import datetime, timedelta, timezone

ENV_FIXED_TIME = "CANOE_FIXED_TIME"


def now_utc() -> datetime:
    fixed = os.environ.get(ENV_FIXED_TIME)
    if fixed:
        txt = fixed.strip().replace("Z", "+00:00")
        dt = datetime.fromisoformat(txt)
        if dt.tzinfo is None:
            dt = dt.replace(tzinfo=timezone.utc)
        return dt.astimezone(timezone.utc)
    return datetime.now(timezone.utc)


def timestamp() -> str:
    """Second-resolution ISO instant, Z-suffixed."""
    return now_utc().isoformat(timespec="seconds").replace("+00:00", "Z")


def next_day() -> str:
    """Default earliest scheduling date (ISO yyyy-mm-dd): the day after "now"."""
    return (now_utc() + timedelta(days=1)).date().isoformat()

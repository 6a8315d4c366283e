"""Stubbed booking agent: a tool-call protocol over an in-memory calendar.

The scheduler never touches the calendar directly; it sends
book_appointment requests and records the responses, so a real remote
scheduler can replace the in-memory agent without changing the caller.
Conflicts are data, not failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..argcore import Role
from ..canonical import read_json
from ..clock import next_day
from ..errors import ValidationError
from .plan import RECOMMENDED_TIERS, CarePlan, plan_config

BOOK_METHOD = "book_appointment"


def _parse_minute(hhmm: str) -> int:
    hours, minutes = hhmm.split(":")
    return int(hours) * 60 + int(minutes)


def _format_minute(minute: int) -> str:
    return f"{minute // 60:02d}:{minute % 60:02d}"


@dataclass
class _Window:
    role: Role
    date: str
    start: int
    end: int


@dataclass
class CalendarState:
    """Free provider time as (role, date, window) rows; booking consumes
    from the front of a window."""

    windows: list[_Window] = field(default_factory=list)

    @classmethod
    def from_doc(cls, doc: dict) -> "CalendarState":
        if doc.get("format_version") != 1:
            raise ValidationError("unsupported calendar format_version")
        windows = []
        for row in doc.get("windows", []):
            window = _Window(
                role=Role(row["role"]),
                date=str(row["date"]),
                start=_parse_minute(row["start"]),
                end=_parse_minute(row["end"]),
            )
            if window.end <= window.start:
                raise ValidationError(f"empty calendar window on {window.date}")
            windows.append(window)
        windows.sort(key=lambda w: (w.role.value, w.date, w.start))
        return cls(windows=windows)

    @classmethod
    def load(cls, path: str | Path) -> "CalendarState":
        return cls.from_doc(read_json(path))

    def take(self, role: Role, earliest_date: str, duration: int) -> tuple[str, int] | None:
        """Earliest-fit booking; returns (date, start minute) or None."""
        candidates = [
            w for w in self.windows if w.role == role and w.date >= earliest_date
        ]
        candidates.sort(key=lambda w: (w.date, w.start))
        for window in candidates:
            if window.end - window.start >= duration:
                start = window.start
                window.start += duration
                return (window.date, start)
        return None


@dataclass
class InMemoryBookingAgent:
    """The stub tool-call endpoint: one method, book_appointment."""

    calendar: CalendarState
    _counter: int = 0

    def call(self, request: dict) -> dict:
        if request.get("method") != BOOK_METHOD:
            raise ValidationError(f"unknown tool method: {request.get('method')!r}")
        args = request["arguments"]
        role = Role(args["role"])
        duration = int(args["duration_minutes"])
        if duration <= 0:
            raise ValidationError("duration_minutes must be > 0")
        self._counter += 1
        task_id = f"task-{self._counter}"
        slot = self.calendar.take(role, str(args["earliest_date"]), duration)
        if slot is None:
            return {"status": "conflict", "task_id": task_id, "date": None, "start": None}
        date, start = slot
        return {
            "status": "booked",
            "task_id": task_id,
            "date": date,
            "start": _format_minute(start),
        }


@dataclass(frozen=True)
class ScheduledTask:
    task_id: str
    option_id: str
    provider_role: Role
    earliest_date: str
    duration_minutes: int
    status: str
    booked_date: str | None = None
    booked_start: str | None = None

    def to_doc(self) -> dict:
        return {
            "task_id": self.task_id,
            "option_id": self.option_id,
            "provider_role": self.provider_role.value,
            "earliest_date": self.earliest_date,
            "duration_minutes": self.duration_minutes,
            "status": self.status,
            "booked_date": self.booked_date,
            "booked_start": self.booked_start,
        }


def schedule_tasks(plan: CarePlan, calendar: CalendarState) -> list[ScheduledTask]:
    """One task per recommended entry, booked via the agent in plan order."""
    agent = InMemoryBookingAgent(calendar)
    duration = int(plan_config()["task_duration_minutes"])
    earliest = next_day()
    tasks: list[ScheduledTask] = []
    for entry in plan.entries:
        if entry.tier not in RECOMMENDED_TIERS:
            continue
        response = agent.call(
            {
                "method": BOOK_METHOD,
                "arguments": {
                    "role": entry.assigned_role.value,
                    "earliest_date": earliest,
                    "duration_minutes": duration,
                },
            }
        )
        tasks.append(
            ScheduledTask(
                task_id=response["task_id"],
                option_id=entry.option.option_id,
                provider_role=entry.assigned_role,
                earliest_date=earliest,
                duration_minutes=duration,
                status=response["status"],
                booked_date=response["date"],
                booked_start=response["start"],
            )
        )
    return tasks

"""Phase-4 plan synthesis and the stubbed scheduling agent."""

from .plan import CarePlan, PlanEntry, plan_config, synthesize_plan, tier_option, tier_rank
from .scheduling import CalendarState, InMemoryBookingAgent, ScheduledTask, schedule_tasks

__all__ = [
    "CalendarState",
    "CarePlan",
    "InMemoryBookingAgent",
    "PlanEntry",
    "ScheduledTask",
    "plan_config",
    "schedule_tasks",
    "synthesize_plan",
    "tier_option",
    "tier_rank",
]

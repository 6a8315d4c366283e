"""HTTP service exposing cases, sessions, and plans under /v1."""

from .app import create_app, resolve_settings

__all__ = ["create_app", "resolve_settings"]

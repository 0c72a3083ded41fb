"""Spin-orbit beam splitter with a reservoir-coupled arm."""

from ._spinbeam import *  # noqa: F401,F403
from ._spinbeam import ConfigError, DomainError, RunConfig, InputKind

__all__ = [name for name in dir() if not name.startswith("_")]

from .app import app, create_app
from .schemas import (
    CheckResult,
    CommandName,
    Health,
    SuiteReport,
    SuiteRequest,
    TableResult,
)

__all__ = [
    "app",
    "create_app",
    "CheckResult",
    "CommandName",
    "Health",
    "SuiteReport",
    "SuiteRequest",
    "TableResult",
]

"""Python surface of the propuse toolkit.

Everything heavy lives in the compiled extension; this package just re-exports
it under stable names.
"""

from propuse._core import (
    BaselineFailed,
    BudgetExceeded,
    Library,
    ParseError,
    UnknownItem,
    ValidationFailed,
    __version__,
    check,
    closure,
    elicit,
    load_library,
    minimize,
    parse_library,
    report,
    serialize_library,
)

__all__ = [
    "BaselineFailed",
    "BudgetExceeded",
    "Library",
    "ParseError",
    "UnknownItem",
    "ValidationFailed",
    "__version__",
    "check",
    "closure",
    "elicit",
    "load_library",
    "minimize",
    "parse_library",
    "report",
    "serialize_library",
]

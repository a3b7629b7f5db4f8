"""Exception hierarchy shared by every chiralscope module."""

import os


class ChiralscopeError(Exception):
    """Base class for all library errors."""


class DegreeMismatchError(ChiralscopeError, ValueError):
    pass


class ArgumentError(ChiralscopeError, ValueError):
    pass


class CapacityError(ChiralscopeError):
    """Raised when an operation would have to list more elements than allowed."""


class IntegrityError(ChiralscopeError):
    """An internal consistency check failed (wrong metadata or a bug)."""


class ParseError(ChiralscopeError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


DEFAULT_LIMIT = 10**6


def enumeration_limit():
    """Largest group order for which element-by-element listing is allowed.

    Overridden by the ``CHIRALSCOPE_LIMIT`` environment variable.
    """
    raw = os.environ.get("CHIRALSCOPE_LIMIT")
    if raw is None or raw.strip() == "":
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise ArgumentError(f"CHIRALSCOPE_LIMIT must be an integer, got {raw!r}") from exc


def check_capacity(order, what="enumeration"):
    limit = enumeration_limit()
    if order > limit:
        raise CapacityError(
            f"{what} needs all {order} group elements; limit is {limit} "
            "(set CHIRALSCOPE_LIMIT to raise it)"
        )

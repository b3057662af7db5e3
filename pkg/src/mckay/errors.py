"""Exception hierarchy shared across the library and mapped to CLI exit codes."""


class McKayError(Exception):
    """Base class for all library errors."""


class GroupFileError(McKayError):
    """Malformed input file. Carries a 1-based line/column position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", col {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class RequirementError(McKayError):
    """A computation was requested on input that does not satisfy its preconditions."""


class ClosureCapError(McKayError):
    """Group closure exceeded the element cap (group too large or infinite)."""


class InternalInvariantError(McKayError):
    """A theory-guaranteed property failed to hold; always an implementation bug."""

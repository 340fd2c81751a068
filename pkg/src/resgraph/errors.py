"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class ResGraphError(Exception):
    exit_code = 1


class ParseError(ResGraphError, ValueError):
    """Unreadable input: I/O failure, bad JSON, malformed command-line values."""

    exit_code = 1


class GraphFormatError(ParseError):
    """Malformed graph document: wrong types, dangling or duplicate edges."""


class DomainError(ResGraphError, ValueError):
    """An operation was called outside its mathematical domain."""

    exit_code = 2


class DisconnectedGraphError(DomainError):
    exit_code = 2


class InconsistentInputError(ResGraphError, ValueError):
    """User-supplied analytic data (p_g, q, ...) contradicts the graph."""

    exit_code = 3


class OracleBoundError(ResGraphError, RuntimeError):
    """A bounded search found nothing; the bound must be raised."""

    exit_code = 4


class OracleMismatch(ResGraphError, AssertionError):
    """A brute-force check disagreed with the fast path (an implementation bug)."""

    exit_code = 5

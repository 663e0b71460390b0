"""Exception hierarchy.

Three failure classes are distinguished because the command-line driver
maps them to distinct exit codes: malformed input documents or divisor
expressions, violated operation preconditions, and signals that the
declared prime catalog cannot be consistent (negative-definiteness
failures, negative solution coefficients, runaway iterations).
"""


class IHSError(Exception):
    """Base class for all library errors."""


class GeometryError(IHSError):
    """A geometry document or divisor expression failed to parse/validate."""


class DomainError(IHSError):
    """An operation precondition does not hold for the given input."""


class ConsistencyError(IHSError):
    """The declared prime catalog contradicts itself on the given input."""

"""Exception hierarchy for holodiff.

User-input problems derive from ``ValidationError`` and map to CLI exit code 2.
Failed mathematical identities derive from ``ConsistencyError`` and map to
exit code 3.
"""

from __future__ import annotations


class HolodiffError(Exception):
    """Base class for every error raised by holodiff."""


class ValidationError(HolodiffError, ValueError):
    """Input data was rejected before any computation ran."""


class GroupError(ValidationError):
    """Parameters do not describe a p-hypo-elementary group."""


class RamInputError(ValidationError):
    """Ramification data violates the structure of a wild cover."""


class ConfigError(ValidationError):
    """An environment setting has an unusable value."""


class DocumentError(ValidationError):
    """A JSON document is malformed; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


class ConsistencyError(HolodiffError, ArithmeticError):
    """A mathematical identity that must hold for valid data failed."""


class IntegralityError(ConsistencyError):
    """A multiplicity, genus or layer count came out non-integral or negative."""


class VerificationError(ConsistencyError):
    """Two independent computations of the same quantity disagree."""


class AssemblyError(ConsistencyError):
    """Layer decompositions cannot be glued into a k[H]-module."""

    def __init__(self, message: str, dump: str = "") -> None:
        super().__init__(f"{message}\n{dump}" if dump else message)
        self.dump = dump

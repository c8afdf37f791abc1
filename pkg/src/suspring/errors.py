"""Shared exception types.

Every error raised on purpose by this package derives from SuspError so the
command line driver can map failures to a single exit code.
"""

from __future__ import annotations


class SuspError(Exception):
    """Base class for all package errors."""


class RingMismatch(SuspError):
    """Two operands live in different rings or towers."""


class UnknownVariable(SuspError):
    """An expression referenced a variable the ring does not declare."""


class ExprSyntaxError(SuspError):
    """Malformed expression source; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroF(SuspError):
    """A suspension relation u*v = f was requested with f = 0."""


class UnitF(SuspError):
    """A suspension relation u*v = f was requested with f invertible."""


class PreconditionError(SuspError):
    """An operation received input outside its documented domain."""


class Unsupported(SuspError):
    """The request is mathematically meaningful but out of scope."""


class ResourceLimit(SuspError):
    """A configured work budget was exhausted before completion."""


class ConsistencyError(SuspError):
    """Two inputs that must describe the same object disagree."""

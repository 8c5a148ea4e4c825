"""Exception types shared across the package."""

from __future__ import annotations


class GeocageError(Exception):
    """Base class for all package-specific errors."""


class LoopRejected(GeocageError):
    """An edge or arc joins a vertex to itself."""


class OutOfRange(GeocageError):
    """An endpoint lies outside 0..n-1."""


class DigonConflict(GeocageError):
    """Opposite arcs, or an arc shadowing an edge, on the same vertex pair."""


class MgfSyntaxError(GeocageError):
    """Malformed MGF or group-table text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PreconditionFailed(GeocageError):
    """An operation's precondition does not hold; the message names it."""


class CountOverflow(GeocageError):
    """A walk count does not fit the 64-bit matrices returned to callers."""


class TooLarge(GeocageError):
    """The requested object exceeds a size cap meant to keep runs desk-scale."""


class DegenerateRoot(GeocageError):
    """The closed-form bound is undefined because a characteristic root is 1
    (or the discriminant vanishes); use the integer recurrence instead."""


class NotAGroup(GeocageError):
    """A multiplication table violates a group axiom; the message names it."""


class NotBijection(GeocageError):
    """A generator passed as a permutation is not a bijection."""


class CapExceeded(GeocageError):
    """Closure under generators grew past the configured cap."""


class IdentityInS(GeocageError):
    """A connection set contains the group identity."""


class InvalidParam(GeocageError):
    """A group preset was asked for with parameters it does not support."""


class UnknownFixture(GeocageError):
    """No bundled fixture has the requested name."""


class FixtureSelfCheckFailed(GeocageError):
    """A bundled fixture no longer matches its catalogued invariants."""


class CatalogIncomplete(GeocageError):
    """The group catalog only covers orders 1..24."""

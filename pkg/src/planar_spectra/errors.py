"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PlanarSpectraError(Exception):
    """Base class for library errors."""


class InvalidOrderError(PlanarSpectraError, ValueError):
    """A constructor was asked for an order outside its domain."""


class PreconditionError(PlanarSpectraError, ValueError):
    """An operation's input violates its documented precondition."""


class EdgeStateError(PreconditionError):
    """Edge already present (for additions) or absent (for removals)."""


class DomainError(PlanarSpectraError, ValueError):
    """A bound formula was evaluated below its stated threshold."""


class CapabilityError(PlanarSpectraError, ValueError):
    """Request exceeds the desk-scale limits of an exhaustive routine."""


class Graph6ParseError(PlanarSpectraError, ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MalformedEmbeddingError(PlanarSpectraError, ValueError):
    """Rotation system is inconsistent with the graph."""


class StructureViolationError(PlanarSpectraError, RuntimeError):
    """A structural guarantee failed on valid input; indicates a bug."""


class CacheIntegrityError(PlanarSpectraError):
    """A run-cache file is missing or does not match its recorded content."""

    def __init__(self, message: str, path: str) -> None:
        super().__init__(f"{message}: {path}")
        self.path = path

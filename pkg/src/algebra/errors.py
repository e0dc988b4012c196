"""
Exceptions raised by the cuntzlab calculators.

Law violations found by a checker are returned as report data, never raised.
The classes below signal that a computation could not be performed at all.
"""


class CuntzLabError(Exception):
    """Base class for every cuntzlab error."""


class StructureError(CuntzLabError, ValueError):
    """Malformed input tables or labels (wrong dimensions, indices out of range)."""


class PreconditionError(CuntzLabError, ValueError):
    """An operation was called on inputs outside its domain."""


class BoundExceededError(CuntzLabError):
    """A brute-force search would exceed the configured bound."""

    def __init__(self, what: str, estimate: int, bound: int):
        self.what = what
        self.estimate = estimate
        self.bound = bound
        super().__init__(
            f"Refusing to enumerate {what}: about {estimate:,} candidates exceeds the bound "
            f"of {bound:,} (raise CUNTZLAB_BOUND to allow it)"
        )


class NoClosedFormError(CuntzLabError):
    """No closed form is known for the requested pair of carriers."""


class UnsupportedOperationError(CuntzLabError):
    """The carrier does not provide the requested operation."""


class PathConstructionError(CuntzLabError, ValueError):
    """A path or oracle violated the increasing-path requirement."""

    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        self.witness = witness
        super().__init__(message if not witness else f"{message} (witness: {', '.join(witness)})")


class InvalidBimorphismError(PreconditionError):
    """A map offered as a Cu-bimorphism breaks one of the bimorphism laws."""

    def __init__(self, message: str, law: str):
        self.law = law
        super().__init__(message)

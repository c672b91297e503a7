"""Contains the exception types raised across the package."""

from typing import Sequence


class HvnError(Exception):
    """Base class for every error raised by hvnfinite."""


class GroupError(HvnError, ValueError):
    """Raised when group data violates the group axioms or a precondition."""


class NotAssociative(GroupError):
    """A multiplication table fails associativity on a named triple."""

    def __init__(self, a: int, b: int, c: int) -> None:
        self.triple = (a, b, c)
        super().__init__(f"Table is not associative on the triple ({a}, {b}, {c})")


class NoIdentity(GroupError):
    """A multiplication table has no two-sided identity."""

    def __init__(self) -> None:
        super().__init__("Table has no two-sided identity element")


class NoInverse(GroupError):
    """An element has no two-sided inverse (its row or column is not a permutation).

    ``row`` is the table row where the failure shows: the element's own row,
    or the first row repeating a value of its column.
    """

    def __init__(self, element: int, row: int | None = None) -> None:
        self.element = element
        self.row = element if row is None else row
        super().__init__(f"Element {element} has no two-sided inverse")


class NotNormal(GroupError):
    """A subgroup is not normal where a normal subgroup is required."""


class NotAbelian(GroupError):
    """A group is not abelian where an abelian group is required."""


class GroupMismatch(GroupError):
    """Two objects that must live over the same group do not."""


class OrderCapExceeded(HvnError, ValueError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, value: int, cap: int) -> None:
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(
            f"{what} of size {value} exceeds the configured cap of {cap} "
            "(override with the HVN_ORDER_CAP environment variable)"
        )


class DynamicsError(HvnError, ValueError):
    """Raised when a dynamical system violates a precondition."""


class RelationViolation(DynamicsError):
    """Generator images do not respect the relations of the group."""

    def __init__(self, word: Sequence[int], message: str) -> None:
        self.word = tuple(word)
        super().__init__(f"{message} (witness word over generators: {list(self.word)})")


class NotMinimal(DynamicsError):
    """A system has more than one orbit."""


class SystemNotNormal(DynamicsError):
    """A system required to be normal is not."""

    def __init__(self, side: str, diagnosis: str) -> None:
        self.side = side
        self.diagnosis = diagnosis
        super().__init__(f"System {side} is not normal: {diagnosis}")


class NotEquivariant(DynamicsError):
    """A map between systems does not commute with the actions."""


class NotSurjective(DynamicsError):
    """A factor map is not onto."""


class NotErgodic(DynamicsError):
    """A measure-preserving system has more than one orbit."""


class MeasureError(DynamicsError):
    """Weights are not a preserved probability vector."""


class ParseError(HvnError, ValueError):
    """A text input could not be parsed; names the source and line."""

    def __init__(self, source: str, line: int, message: str) -> None:
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


class InvariantViolation(HvnError, AssertionError):
    """An internal invariant failed. This is a bug, never a user error."""

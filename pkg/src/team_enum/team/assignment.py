"""
Assignments as fixed-width vectors over GF(2).

The variable at position 1 of a variable order is the most significant bit, so the
written form ``s(x1)s(x2)...s(xn)`` read as a binary numeral is the integer ``bits``
and the order on assignments is plain integer order.
"""

from dataclasses import dataclass

from .exceptions import (
    AssignmentFormatError,
    InvalidWidthError,
    WidthMismatchError,
    ZeroAssignmentError,
)


@dataclass(frozen=True, slots=True, order=True)
class Assignment:
    """Immutable, slotted, ordered bit vector of a fixed width."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        """Ensure the bits fit into the width."""
        if self.width < 0 or not 0 <= self.bits < (1 << self.width):
            raise InvalidWidthError(self.bits, self.width)

    @classmethod
    def first(cls, width: int) -> "Assignment":
        """Return the all-zero assignment, the smallest of its width."""
        return cls(0, width)

    @classmethod
    def last(cls, width: int) -> "Assignment":
        """Return the all-ones assignment, the largest of its width."""
        return cls((1 << width) - 1, width)

    @classmethod
    def parse(cls, text: str) -> "Assignment":
        """Read an assignment from a string of '0' and '1' characters."""
        text = text.strip()
        if any(char not in "01" for char in text):
            raise AssignmentFormatError(text)
        return cls(int(text, 2) if text else 0, len(text))

    def __str__(self) -> str:
        """Write the assignment as a fixed-width bit string."""
        return format(self.bits, f"0{self.width}b") if self.width else ""

    def __add__(self, other: object) -> "Assignment":
        """Add two vectors over GF(2)."""
        if not isinstance(other, Assignment):
            return NotImplemented
        if other.width != self.width:
            raise WidthMismatchError(self.width, other.width)
        return Assignment(self.bits ^ other.bits, self.width)

    @property
    def is_zero(self) -> bool:
        """Return True for the all-zero vector."""
        return self.bits == 0

    def bit(self, position: int) -> int:
        """Return the value at ``position`` (1-based, most significant first)."""
        return (self.bits >> (self.width - position)) & 1

    def has_next(self) -> bool:
        """Return True unless this is the largest assignment of its width."""
        return self.bits < (1 << self.width) - 1

    def successor(self) -> "Assignment | None":
        """Return the successor in integer order, or None after the last one."""
        if not self.has_next():
            return None
        return Assignment(self.bits + 1, self.width)

    def last_one_position(self) -> int:
        """Return the greatest position holding a one."""
        if self.is_zero:
            raise ZeroAssignmentError("last")
        lowest = (self.bits & -self.bits).bit_length()
        return self.width - lowest + 1


def first_assignment(width: int) -> Assignment:
    """Return the first assignment of the traversal."""
    return Assignment.first(width)


def next_assignment(assignment: Assignment) -> Assignment | None:
    """Return the successor of an assignment, or None for the last one."""
    return assignment.successor()


def last_one_position(assignment: Assignment) -> int:
    """Return ``max{i : s_i = 1}`` for a non-zero assignment."""
    return assignment.last_one_position()

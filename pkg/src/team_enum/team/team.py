"""Class definition for a team, a sorted set of equal-width assignments."""

from bisect import bisect_left
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .assignment import Assignment
from .cost import NO_STEPS, StepCounter
from .exceptions import (
    EmptyTeamError,
    InvalidWidthError,
    UnsortedTeamError,
    WidthMismatchError,
)


@dataclass(frozen=True, slots=True, weakref_slot=True)
class Team:
    """
    Immutable team whose members are kept strictly ascending.

    The width is stored explicitly so that the empty team still knows which
    assignment space it lives in.
    """

    members: tuple[Assignment, ...]
    width: int

    def __post_init__(self) -> None:
        """Ensure the members share the width and are strictly ascending."""
        if self.width < 0:
            raise InvalidWidthError(0, self.width)
        for member in self.members:
            if member.width != self.width:
                raise WidthMismatchError(self.width, member.width)
        for lower, upper in zip(self.members, self.members[1:], strict=False):
            if not lower < upper:
                raise UnsortedTeamError([str(x) for x in self.members])

    @classmethod
    def of(cls, members: Iterable[Assignment], width: int) -> "Team":
        """Build a team from any collection, dropping duplicates and sorting."""
        return cls(tuple(sorted(set(members))), width)

    @classmethod
    def empty(cls, width: int) -> "Team":
        """Return the empty team over ``width`` variables."""
        return cls((), width)

    @classmethod
    def singleton(cls, member: Assignment) -> "Team":
        """Return the team holding a single assignment."""
        return cls((member,), member.width)

    @classmethod
    def parse(cls, text: str, width: int | None = None) -> "Team":
        """
        Read a team in the textual format ``000,010,100``.

        Parameters
        ----------
        text : str
            Comma separated bit strings. Order and duplicates are normalised.
        width : int | None
            The width to enforce. Defaults to the width of the first member, which
            requires the text to name at least one assignment.

        Returns
        -------
        Team

        Raises
        ------
        AssignmentFormatError
            If a member is not a string of '0' and '1'.
        WidthMismatchError
            If the members disagree with each other or with ``width``.

        """
        members = [Assignment.parse(x) for x in text.split(",") if x.strip()]
        if width is None:
            width = members[0].width if members else 0
        return cls.of(members, width)

    def __str__(self) -> str:
        """Write the team as ascending comma separated bit strings."""
        return ",".join(str(x) for x in self.members)

    def __len__(self) -> int:
        """Return the cardinality of the team."""
        return len(self.members)

    def __iter__(self) -> Iterator[Assignment]:
        """Iterate over the members in ascending order."""
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        """Return True if an assignment is a member."""
        if not isinstance(item, Assignment):
            return False
        return self.has_member(item)

    @property
    def max(self) -> Assignment:
        """Return the largest member."""
        if not self.members:
            raise EmptyTeamError("max")
        return self.members[-1]

    @property
    def contains_zero(self) -> bool:
        """Return True if the all-zero assignment is a member."""
        return bool(self.members) and self.members[0].is_zero

    @property
    def key(self) -> tuple[int, ...]:
        """Return the member integers, the key of the lexicographic order."""
        return tuple(x.bits for x in self.members)

    def has_member(self, item: Assignment, counter: StepCounter = NO_STEPS) -> bool:
        """Binary search for a member, metering one step per comparison."""
        counter.tick(len(self.members).bit_length())
        index = bisect_left(self.members, item)
        return index < len(self.members) and self.members[index] == item

    def shift(self, vector: Assignment, counter: StepCounter = NO_STEPS) -> "Team":
        """Apply the flipping-bits action ``vector + T`` and sort the result."""
        if vector.width != self.width:
            raise WidthMismatchError(self.width, vector.width)
        size = len(self.members)
        counter.tick(size + size * max(1, size.bit_length()))
        return Team(tuple(sorted(vector + x for x in self.members)), self.width)

    def appended(self, member: Assignment) -> "Team":
        """Return the team extended by an assignment larger than every member."""
        return Team((*self.members, member), self.width)

    def replaced_max(self, member: Assignment) -> "Team":
        """Return the team with its largest member exchanged for ``member``."""
        return Team((*self.members[:-1], member), self.width)

    def without_max(self) -> "Team":
        """Return the team without its largest member."""
        if not self.members:
            raise EmptyTeamError("without_max")
        return Team(self.members[:-1], self.width)


def apply_shift(vector: Assignment, team: Team) -> Team:
    """Return ``{vector + s : s in team}`` sorted ascending."""
    return team.shift(vector)

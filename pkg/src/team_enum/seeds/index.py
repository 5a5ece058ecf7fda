"""Trie-backed containers for seed teams and their extension lists."""

from collections.abc import Iterator
from dataclasses import dataclass

from team_enum.team.assignment import Assignment
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.exceptions import WidthMismatchError
from team_enum.team.team import Team

from .exceptions import UnsortedInsertError
from .trie import BitTrie


def team_key(team: Team) -> int:
    """Concatenate the ascending members into one ``k*n`` bit key."""
    key = 0
    for member in team.members:
        key = (key << team.width) | member.bits
    return key


class AssignmentList:
    """Ascending duplicate-free assignments with trie-backed membership."""

    def __init__(self, width: int, counter: StepCounter = NO_STEPS) -> None:
        """Create an empty list of ``width``-bit assignments."""
        self.width = width
        self._items: list[Assignment] = []
        self._trie: BitTrie[Assignment] = BitTrie(width, counter)

    def __len__(self) -> int:
        """Return the number of assignments."""
        return len(self._items)

    def __getitem__(self, index: int) -> Assignment:
        """Return the assignment at a position."""
        return self._items[index]

    def __iter__(self) -> Iterator[Assignment]:
        """Iterate in ascending order."""
        return iter(self._items)

    def __contains__(self, item: object) -> bool:
        """Trie lookup in ``O(n)`` edge traversals."""
        return isinstance(item, Assignment) and item.bits in self._trie

    def append(self, item: Assignment) -> None:
        """Add an assignment larger than every stored one."""
        if item.width != self.width:
            raise WidthMismatchError(self.width, item.width)
        if self._items and not self._items[-1] < item:
            raise UnsortedInsertError(item, self._items[-1])
        self._items.append(item)
        self._trie.insert(item.bits, item)


@dataclass(frozen=True, slots=True)
class SeedEntry:
    """A (k-1)-team together with the members that extend it to a seed."""

    team: Team
    extensions: AssignmentList


class SeedIndex:
    """
    The map ``D_k`` from (k-1)-teams to sorted extension lists.

    An assignment ``s`` in the list of ``T`` means ``s > max(T)`` and ``T + {s}`` is a
    satisfying k-team containing zero. Keys are stored in a trie over ``(k-1)*n``
    bits, so iteration follows the lexicographic order of the key teams.
    """

    def __init__(self, level: int, width: int, counter: StepCounter = NO_STEPS) -> None:
        """Create an empty index for teams of cardinality ``level``."""
        self.level = level
        self.width = width
        self._counter = counter
        self._entries: BitTrie[SeedEntry] = BitTrie((level - 1) * width, counter)

    def __len__(self) -> int:
        """Return the number of key teams."""
        return len(self._entries)

    def extend(self, prefix: Team, member: Assignment) -> None:
        """Record ``prefix + {member}`` as a seed of this level."""
        key = team_key(prefix)
        entry = self._entries.get(key)
        if entry is None:
            entry = SeedEntry(prefix, AssignmentList(self.width, self._counter))
            self._entries.insert(key, entry)
        entry.extensions.append(member)

    def extensions(self, prefix: Team) -> AssignmentList | None:
        """Return the extension list of a key team, or None."""
        entry = self._entries.get(team_key(prefix))
        return None if entry is None else entry.extensions

    def entries(self) -> Iterator[SeedEntry]:
        """Yield entries in lexicographic order of their key teams."""
        for _, entry in self._entries.items():
            yield entry


class SeedSet:
    """A set of equal-size teams with ``O(k*n)`` insertion, lookup and deletion."""

    def __init__(self, level: int, width: int, counter: StepCounter = NO_STEPS) -> None:
        """Create an empty set of ``level``-teams over ``width`` variables."""
        self.level = level
        self.width = width
        self._trie: BitTrie[Team] = BitTrie(level * width, counter)

    def __len__(self) -> int:
        """Return the number of teams."""
        return len(self._trie)

    def __contains__(self, team: object) -> bool:
        """Return True if the team is a member."""
        if not isinstance(team, Team) or len(team) != self.level:
            return False
        return team_key(team) in self._trie

    def __iter__(self) -> Iterator[Team]:
        """Iterate in ascending lexicographic order."""
        for _, team in self._trie.items():
            yield team

    def add(self, team: Team) -> None:
        """Insert a team of this level."""
        self._check(team)
        self._trie.insert(team_key(team), team)

    def discard(self, team: Team) -> bool:
        """Remove a team if present. Return True if it was a member."""
        self._check(team)
        return self._trie.delete(team_key(team))

    def first(self) -> Team | None:
        """Return the lexicographically smallest team, or None when empty."""
        found = self._trie.first()
        return None if found is None else found[1]

    def _check(self, team: Team) -> None:
        if team.width != self.width:
            raise WidthMismatchError(self.width, team.width)
        if len(team) != self.level:
            raise WidthMismatchError(self.level * self.width, len(team) * team.width)

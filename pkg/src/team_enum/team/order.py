"""The cardinality and lexicographic orders on teams."""

from collections.abc import Callable
from enum import Enum, auto

from .exceptions import WidthMismatchError
from .team import Team

TeamKey = tuple[int, ...]


class OrderKind(Enum):
    """Orders on teams."""

    SIZE = auto()
    LEX = auto()
    SIZE_THEN_LEX = auto()


class Comparison(Enum):
    """Outcome of comparing two teams."""

    LESS = auto()
    EQUAL = auto()
    GREATER = auto()
    INCOMPARABLE = auto()


def _check_widths(a: Team, b: Team) -> None:
    if a.width != b.width:
        raise WidthMismatchError(a.width, b.width)


def _sign(left: TeamKey, right: TeamKey) -> Comparison:
    if left == right:
        return Comparison.EQUAL
    return Comparison.LESS if left < right else Comparison.GREATER


def compare_teams(a: Team, b: Team, order: OrderKind) -> Comparison:
    """
    Compare two teams under one of the team orders.

    The lexicographic order compares the ascending member sequences position by
    position; when one sequence is a prefix of the other the shorter team is smaller.
    This is exactly Python's tuple order on the member integers. The cardinality order
    is partial: two distinct teams of equal size are incomparable.
    """
    _check_widths(a, b)
    if order is OrderKind.LEX:
        return _sign(a.key, b.key)
    if order is OrderKind.SIZE_THEN_LEX:
        return _sign((len(a), *a.key), (len(b), *b.key))
    if a == b:
        return Comparison.EQUAL
    if len(a) == len(b):
        return Comparison.INCOMPARABLE
    return Comparison.LESS if len(a) < len(b) else Comparison.GREATER


def team_sort_key(order: OrderKind) -> Callable[[Team], TeamKey]:
    """Return a sort key for a total order; SIZE sorts stably by cardinality."""
    if order is OrderKind.LEX:
        return lambda team: team.key
    if order is OrderKind.SIZE_THEN_LEX:
        return lambda team: (len(team), *team.key)
    return lambda team: (len(team),)


def symmetric_difference_size(a: Team, b: Team) -> int:
    """Return ``|a △ b|``."""
    _check_widths(a, b)
    return len(set(a.members) ^ set(b.members))

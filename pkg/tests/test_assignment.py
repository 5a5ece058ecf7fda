"""Unit tests for assignments."""

import pytest

from team_enum.team.assignment import (
    Assignment,
    first_assignment,
    last_one_position,
    next_assignment,
)
from team_enum.team.exceptions import (
    AssignmentFormatError,
    InvalidWidthError,
    WidthMismatchError,
    ZeroAssignmentError,
)


def test_parse_and_format() -> None:
    """Bit strings map to integers with the first variable as the high bit."""
    s = Assignment.parse("0110")
    assert s.bits == 6
    assert s.width == 4
    assert str(s) == "0110"
    assert s.bit(1) == 0
    assert s.bit(2) == 1
    assert str(Assignment.parse("")) == ""


def test_parse_rejects_other_characters() -> None:
    """Only '0' and '1' are accepted."""
    with pytest.raises(AssignmentFormatError):
        Assignment.parse("01a")


def test_invalid_width() -> None:
    """The value must fit the width."""
    with pytest.raises(InvalidWidthError):
        Assignment(8, 3)
    with pytest.raises(InvalidWidthError):
        Assignment(0, -1)


def test_order_is_integer_order() -> None:
    """Assignments compare as integers of the same width."""
    values = [Assignment.parse(x) for x in ("110", "001", "010", "000")]
    assert [str(x) for x in sorted(values)] == ["000", "001", "010", "110"]


def test_addition() -> None:
    """Addition is bitwise xor and needs equal widths."""
    assert Assignment.parse("110") + Assignment.parse("011") == Assignment.parse("101")
    with pytest.raises(WidthMismatchError):
        Assignment.parse("11") + Assignment.parse("011")


def test_traversal() -> None:
    """The traversal runs from all zeros to all ones."""
    s = first_assignment(2)
    seen = []
    while s is not None:
        seen.append(str(s))
        s = next_assignment(s)
    assert seen == ["00", "01", "10", "11"]
    assert not Assignment.last(2).has_next()
    assert Assignment.first(0).successor() is None


@pytest.mark.parametrize(
    ("text", "expected"),
    [("100", 1), ("010", 2), ("011", 3), ("111", 3), ("1000", 1), ("0101", 4)],
)
def test_last_one_position(text: str, expected: int) -> None:
    """The last one is the highest 1-based position holding a one."""
    assert last_one_position(Assignment.parse(text)) == expected


def test_last_one_position_of_zero() -> None:
    """The zero vector has no last one."""
    with pytest.raises(ZeroAssignmentError):
        Assignment.first(3).last_one_position()

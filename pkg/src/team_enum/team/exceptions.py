"""Exceptions to throw when working with assignments and teams."""


class InvalidWidthError(ValueError):
    """Flag when an assignment width or value is out of range."""

    def __init__(self, bits: int, width: int) -> None:
        """Pass message to ValueError exception."""
        msg = (
            f"Invalid assignment '{bits}' of width '{width}'. "
            "Need 0 <= bits < 2^width."
        )
        super().__init__(msg)


class WidthMismatchError(ValueError):
    """Flag when two objects over different assignment widths are combined."""

    def __init__(self, left: int, right: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Width mismatch: '{left}' bits against '{right}' bits."
        super().__init__(msg)


class AssignmentFormatError(ValueError):
    """Flag when a textual assignment or team cannot be read."""

    def __init__(self, text: str) -> None:
        """Pass message to ValueError exception."""
        msg = f"Invalid assignment text '{text}'. Expected a string of '0' and '1'."
        super().__init__(msg)


class UnsortedTeamError(ValueError):
    """Flag when team members are not strictly ascending."""

    def __init__(self, members: object) -> None:
        """Pass message to ValueError exception."""
        msg = f"Team members '{members}' must be strictly ascending and distinct."
        super().__init__(msg)


class ZeroAssignmentError(ValueError):
    """Flag when an operation that needs a one bit is given the zero vector."""

    def __init__(self, operation: str) -> None:
        """Pass message to ValueError exception."""
        msg = f"Operation '{operation}' is undefined on the zero assignment."
        super().__init__(msg)


class MissingZeroError(ValueError):
    """Flag when a team without the zero assignment is passed where one is needed."""

    def __init__(self, team: object) -> None:
        """Pass message to ValueError exception."""
        msg = f"Team '{team}' does not contain the zero assignment."
        super().__init__(msg)


class EmptyTeamError(ValueError):
    """Flag when an operation needs at least one team member."""

    def __init__(self, operation: str) -> None:
        """Pass message to ValueError exception."""
        msg = f"Operation '{operation}' requires a non-empty team."
        super().__init__(msg)

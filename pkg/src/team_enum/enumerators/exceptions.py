"""Exceptions to throw when configuring or running an enumeration."""


class SizeLimitError(ValueError):
    """Flag when an exhaustive strategy is asked to cover too many variables."""

    def __init__(self, width: int, limit: int) -> None:
        """Pass message to ValueError exception."""
        msg = (
            f"Refusing brute force over {width} free variables. "
            f"At most {limit} are supported."
        )
        super().__init__(msg)


class VariableOrderError(ValueError):
    """Flag when disjuncts do not share one variable order."""

    def __init__(self, orders: object) -> None:
        """Pass message to ValueError exception."""
        msg = f"Disjuncts must share a variable order, found '{orders}'."
        super().__init__(msg)


class InvalidMaxSizeError(ValueError):
    """Flag when the team size bound is not a positive integer."""

    def __init__(self, max_size: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Invalid maximum team size '{max_size}'. Must be at least 1."
        super().__init__(msg)


class InvalidBudgetError(ValueError):
    """Flag when the interleaving budget is not a positive integer."""

    def __init__(self, budget: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Invalid interleave budget '{budget}'. Must be at least 1."
        super().__init__(msg)

"""Run configuration shared by every enumeration strategy."""

from dataclasses import dataclass, replace
from enum import StrEnum

from team_enum.team.order import OrderKind

from .exceptions import InvalidBudgetError, InvalidMaxSizeError


class Algorithm(StrEnum):
    """Enumeration strategies."""

    ORBIT = "orbit"
    POLYSPACE = "polyspace"
    BRUTE = "brute"


@dataclass(frozen=True, slots=True)
class EnumConfig:
    """
    Parameters of one enumeration run.

    Attributes
    ----------
    max_size : int | None
        Largest team cardinality to emit. None means no bound, which is the same as
        ``2^n`` for ``n`` free variables.
    algorithm : Algorithm
        The strategy to run.
    order : OrderKind | None
        Re-sort the emissions under this order. None keeps the emission order, the
        only choice that preserves the strategy's delay guarantee.
    interleave_budget : int | None
        Seed construction units run after each orbit emission. None uses the
        cardinality of the level being emitted.

    """

    max_size: int | None = None
    algorithm: Algorithm = Algorithm.ORBIT
    order: OrderKind | None = None
    interleave_budget: int | None = None

    def __post_init__(self) -> None:
        """Validate the bounds."""
        if self.max_size is not None and self.max_size < 1:
            raise InvalidMaxSizeError(self.max_size)
        if self.interleave_budget is not None and self.interleave_budget < 1:
            raise InvalidBudgetError(self.interleave_budget)

    def size_limit(self, width: int) -> int:
        """Return the cardinality bound clamped to the ``2^width`` assignments."""
        limit = 1 << width
        return limit if self.max_size is None else min(self.max_size, limit)

    def clamped(self, width: int) -> "EnumConfig":
        """Return a copy whose ``max_size`` is explicit and at most ``2^width``."""
        return replace(self, max_size=self.size_limit(width))

    def budget(self, level: int) -> int:
        """Return the seed construction units to spend per emission at ``level``."""
        return self.interleave_budget or level

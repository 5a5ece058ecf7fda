"""Exhaustive enumeration over all teams, the reference for the other strategies."""

from collections.abc import Iterator
from itertools import combinations

from team_enum.formula.reduce import ReducedFormula
from team_enum.team.assignment import Assignment
from team_enum.team.check import model_check
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.team import Team

from .config import EnumConfig
from .exceptions import SizeLimitError
from .stream import SolutionStream

BRUTE_FORCE_MAX_VARS = 4


class BruteForceEnumerator:
    """Model check every non-empty team up to the size bound."""

    def __init__(
        self,
        reduced: ReducedFormula,
        config: EnumConfig,
        counter: StepCounter = NO_STEPS,
    ) -> None:
        """
        Prepare an enumeration over at most four free variables.

        Raises
        ------
        SizeLimitError
            If the formula has more than ``BRUTE_FORCE_MAX_VARS`` free variables.

        """
        if reduced.width > BRUTE_FORCE_MAX_VARS:
            raise SizeLimitError(reduced.width, BRUTE_FORCE_MAX_VARS)
        self.reduced = reduced
        self.config = config.clamped(reduced.width)
        self.counter = counter

    def __iter__(self) -> Iterator[Team]:
        """Yield expanded teams in ascending (cardinality, lexicographic) order."""
        if self.reduced.contradictory:
            return
        width = self.reduced.width
        space = [Assignment(bits, width) for bits in range(1 << width)]
        for k in range(1, self.config.size_limit(width) + 1):
            # combinations of a sorted pool come out sorted and in lexicographic order
            for members in combinations(space, k):
                team = Team(members, width)
                if model_check(self.reduced, team, self.counter):
                    yield self.reduced.expand_team(team)


def enumerate_brute_force(
    reduced: ReducedFormula, config: EnumConfig, counter: StepCounter | None = None
) -> SolutionStream:
    """Return a stream over the exhaustive enumeration of a reduced formula."""
    counter = StepCounter() if counter is None else counter
    producer = BruteForceEnumerator(reduced, config, counter)
    return SolutionStream(producer, counter, producer)

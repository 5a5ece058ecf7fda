"""Enumeration that recomputes lower cardinalities instead of storing them."""

import logging
from collections.abc import Iterator
from weakref import WeakSet

from team_enum.formula.reduce import ReducedFormula
from team_enum.team.assignment import Assignment
from team_enum.team.check import model_check
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.team import Team

from .config import EnumConfig
from .stream import SolutionStream

logger = logging.getLogger(__name__)


class PolyspaceEnumerator:
    """
    Walk the teams of each cardinality in lexicographic order with backtracking.

    For cardinality ``k`` the walk holds a single team ``T`` and starts at the
    smallest assignment. A satisfying ``T`` of size ``k`` is emitted. A satisfying
    ``T`` smaller than ``k`` grows by the successor of its maximum; otherwise the
    maximum is replaced by its successor. When the maximum has no successor it is
    dropped and the new maximum is advanced instead. The level ends when a single
    member has no successor. An unsatisfying team has no satisfying
    superset, so the walk never grows one.

    Attributes
    ----------
    peak_retained_teams : int
        Most teams built by the walk that were still alive at once, counted
        through weak references.
    peak_retained_assignments : int
        Most assignments held at once: the team members plus the current maximum.

    """

    def __init__(
        self,
        reduced: ReducedFormula,
        config: EnumConfig,
        counter: StepCounter = NO_STEPS,
    ) -> None:
        """Prepare an enumeration; nothing is computed until iteration."""
        self.reduced = reduced
        self.config = config.clamped(reduced.width)
        self.counter = counter
        self.peak_retained_teams = 0
        self.peak_retained_assignments = 0
        self._live: WeakSet[Team] = WeakSet()

    def __iter__(self) -> Iterator[Team]:
        """Yield expanded teams in ascending (cardinality, lexicographic) order."""
        if self.reduced.contradictory:
            logger.info("contradictory formula, nothing to enumerate")
            return
        limit = self.config.size_limit(self.reduced.width)
        for k in range(1, limit + 1):
            yield from self._walk(k)

    def _walk(self, k: int) -> Iterator[Team]:
        team = Team.singleton(Assignment.first(self.reduced.width))
        emitted = 0
        while True:
            self._hold(team)
            # One step for the team under test.
            self.counter.tick()
            satisfied = model_check(self.reduced, team, self.counter)
            if len(team) == k and satisfied:
                emitted += 1
                yield self.reduced.expand_team(team)
            following = team.max.successor()
            self.counter.tick()
            if len(team) < k and satisfied and following is not None:
                team = team.appended(following)
            elif following is not None:
                team = team.replaced_max(following)
            elif len(team) > 1:
                team = team.without_max()
                advanced = team.max.successor()
                # A smaller maximum always has a successor.
                if advanced is None:
                    break
                team = team.replaced_max(advanced)
            else:
                break
        logger.info("cardinality %d: %d teams", k, emitted)

    def _hold(self, team: Team) -> None:
        self._live.add(team)
        # Members plus the successor of the maximum.
        self.peak_retained_assignments = max(
            self.peak_retained_assignments, len(team) + 1
        )
        self.peak_retained_teams = max(self.peak_retained_teams, len(self._live))


def enumerate_polyspace(
    reduced: ReducedFormula, config: EnumConfig, counter: StepCounter | None = None
) -> SolutionStream:
    """Return a stream over the polynomial-space enumeration of a reduced formula."""
    counter = StepCounter() if counter is None else counter
    producer = PolyspaceEnumerator(reduced, config, counter)
    return SolutionStream(producer, counter, producer)

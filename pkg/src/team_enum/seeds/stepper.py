"""
Resumable construction of the seed sets, one level at a time.

The seeds of level ``k`` are the satisfying k-teams that contain the zero assignment.
Level 2 tests every candidate ``s`` on the pair ``{0, s}``. A higher level is built
from the previous index ``D_{k-1}`` and the pair list ``D_2[{0}]``: for a key ``T``
and two extensions ``r < s`` of ``T``, the team ``T + {r, s}`` satisfies the formula
exactly when ``r + s`` is in the pair list.

Work is done in units. A unit is one candidate at level 2, one ``(T, r, s)`` triple
at higher levels, or moving the cursor to the next ``r`` (or the next key once the
current key has no pair left). Units can be spent in arbitrary budgets; the final
index does not depend on how the work was split.
"""

import logging
from collections.abc import Iterator
from enum import Enum

from team_enum.formula.exceptions import ContradictoryFormulaError
from team_enum.formula.reduce import ReducedFormula
from team_enum.team.assignment import Assignment
from team_enum.team.check import pair_satisfies
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.team import Team

from .exceptions import LevelCompleteError, LevelIncompleteError
from .index import AssignmentList, SeedEntry, SeedIndex, SeedSet

logger = logging.getLogger(__name__)

PAIR_LEVEL = 2


class StepResult(Enum):
    """Outcome of spending a budget on the current level."""

    PROGRESSED = "progressed"
    LEVEL_COMPLETE = "level_complete"


class SeedStepper:
    """Single-owner cursor over the seed construction of one level at a time."""

    def __init__(
        self, reduced: ReducedFormula, counter: StepCounter = NO_STEPS
    ) -> None:
        """
        Start the construction of level 2.

        Raises
        ------
        ContradictoryFormulaError
            If the formula has no satisfying team.

        """
        if reduced.contradictory:
            raise ContradictoryFormulaError("SeedStepper")
        self.reduced = reduced
        self.width = reduced.width
        self._counter = counter
        self._zero = Assignment.first(self.width)
        self._level = PAIR_LEVEL
        self._index = SeedIndex(PAIR_LEVEL, self.width, counter)
        self._seeds = SeedSet(PAIR_LEVEL, self.width, counter)
        self._pairs: AssignmentList | None = None
        self._previous: SeedIndex | None = None
        self.iterations = 0

        self._candidate = self._zero.successor()
        self._entries: Iterator[SeedEntry] = iter(())
        self._entry: SeedEntry | None = None
        self._pending: SeedEntry | None = None
        self._r = 0
        self._s = 1
        self._complete = self._candidate is None

    @property
    def level(self) -> int:
        """Return the cardinality of the seeds under construction."""
        return self._level

    @property
    def complete(self) -> bool:
        """Return True once the current level is fully constructed."""
        return self._complete

    def advance(self, budget: int) -> StepResult:
        """
        Spend up to ``budget`` units on the current level.

        Raises
        ------
        LevelCompleteError
            If the level was already complete before the call.

        """
        if self._complete:
            raise LevelCompleteError(self._level)
        for _ in range(budget):
            self._unit()
            if self._complete:
                logger.debug(
                    "level %d complete: %d seeds", self._level, len(self._seeds)
                )
                return StepResult.LEVEL_COMPLETE
        return StepResult.PROGRESSED

    def finish(self) -> StepResult:
        """Run the current level to completion."""
        while not self._complete:
            self.advance(1)
        return StepResult.LEVEL_COMPLETE

    def seeds(self) -> SeedSet:
        """Return the seed set of the completed level; deletions are allowed."""
        if not self._complete:
            raise LevelIncompleteError(self._level)
        return self._seeds

    def index(self) -> SeedIndex:
        """Return the extension index of the completed level."""
        if not self._complete:
            raise LevelIncompleteError(self._level)
        return self._index

    def next_level(self) -> None:
        """Freeze the completed level and start the next one."""
        if not self._complete:
            raise LevelIncompleteError(self._level)
        if self._level == PAIR_LEVEL:
            pairs = self._index.extensions(Team.singleton(self._zero))
            self._pairs = pairs or AssignmentList(self.width, self._counter)
        # Only the previous level is needed; older indices are released here.
        self._previous = self._index
        self._level += 1
        self._index = SeedIndex(self._level, self.width, self._counter)
        self._seeds = SeedSet(self._level, self.width, self._counter)
        self.iterations = 0

        self._entries = self._previous.entries()
        self._entry = next(self._entries, None)
        self._pending = next(self._entries, None)
        self._r, self._s = 0, 1
        self._complete = self._entry is None or self._exhausted()
        logger.debug(
            "level %d started from %d keys", self._level, len(self._previous)
        )

    def _unit(self) -> None:
        if self._level == PAIR_LEVEL:
            self._pair_unit()
        else:
            self._triple_unit()

    def _pair_unit(self) -> None:
        candidate = self._candidate
        if candidate is None:
            self._complete = True
            return
        self.iterations += 1
        if pair_satisfies(self.reduced, candidate, self._counter):
            self._index.extend(Team.singleton(self._zero), candidate)
            self._seeds.add(Team((self._zero, candidate), self.width))
        self._candidate = candidate.successor()
        self._complete = self._candidate is None

    def _triple_unit(self) -> None:
        entry = self._entry
        if entry is None:
            self._complete = True
            return
        extensions = entry.extensions
        if self._s < len(extensions):
            self.iterations += 1
            r, s = extensions[self._r], extensions[self._s]
            self._counter.tick()
            if self._pairs is not None and r + s in self._pairs:
                prefix = entry.team.appended(r)
                self._index.extend(prefix, s)
                self._seeds.add(prefix.appended(s))
            self._s += 1
        elif self._r + 2 < len(extensions):
            self._r += 1
            self._s = self._r + 1
        else:
            self._entry = self._pending
            self._pending = next(self._entries, None)
            self._r, self._s = 0, 1
        self._complete = self._entry is None or self._exhausted()

    def _exhausted(self) -> bool:
        """Return True if no triple is left at or after the cursor."""
        if self._entry is None:
            return True
        size = len(self._entry.extensions)
        current_done = self._s >= size and self._r + 2 >= size
        return current_done and self._pending is None


def build_pair_seeds(
    reduced: ReducedFormula, counter: StepCounter = NO_STEPS
) -> SeedIndex:
    """Return ``D_2``: the zero team maps to each ``s`` with ``{0, s}`` satisfying."""
    stepper = SeedStepper(reduced, counter)
    stepper.finish()
    return stepper.index()


def seeds_at_level(
    reduced: ReducedFormula, level: int, counter: StepCounter = NO_STEPS
) -> SeedSet:
    """
    Construct the seeds of one cardinality from scratch.

    Level 1 holds only the zero team. Construction stops early once a level is empty,
    since every later level is then empty too.
    """
    if level <= 1:
        seeds = SeedSet(1, reduced.width, counter)
        if level == 1 and not reduced.contradictory:
            seeds.add(Team.singleton(Assignment.first(reduced.width)))
        return seeds
    if reduced.contradictory:
        return SeedSet(level, reduced.width, counter)
    stepper = SeedStepper(reduced, counter)
    stepper.finish()
    while stepper.level < level:
        if not len(stepper.seeds()):
            return SeedSet(level, reduced.width, counter)
        stepper.next_level()
        stepper.finish()
    return stepper.seeds()

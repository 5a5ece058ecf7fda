"""
Orbit enumeration ordered by cardinality, interleaved with seed construction.

Every satisfying team lies in the orbit of a satisfying team that contains zero,
and every orbit holds such a seed. Level ``k`` therefore streams the orbits of the
seeds of cardinality ``k``, removing each zero-containing team it emits from the
seed set so that no orbit is produced twice. While level ``k`` is emitted, the
seeds of level ``k + 1`` are built a few units at a time after every emission.
"""

import logging
from collections.abc import Iterator

from team_enum.formula.reduce import ReducedFormula
from team_enum.orbit.generate import enumerate_orbit
from team_enum.seeds.index import SeedSet
from team_enum.seeds.stepper import PAIR_LEVEL, SeedStepper
from team_enum.team.assignment import Assignment
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.team import Team

from .config import EnumConfig
from .stream import SolutionStream

logger = logging.getLogger(__name__)


class OrbitEnumerator:
    """Single-use producer of the satisfying teams, level by level."""

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
        self.orbits_per_level: dict[int, int] = {}
        self.seeds_per_level: dict[int, int] = {}
        self.emitted_per_level: dict[int, int] = {}

    def __iter__(self) -> Iterator[Team]:
        """Yield the expanded satisfying teams, grouped by ascending cardinality."""
        if self.reduced.contradictory:
            logger.info("contradictory formula, nothing to enumerate")
            return
        width = self.reduced.width
        limit = self.config.size_limit(width)

        seeds = SeedSet(1, width, self.counter)
        seeds.add(Team.singleton(Assignment.first(width)))
        stepper: SeedStepper | None = None
        if limit >= PAIR_LEVEL:
            stepper = SeedStepper(self.reduced, self.counter)

        for level in range(1, limit + 1):
            if not len(seeds):
                logger.info("no seeds of cardinality %d, stopping", level)
                break
            self.seeds_per_level[level] = len(seeds)
            yield from self._emit_level(level, seeds, stepper)

            if stepper is None or level == limit:
                break
            if not stepper.complete:
                logger.debug("finishing seeds of level %d after output", level + 1)
                stepper.finish()
            seeds = stepper.seeds()
            if level + 2 <= limit:
                stepper.next_level()

    def _emit_level(
        self, level: int, seeds: SeedSet, stepper: SeedStepper | None
    ) -> Iterator[Team]:
        budget = self.config.budget(level)
        orbits = emitted = 0
        while (seed := seeds.first()) is not None:
            orbits += 1
            for team in enumerate_orbit(seed, self.counter):
                if team.contains_zero:
                    seeds.discard(team)
                emitted += 1
                yield self.reduced.expand_team(team)
                if stepper is not None and not stepper.complete:
                    stepper.advance(budget)
        self.orbits_per_level[level] = orbits
        self.emitted_per_level[level] = emitted
        logger.info("level %d: %d teams in %d orbits", level, emitted, orbits)


def enumerate_orbit_interleaved(
    reduced: ReducedFormula, config: EnumConfig, counter: StepCounter | None = None
) -> SolutionStream:
    """Return a stream over the orbit enumeration of a reduced formula."""
    counter = StepCounter() if counter is None else counter
    producer = OrbitEnumerator(reduced, config, counter)
    return SolutionStream(producer, counter, producer)


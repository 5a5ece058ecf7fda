"""Union of the solution streams of the disjuncts of a formula."""

import heapq
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import replace

from team_enum.formula.reduce import ReducedFormula
from team_enum.team.cost import StepCounter
from team_enum.team.order import OrderKind, team_sort_key
from team_enum.team.team import Team

from .config import Algorithm, EnumConfig
from .dispatch import build_producer, reordered
from .exceptions import VariableOrderError
from .stream import SolutionStream

logger = logging.getLogger(__name__)


def _merged(sources: Sequence[Iterable[Team]], counter: StepCounter) -> Iterator[Team]:
    key = team_sort_key(OrderKind.SIZE_THEN_LEX)
    comparisons = max(1, len(sources).bit_length())
    previous: Team | None = None
    for team in heapq.merge(*sources, key=key):
        counter.tick(comparisons)
        if team == previous:
            continue
        previous = team
        yield team


def merge_disjunction(
    disjuncts: Sequence[ReducedFormula],
    config: EnumConfig,
    counter: StepCounter | None = None,
) -> SolutionStream:
    """
    Merge the sorted solution streams of several disjuncts without duplicates.

    Parameters
    ----------
    disjuncts : Sequence[ReducedFormula]
        Reduced disjuncts over one shared variable order.
    config : EnumConfig
        Run configuration for the component streams. The orbit strategy does not
        emit a cardinality level in lexicographic order, so it is replaced by the
        polynomial-space strategy.
    counter : StepCounter | None
        Meter shared by all component streams.

    Returns
    -------
    SolutionStream
        Teams in ascending (cardinality, lexicographic) order, each emitted once
        even when it satisfies several disjuncts.

    Raises
    ------
    VariableOrderError
        If the disjuncts were reduced against different variable orders.

    """
    orders = sorted({d.original_order for d in disjuncts})
    if len(orders) > 1:
        raise VariableOrderError(orders)
    if config.algorithm is Algorithm.ORBIT:
        logger.warning("orbit streams are not sorted; merging polyspace streams")
        config = replace(config, algorithm=Algorithm.POLYSPACE)
    counter = StepCounter() if counter is None else counter
    producers = [build_producer(d, config, counter) for d in disjuncts]
    source = reordered(_merged(producers, counter), config.order)
    return SolutionStream(source, counter, producers)


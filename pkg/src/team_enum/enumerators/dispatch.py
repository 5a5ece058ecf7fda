"""Select a strategy for a run configuration and wrap it in a stream."""

from collections.abc import Iterable, Iterator
from itertools import groupby

from team_enum.formula.reduce import ReducedFormula
from team_enum.team.cost import StepCounter
from team_enum.team.order import OrderKind, team_sort_key
from team_enum.team.team import Team

from .brute_force import BruteForceEnumerator
from .config import Algorithm, EnumConfig
from .interleaved import OrbitEnumerator
from .polyspace import PolyspaceEnumerator
from .stream import SolutionStream

Producer = OrbitEnumerator | PolyspaceEnumerator | BruteForceEnumerator


def build_producer(
    reduced: ReducedFormula, config: EnumConfig, counter: StepCounter
) -> Producer:
    """Return the enumerator named by ``config.algorithm``."""
    match config.algorithm:
        case Algorithm.ORBIT:
            return OrbitEnumerator(reduced, config, counter)
        case Algorithm.POLYSPACE:
            return PolyspaceEnumerator(reduced, config, counter)
        case Algorithm.BRUTE:
            return BruteForceEnumerator(reduced, config, counter)


def reordered(source: Iterable[Team], order: OrderKind | None) -> Iterator[Team]:
    """
    Re-sort an emission sequence that is already grouped by cardinality.

    SIZE keeps the sequence. SIZE_THEN_LEX buffers one cardinality at a time and LEX
    buffers everything, so both give up the delay bound of the underlying strategy.
    """
    if order is None or order is OrderKind.SIZE:
        yield from source
        return
    key = team_sort_key(order)
    if order is OrderKind.LEX:
        yield from sorted(source, key=key)
        return
    for _, level in groupby(source, key=len):
        yield from sorted(level, key=key)


def enumerate_solutions(
    reduced: ReducedFormula, config: EnumConfig, counter: StepCounter | None = None
) -> SolutionStream:
    """Return the stream of satisfying teams for one reduced conjunction."""
    counter = StepCounter() if counter is None else counter
    producer = build_producer(reduced, config, counter)
    return SolutionStream(reordered(producer, config.order), counter, producer)

"""Pull interface over the teams of an enumeration, with per-item delays."""

from collections.abc import Iterable, Iterator

from team_enum.team.cost import StepCounter
from team_enum.team.team import Team


class SolutionStream(Iterator[Team]):
    """
    Wrap a team source and measure the steps spent on each item.

    The counter must be the one the source ticks. After every item ``delay`` holds
    the steps spent since the previous item; after exhaustion ``tail`` holds the
    steps spent after the last item.
    """

    def __init__(
        self,
        source: Iterable[Team],
        counter: StepCounter,
        producer: object | None = None,
    ) -> None:
        """Start the stream without pulling from the source."""
        self._source = iter(source)
        self.counter = counter
        counter.reset()
        self.producer = producer
        self.delay = 0
        self.tail = 0
        self.count = 0
        self.exhausted = False

    def __iter__(self) -> "SolutionStream":
        """Return the stream itself."""
        return self

    def __next__(self) -> Team:
        """Pull the next team and record its delay."""
        if self.exhausted:
            raise StopIteration
        try:
            team = next(self._source)
        except StopIteration:
            self.exhausted = True
            self.tail = self.counter.reset()
            raise
        self.delay = self.counter.reset()
        self.count += 1
        return team

"""
Machine-independent step accounting.

One step is one assignment comparison, one bit-vector addition, one trie edge
traversal or one dependence atom evaluation. Metered operations take a counter and
tick it; the shared ``NO_STEPS`` counter discards every tick.
"""


class StepCounter:
    """Count elementary steps since the last reset and over the whole lifetime."""

    __slots__ = ("steps", "total")

    def __init__(self) -> None:
        """Start both tallies at zero."""
        self.steps = 0
        self.total = 0

    def tick(self, count: int = 1) -> None:
        """Record ``count`` elementary steps."""
        self.steps += count
        self.total += count

    def reset(self) -> int:
        """Zero the per-item tally and return its previous value."""
        steps, self.steps = self.steps, 0
        return steps


class NullCounter(StepCounter):
    """A counter that ignores every tick."""

    __slots__ = ()

    def tick(self, count: int = 1) -> None:
        """Discard the steps."""


NO_STEPS = NullCounter()

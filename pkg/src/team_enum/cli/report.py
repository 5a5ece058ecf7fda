"""Counts and delays gathered while a stream is consumed."""

import logging
from dataclasses import dataclass, field
from statistics import median

from team_enum.team.assignment import Assignment
from team_enum.team.team import Team

logger = logging.getLogger(__name__)


@dataclass
class RunReport:
    """
    Summary of one enumeration run.

    Attributes
    ----------
    width : int | None
        Free variables of the reduced formula. None for merged disjunctions, which
        have no single assignment space, so no seed counts are kept.
    zero : Assignment | None
        The reduced zero assignment written over the original variables. Emitted
        teams containing it are the seeds of their cardinality.
    counts : dict[int, int]
        Emitted teams per cardinality.
    seeds : dict[int, int]
        Emitted teams containing ``zero`` per cardinality.
    delays : dict[int, list[int]]
        Step delay of every emission, grouped by cardinality.
    peak_assignments : int | None
        Peak retained assignments of a polynomial-space run.
    wall_time : float
        Seconds spent consuming the stream.

    """

    width: int | None = None
    zero: Assignment | None = None
    counts: dict[int, int] = field(default_factory=dict)
    seeds: dict[int, int] = field(default_factory=dict)
    delays: dict[int, list[int]] = field(default_factory=dict)
    peak_assignments: int | None = None
    wall_time: float = 0.0

    @property
    def total(self) -> int:
        """Return the number of emitted teams."""
        return sum(self.counts.values())

    def record(self, team: Team, delay: int) -> None:
        """Account for one emitted team."""
        level = len(team)
        self.counts[level] = self.counts.get(level, 0) + 1
        self.delays.setdefault(level, []).append(delay)
        if self.zero is not None and self.zero in team:
            self.seeds[level] = self.seeds.get(level, 0) + 1

    def ratio_holds(self, level: int) -> bool:
        """Check ``c_k * k == c_k0 * 2^n``; every orbit has ``2^n / |stab|`` teams."""
        if self.width is None:
            return True
        count = self.counts.get(level, 0)
        return count * level == self.seeds.get(level, 0) << self.width

    def lines(self) -> list[str]:
        """Render the report as tab separated lines."""
        rows = ["level\tc_k\tc_k0\tratio"]
        for level in sorted(self.counts):
            count = self.counts[level]
            if self.width is None:
                rows.append(f"{level}\t{count}\t-\t-")
                continue
            seeds = self.seeds.get(level, 0)
            if not self.ratio_holds(level):
                logger.error(
                    "level %d: c_k * k = %d but c_k0 * 2^n = %d",
                    level,
                    count * level,
                    seeds << self.width,
                )
            ratio = f"{count / seeds:.4f}" if seeds else "-"
            rows.append(f"{level}\t{count}\t{seeds}\t{ratio}")
        rows.append(f"total\t{self.total}")
        for level in sorted(self.delays):
            steps = self.delays[level]
            rows.append(
                f"delay\t{level}\t{min(steps)}\t{median(steps):g}\t{max(steps)}"
            )
        if self.peak_assignments is not None:
            rows.append(f"peak_assignments\t{self.peak_assignments}")
        rows.append(f"wall_time\t{self.wall_time:.6f}")
        return rows

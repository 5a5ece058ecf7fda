"""Stabilizer basis of a team under the flipping-bits action."""

from dataclasses import dataclass

from team_enum.team.assignment import Assignment
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.exceptions import MissingZeroError
from team_enum.team.team import Team


@dataclass(frozen=True, slots=True)
class StabilizerBasis:
    """
    A basis of the stabilizer whose elements have pairwise distinct last ones.

    Attributes
    ----------
    basis : tuple[Assignment, ...]
        Non-zero shifts fixing the team, sorted by their last-one position.
    last_set : frozenset[int]
        The last-one positions of the basis elements.
    complement_positions : tuple[int, ...]
        The positions ``1..n`` outside ``last_set``, ascending. The standard vectors
        at these positions span a complement of the stabilizer.

    """

    basis: tuple[Assignment, ...]
    last_set: frozenset[int]
    complement_positions: tuple[int, ...]


def compute_stabilizer_basis(
    team: Team, counter: StepCounter = NO_STEPS
) -> StabilizerBasis:
    """
    Compute a distinct-last basis of the stabilizer of a team containing zero.

    Parameters
    ----------
    team : Team
        A team with the zero assignment as a member.
    counter : StepCounter
        Meter for additions and membership comparisons.

    Returns
    -------
    StabilizerBasis

    Raises
    ------
    MissingZeroError
        If the zero assignment is not a member.

    A shift fixing the team maps zero onto a member, so only members need testing.
    Members are scanned in ascending order; a member whose last-one position is
    already covered is skipped, otherwise it joins the basis when ``s + r`` is a
    member for every member ``r``. Greedy insertion yields a maximal subset with
    distinct last positions, and such a subset is a basis of the stabilizer.

    """
    if not team.contains_zero:
        raise MissingZeroError(team)
    by_last: dict[int, Assignment] = {}
    for s in team.members[1:]:
        position = s.last_one_position()
        if position in by_last:
            continue
        stabilizes = True
        for r in team.members:
            counter.tick()
            if not team.has_member(s + r, counter):
                stabilizes = False
                break
        if stabilizes:
            by_last[position] = s

    complement = tuple(i for i in range(1, team.width + 1) if i not in by_last)
    return StabilizerBasis(
        basis=tuple(by_last[i] for i in sorted(by_last)),
        last_set=frozenset(by_last),
        complement_positions=complement,
    )

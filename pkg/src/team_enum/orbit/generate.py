"""Duplicate-free enumeration of the orbit of a team."""

import logging
from collections.abc import Iterable, Iterator

from team_enum.team.assignment import Assignment
from team_enum.team.cost import NO_STEPS, StepCounter
from team_enum.team.exceptions import EmptyTeamError
from team_enum.team.team import Team

from .stabilizer import compute_stabilizer_basis

logger = logging.getLogger(__name__)


def _spread(combination: int, positions: tuple[int, ...], width: int) -> Assignment:
    """Map counter bits onto positions, most significant bit to the first position."""
    bits = 0
    m = len(positions)
    for j, position in enumerate(positions):
        if (combination >> (m - 1 - j)) & 1:
            bits |= 1 << (width - position)
    return Assignment(bits, width)


def enumerate_orbit(team: Team, counter: StepCounter = NO_STEPS) -> Iterator[Team]:
    """
    Yield every team of the orbit of ``team`` exactly once.

    Parameters
    ----------
    team : Team
        A non-empty team. A team without the zero assignment is first shifted by its
        smallest member, which lands in the same orbit.
    counter : StepCounter
        Meter for the stabilizer precomputation, the shifts and the sorts.

    Yields
    ------
    Team
        The shifts ``s + T`` for ``s`` in the span of the standard vectors at the
        complement positions, by binary counting over those positions. The zero
        shift comes first, so the normalised seed itself is the first team.

    Raises
    ------
    EmptyTeamError
        If the team is empty.

    """
    if not team.members:
        raise EmptyTeamError("enumerate_orbit")
    if not team.contains_zero:
        team = team.shift(team.members[0], counter)
    basis = compute_stabilizer_basis(team, counter)
    positions = basis.complement_positions
    for combination in range(1 << len(positions)):
        counter.tick()
        yield team.shift(_spread(combination, positions, team.width), counter)


def orbit_size(team: Team) -> int:
    """Return ``2^n / |stabilizer|`` by the orbit-stabiliser theorem."""
    if not team.members:
        raise EmptyTeamError("orbit_size")
    if not team.contains_zero:
        team = team.shift(team.members[0])
    basis = compute_stabilizer_basis(team)
    return 1 << len(basis.complement_positions)


def count_orbits(teams: Iterable[Team], width: int) -> int:
    """
    Count orbits by averaging fixed points over the whole group.

    The collection must be closed under every shift, as the satisfying teams of one
    cardinality are. Each of the ``2^n`` shifts contributes the number of teams it
    fixes; the sum divided by ``2^n`` is the number of orbits.
    """
    pool = set(teams)
    fixed = 0
    for bits in range(1 << width):
        vector = Assignment(bits, width)
        fixed += sum(1 for team in pool if team.shift(vector) == team)
    orbits, remainder = divmod(fixed, 1 << width)
    if remainder:
        logger.warning("teams are not closed under shifts; orbit count is rounded")
    return orbits

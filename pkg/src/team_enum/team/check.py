"""
Model checking reduced formulas through 2-coherence.

A conjunction of dependence atoms holds on a team exactly when it holds on every
two-element subteam, so checking all pairs decides satisfaction in ``O(k^2 |rf|)``.
For a pair ``{s, t}`` and an atom with masks (P, Q) the atom fails exactly when
``s + t`` is zero on P and non-zero on Q.
"""

from team_enum.formula.exceptions import ContradictoryFormulaError
from team_enum.formula.reduce import ReducedFormula

from .assignment import Assignment
from .cost import NO_STEPS, StepCounter
from .exceptions import WidthMismatchError, ZeroAssignmentError
from .team import Team


def _difference_satisfies(
    reduced: ReducedFormula, difference: int, counter: StepCounter
) -> bool:
    for p_mask, q_mask in reduced.atom_masks:
        counter.tick()
        if not difference & p_mask and difference & q_mask:
            return False
    return True


def model_check(
    reduced: ReducedFormula, team: Team, counter: StepCounter = NO_STEPS
) -> bool:
    """Return True if the team satisfies every atom on every pair of members."""
    if reduced.contradictory:
        raise ContradictoryFormulaError("model_check")
    if team.width != reduced.width:
        raise WidthMismatchError(reduced.width, team.width)
    if not reduced.atoms:
        return True
    members = team.members
    for i, s in enumerate(members):
        for t in members[i + 1 :]:
            counter.tick()
            if not _difference_satisfies(reduced, s.bits ^ t.bits, counter):
                return False
    return True


def pair_satisfies(
    reduced: ReducedFormula, assignment: Assignment, counter: StepCounter = NO_STEPS
) -> bool:
    """
    Return True if ``{0, s}`` satisfies the reduced formula.

    This is the classical shortcut ``s |= (OR of P) or (AND of not Q)`` per atom,
    evaluated in ``O(|rf|)``.
    """
    if assignment.width != reduced.width:
        raise WidthMismatchError(reduced.width, assignment.width)
    if assignment.is_zero:
        raise ZeroAssignmentError("pair_satisfies")
    return _difference_satisfies(reduced, assignment.bits, counter)

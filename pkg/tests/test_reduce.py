"""Unit tests for the reduction to dependence atoms and team expansion."""

import pytest

from team_enum.formula.exceptions import (
    ContradictoryFormulaError,
    LiteralConflictError,
)
from team_enum.formula.parser import parse_formula
from team_enum.formula.reduce import DepAtom, expand_team, reduce, restrict_team
from team_enum.formula.semantics import satisfies
from team_enum.team.check import model_check
from team_enum.team.exceptions import WidthMismatchError
from team_enum.team.team import Team
from tests.oracle import all_teams, random_suite, team

FORCED_EXAMPLE = "x3 & dep(x1; x2, x3) & dep(x4; x2, x3)"


def test_reduce_example() -> None:
    """The positive literal leaves both atoms with a single target."""
    reduced = reduce(parse_formula(FORCED_EXAMPLE))
    assert reduced.forced_true == {"x3"}
    assert reduced.forced_false == frozenset()
    assert reduced.atoms == (DepAtom(("x1",), ("x2",)), DepAtom(("x4",), ("x2",)))
    assert reduced.free_vars == ("x1", "x2", "x4")
    assert not reduced.contradictory
    assert reduced.size == 3 + 4


def test_reduce_contradictions() -> None:
    """Opposite literals and the constant 0 leave no non-empty team."""
    assert reduce(parse_formula("x1 & !x1")).contradictory
    assert reduce(parse_formula("dep(x1;x2) & 0")).contradictory
    assert not reduce(parse_formula("x1 & !x2")).contradictory


def test_reduce_drops_trivial_parts() -> None:
    """Constant 1 disappears and so does an atom whose targets are all forced."""
    reduced = reduce(parse_formula("dep(x1;x2) & 1"))
    assert reduced.atoms == (DepAtom(("x1",), ("x2",)),)
    reduced = reduce(parse_formula("!x2 & dep(x1;x2)"))
    assert reduced.atoms == ()
    assert reduced.free_vars == ("x1",)
    assert reduced.size == 1


def test_reduce_deduplicates_atoms() -> None:
    """Atoms equal after removing forced variables are kept once."""
    reduced = reduce(parse_formula("x3 & dep(x1;x2) & dep(x1,x3;x2) & dep(;x2)"))
    assert reduced.atoms == (DepAtom((), ("x2",)), DepAtom(("x1",), ("x2",)))


def test_expand_example() -> None:
    """Forced values are written back at their positions in the header order."""
    reduced = reduce(parse_formula("vars: x1,x2,x3,x4; " + FORCED_EXAMPLE))
    assert expand_team(reduced, team("000,001")) == team("0010,0011")
    reduced = reduce(parse_formula(FORCED_EXAMPLE))
    assert expand_team(reduced, team("000,001")) == team("1000,1001")


def test_expand_identity_and_errors() -> None:
    """Without literals expansion is the identity."""
    reduced = reduce(parse_formula("dep(x1;x2)"))
    t = team("00,11")
    assert expand_team(reduced, t) == t
    with pytest.raises(WidthMismatchError):
        expand_team(reduced, team("000"))
    with pytest.raises(ContradictoryFormulaError):
        expand_team(reduce(parse_formula("x1 & !x1")), Team.empty(0))


def test_restrict_checks_literals() -> None:
    """Projection keeps the free positions and refuses broken literals."""
    reduced = reduce(parse_formula(FORCED_EXAMPLE))
    assert restrict_team(reduced, team("1000,1001")) == team("000,001")
    with pytest.raises(LiteralConflictError, match="'x3' is forced to 1"):
        restrict_team(reduced, team("1000,0001"))
    negative = reduce(parse_formula("vars: x1,x2; !x1 & dep(x1;x2)"))
    assert restrict_team(negative, team("00,01")) == team("0,1")
    with pytest.raises(LiteralConflictError, match="'x1' is forced to 0"):
        restrict_team(negative, team("10"))


def test_to_formula() -> None:
    """The reduced formula prints as its atom conjunction over the free variables."""
    reduced = reduce(parse_formula(FORCED_EXAMPLE))
    f = reduced.to_formula()
    assert f.variable_order == ("x1", "x2", "x4")
    assert reduce(f).atoms == reduced.atoms
    assert reduce(parse_formula("x1")).to_formula().variable_order == ()


def _uniform(team_: Team, positions: list[int], value: int) -> bool:
    return all(s.bit(i) == value for s in team_ for i in positions)


@pytest.mark.parametrize("text", list(random_suite(60)))
def test_reduction_soundness(text: str) -> None:
    """Satisfaction of the formula matches forced values plus the atom check."""
    formula = parse_formula(text)
    reduced = reduce(formula)
    width = len(formula.variable_order)
    true_positions = [formula.position(x) for x in reduced.forced_true]
    false_positions = [formula.position(x) for x in reduced.forced_false]
    for t in all_teams(width, 1 << width if width <= 3 else 3):
        expected = satisfies(formula, t)
        uniform = _uniform(t, true_positions, 1) and _uniform(t, false_positions, 0)
        if reduced.contradictory or not uniform:
            assert not expected
            continue
        restricted = restrict_team(reduced, t)
        assert len(restricted) == len(t)
        assert model_check(reduced, restricted) == expected
        if expected:
            assert expand_team(reduced, restricted) == t

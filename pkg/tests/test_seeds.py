"""Unit tests for the incremental seed construction."""

from random import Random

import pytest

from team_enum.formula.exceptions import ContradictoryFormulaError
from team_enum.formula.parser import parse_formula
from team_enum.formula.reduce import ReducedFormula, reduce
from team_enum.seeds.exceptions import LevelCompleteError, LevelIncompleteError
from team_enum.seeds.index import SeedIndex
from team_enum.seeds.stepper import (
    SeedStepper,
    StepResult,
    build_pair_seeds,
    seeds_at_level,
)
from team_enum.team.assignment import Assignment
from team_enum.team.team import Team
from tests.oracle import (
    ROBOT,
    all_teams,
    oracle_solutions,
    random_suite,
    teams,
)


def _pairs(index: SeedIndex) -> list[str]:
    found = index.extensions(Team.singleton(Assignment.first(index.width)))
    return [] if found is None else [str(x) for x in found]


def _layout(index: SeedIndex) -> list[tuple[str, list[str]]]:
    return [(str(e.team), [str(x) for x in e.extensions]) for e in index.entries()]


def _zero_levels(reduced: ReducedFormula) -> dict[int, set[Team]]:
    sizes = range(1, (1 << reduced.width) + 1)
    levels: dict[int, set[Team]] = {k: set() for k in sizes}
    for t in oracle_solutions(reduced.to_formula()):
        if t.contains_zero:
            levels[len(t)].add(t)
    return levels


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        (ROBOT, ["010", "100", "110", "111"]),
        ("vars: a, b; 1", ["01", "10", "11"]),
        ("dep(x1;x2)", ["10", "11"]),
    ],
)
def test_pair_seeds(text: str, expected: list[str]) -> None:
    """Level 2 keeps every ``s`` whose pair with zero satisfies the atoms."""
    index = build_pair_seeds(reduce(parse_formula(text)))
    assert _pairs(index) == expected


def test_robot_levels() -> None:
    """Levels three to five of the two-atom example."""
    reduced = reduce(parse_formula(ROBOT))
    stepper = SeedStepper(reduced)
    stepper.finish()
    assert len(stepper.seeds()) == 4

    stepper.next_level()
    assert stepper.finish() is StepResult.LEVEL_COMPLETE
    assert set(stepper.seeds()) == teams("000,010,100", "000,100,110", "000,010,110")
    assert _layout(stepper.index()) == [
        ("000,010", ["100", "110"]),
        ("000,100", ["110"]),
    ]
    assert stepper.iterations == 6

    stepper.next_level()
    stepper.finish()
    assert set(stepper.seeds()) == teams("000,010,100,110")

    stepper.next_level()
    stepper.finish()
    assert len(stepper.seeds()) == 0
    assert stepper.level == 5


def test_seeds_at_level() -> None:
    """Seeds can be requested for any cardinality."""
    reduced = reduce(parse_formula(ROBOT))
    assert set(seeds_at_level(reduced, 1)) == teams("000")
    assert len(seeds_at_level(reduced, 2)) == 4
    assert set(seeds_at_level(reduced, 4)) == teams("000,010,100,110")
    assert len(seeds_at_level(reduced, 5)) == 0
    assert len(seeds_at_level(reduced, 7)) == 0
    assert set(seeds_at_level(reduce(parse_formula("vars: x; 1")), 2)) == teams("0,1")


def test_contradictory_formula() -> None:
    """A contradictory formula has no seeds at any level."""
    reduced = reduce(parse_formula("dep(x1;x2) & 0"))
    with pytest.raises(ContradictoryFormulaError):
        SeedStepper(reduced)
    for level in range(1, 5):
        assert len(seeds_at_level(reduced, level)) == 0


def test_level_state_errors() -> None:
    """Finished levels cannot advance and unfinished ones cannot be read."""
    reduced = reduce(parse_formula(ROBOT))
    stepper = SeedStepper(reduced)
    assert stepper.advance(1) is StepResult.PROGRESSED
    with pytest.raises(LevelIncompleteError):
        stepper.seeds()
    with pytest.raises(LevelIncompleteError):
        stepper.index()
    with pytest.raises(LevelIncompleteError):
        stepper.next_level()
    assert stepper.advance(100) is StepResult.LEVEL_COMPLETE
    assert stepper.complete
    with pytest.raises(LevelCompleteError):
        stepper.advance(1)


def test_zero_width() -> None:
    """With every variable forced only the singleton seed exists."""
    reduced = reduce(parse_formula("x1 & !x2"))
    stepper = SeedStepper(reduced)
    assert stepper.complete
    assert len(stepper.seeds()) == 0
    assert len(seeds_at_level(reduced, 1)) == 1


def _run(reduced: ReducedFormula, level: int, budgets: list[int]) -> SeedStepper:
    stepper = SeedStepper(reduced)
    while True:
        position = 0
        while not stepper.complete:
            stepper.advance(budgets[position % len(budgets)])
            position += 1
        if stepper.level == level or not len(stepper.seeds()):
            return stepper
        stepper.next_level()


@pytest.mark.parametrize("text", list(random_suite(40)))
def test_budget_is_oblivious(text: str) -> None:
    """Any split of the work builds the same index."""
    reduced = reduce(parse_formula(text))
    if reduced.contradictory:
        return
    rng = Random(text)
    level = min(4, 1 << reduced.width)
    reference = _layout(_run(reduced, level, [10**6]).index())
    for budgets in ([1], [2, 3], [rng.randint(1, 5) for _ in range(7)]):
        assert _layout(_run(reduced, level, budgets).index()) == reference


@pytest.mark.parametrize("text", list(random_suite(80)))
def test_seeds_match_oracle(text: str) -> None:
    """Every level holds exactly the zero-containing satisfying teams."""
    reduced = reduce(parse_formula(text))
    if reduced.contradictory:
        return
    limit = 1 << reduced.width
    by_level = _zero_levels(reduced)
    stepper = SeedStepper(reduced)
    previous = 1
    for level in range(2, limit + 1):
        stepper.finish()
        expected = by_level[level]
        assert set(stepper.seeds()) == expected
        assert stepper.iterations <= previous << reduced.width
        previous = len(expected)
        if level < limit:
            stepper.next_level()


@pytest.mark.parametrize("text", ["vars: a,b,c; 1", ROBOT, "dep(a,b;c) & dep(c;a)"])
def test_decomposition(text: str) -> None:
    """A zero team satisfies iff its two reducts and the top pair sum do."""
    reduced = reduce(parse_formula(text))
    width = reduced.width
    by_level = _zero_levels(reduced)
    for k in range(3, (1 << width) + 1):
        for t in all_teams(width, k):
            if len(t) != k or not t.contains_zero:
                continue
            members = t.members
            first_reduct = Team(members[:-1], width)
            second_reduct = Team((*members[:-2], members[-1]), width)
            pair = Team.of([members[0], members[-2] + members[-1]], width)
            criterion = (
                first_reduct in by_level[k - 1]
                and second_reduct in by_level[k - 1]
                and pair in by_level[2]
            )
            assert (t in by_level[k]) == criterion, str(t)

"""Unit tests for the formula parser and pretty-printer."""

from random import Random

import pytest

from team_enum.formula.exceptions import (
    DisjunctionError,
    DuplicateVariableError,
    FamilySizeError,
    FormulaSyntaxError,
    UnknownVariableError,
)
from team_enum.formula.family import chain_formula, random_formula
from team_enum.formula.nodes import And, Const0, Const1, Dep, NegVar, Var
from team_enum.formula.parser import parse_disjunction, parse_formula
from team_enum.formula.printer import format_disjunction, format_formula


def test_single_atom() -> None:
    """A lone atom keeps its variables in textual order."""
    f = parse_formula("dep(x1;x2)")
    assert f.root == Dep(("x1",), ("x2",))
    assert f.variable_order == ("x1", "x2")


def test_first_occurrence_order() -> None:
    """Without a header the variables are ordered by first occurrence."""
    f = parse_formula("x3 & dep(x1; x2, x3) & dep(x4; x2, x3)")
    assert f.variable_order == ("x3", "x1", "x2", "x4")
    assert list(f.conjuncts()) == [
        Var("x3"),
        Dep(("x1",), ("x2", "x3")),
        Dep(("x4",), ("x2", "x3")),
    ]


def test_header_order() -> None:
    """The header fixes the bit layout, including unused variables."""
    f = parse_formula("vars: a, b, c; dep(c; a)")
    assert f.variable_order == ("a", "b", "c")
    assert f.position("c") == 3


def test_literals_and_constants() -> None:
    """Negation, constants and nested conjunctions are all terms."""
    f = parse_formula("!x & 1 & 0 & y")
    assert f.root == And(And(And(NegVar("x"), Const1()), Const0()), Var("y"))


def test_space_separated_and_empty_lists() -> None:
    """Variable lists may use spaces and P may be empty."""
    assert parse_formula("dep(a b; c)").root == Dep(("a", "b"), ("c",))
    assert parse_formula("dep(; c)").root == Dep((), ("c",))


@pytest.mark.parametrize("text", ["dep(x1 x2)", "x1 &", "dep(x1;x2", "x1 | x2", ""])
def test_syntax_errors(text: str) -> None:
    """Malformed text reports a position."""
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert isinstance(info.value.line, int)
    assert isinstance(info.value.column, int)


def test_duplicate_variable() -> None:
    """A variable may appear only once per list."""
    with pytest.raises(DuplicateVariableError):
        parse_formula("dep(x1, x1; x2)")
    with pytest.raises(DuplicateVariableError):
        parse_formula("vars: a, a; a")


def test_unknown_variable() -> None:
    """A header must declare every used variable."""
    with pytest.raises(UnknownVariableError):
        parse_formula("vars: a; dep(a; b)")


def test_disjunction() -> None:
    """Disjuncts share one variable order."""
    formulas = parse_disjunction(r"x1 \/ dep(x2; x1)")
    assert len(formulas) == 2
    assert formulas[0].variable_order == formulas[1].variable_order == ("x1", "x2")
    with pytest.raises(DisjunctionError):
        parse_formula(r"x1 \/ !x1")


@pytest.mark.parametrize(
    "text",
    [
        "dep(x1;x2)",
        "x3 & dep(x1; x2, x3) & dep(x4; x2, x3)",
        "vars: a, b, c; !a & dep(; b) & 1",
        "0",
    ],
)
def test_round_trip(text: str) -> None:
    """Printing and parsing again gives the same formula."""
    f = parse_formula(text)
    printed = format_formula(f)
    assert parse_formula(printed) == f
    assert format_formula(parse_formula(printed)) == printed


def test_disjunction_round_trip() -> None:
    """A printed disjunction parses back to the same disjuncts."""
    formulas = parse_disjunction(r"vars: x1, x2; x1 \/ dep(x2; x1)")
    assert parse_disjunction(format_disjunction(formulas)) == formulas


@pytest.mark.parametrize(
    ("k", "expected"),
    [
        (2, "dep(x1;x2)"),
        (3, "dep(x1;x3) & dep(x2;x3)"),
        (4, "dep(x1;x4) & dep(x2;x4) & dep(x3;x4)"),
    ],
)
def test_chain_family(k: int, expected: str) -> None:
    """The chain family has k - 1 atoms with the last variable as target."""
    assert chain_formula(k) == expected
    assert len(list(parse_formula(expected).conjuncts())) == k - 1


def test_family_sizes() -> None:
    """Families reject sizes below their minimum."""
    with pytest.raises(FamilySizeError):
        chain_formula(1)
    with pytest.raises(FamilySizeError):
        random_formula(Random(0), 0, 1)


def test_random_family_parses() -> None:
    """Random formulas are reproducible and well formed."""
    first = [random_formula(Random(5), 4, 3, 1) for _ in range(2)]
    assert first[0] == first[1]
    f = parse_formula(first[0])
    assert f.variable_order == ("x1", "x2", "x3", "x4")

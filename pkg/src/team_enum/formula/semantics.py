"""Reference team semantics, evaluated directly on the formula tree."""

from itertools import product

from team_enum.team.exceptions import WidthMismatchError
from team_enum.team.team import Team

from .nodes import And, Const0, Const1, Dep, Formula, NegVar, Node, Var


def _agree(formula: Formula, team: Team, node: Dep) -> bool:
    p = [formula.position(x) for x in node.p]
    q = [formula.position(x) for x in node.q]
    for s, t in product(team, repeat=2):
        same_p = all(s.bit(i) == t.bit(i) for i in p)
        if same_p and any(s.bit(i) != t.bit(i) for i in q):
            return False
    return True


def _satisfies(formula: Formula, team: Team, node: Node) -> bool:
    match node:
        case Var(name):
            return all(s.bit(formula.position(name)) == 1 for s in team)
        case NegVar(name):
            return all(s.bit(formula.position(name)) == 0 for s in team)
        case Const0():
            return len(team) == 0
        case Const1():
            return True
        case And(left, right):
            return _satisfies(formula, team, left) and _satisfies(formula, team, right)
        case Dep():
            return _agree(formula, team, node)


def satisfies(formula: Formula, team: Team) -> bool:
    """
    Decide ``T |= formula`` by the inductive satisfaction definition.

    A literal holds when every member gives the variable the literal's value, 0 holds
    on the empty team only, 1 always holds, a conjunction holds when both sides do
    and ``dep(P; Q)`` holds when any two members agreeing on P agree on Q. Every
    pair of members is inspected, so this is slow and serves as an oracle.
    """
    if team.width != len(formula.variable_order):
        raise WidthMismatchError(len(formula.variable_order), team.width)
    return _satisfies(formula, team, formula.root)

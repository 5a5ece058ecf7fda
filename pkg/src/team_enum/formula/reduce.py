"""
Reduction of a formula to a conjunction of dependence atoms.

Literals force a variable to one value across the whole team, so they are removed
from the formula and remembered as the forced sets I (true) and J (false). What
remains is a conjunction of dependence atoms over the free variables; satisfying
teams of the original formula are the satisfying teams of the reduced one with the
forced values written back in.
"""

from dataclasses import dataclass
from functools import cached_property

from team_enum.team.assignment import Assignment
from team_enum.team.exceptions import WidthMismatchError
from team_enum.team.team import Team

from .exceptions import ContradictoryFormulaError, LiteralConflictError
from .nodes import And, Const0, Const1, Dep, Formula, NegVar, Node, Var

AtomMask = tuple[int, int]


@dataclass(frozen=True, slots=True, order=True)
class DepAtom:
    """A dependence atom over free variables, both lists in variable order."""

    p: tuple[str, ...]
    q: tuple[str, ...]


@dataclass(frozen=True)
class ReducedFormula:
    """A formula in reduced form: forced literals plus dependence atoms."""

    forced_true: frozenset[str]
    forced_false: frozenset[str]
    atoms: tuple[DepAtom, ...]
    free_vars: tuple[str, ...]
    contradictory: bool
    original_order: tuple[str, ...]

    @property
    def width(self) -> int:
        """Return the number of free variables, the width of reduced assignments."""
        return len(self.free_vars)

    @cached_property
    def atom_masks(self) -> tuple[AtomMask, ...]:
        """Return (P mask, Q mask) per atom over the free variable bit layout."""
        return tuple((self._mask(atom.p), self._mask(atom.q)) for atom in self.atoms)

    @cached_property
    def size(self) -> int:
        """Return ``|rf|``: free variables plus the atom list lengths, at least 1."""
        total = self.width + sum(len(a.p) + len(a.q) for a in self.atoms)
        return max(1, total)

    @cached_property
    def _free_positions(self) -> dict[str, int]:
        return {name: i + 1 for i, name in enumerate(self.free_vars)}

    def _mask(self, names: tuple[str, ...]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << (self.width - self._free_positions[name])
        return mask

    def expand_assignment(self, assignment: Assignment) -> Assignment:
        """Write the forced values back into a free-variable assignment."""
        if assignment.width != self.width:
            raise WidthMismatchError(self.width, assignment.width)
        bits = 0
        for name in self.original_order:
            bits <<= 1
            if name in self.forced_true:
                bits |= 1
            elif name not in self.forced_false:
                bits |= assignment.bit(self._free_positions[name])
        return Assignment(bits, len(self.original_order))

    def restrict_assignment(self, assignment: Assignment) -> Assignment:
        """Project an assignment over the original order onto the free variables."""
        if assignment.width != len(self.original_order):
            raise WidthMismatchError(len(self.original_order), assignment.width)
        bits = 0
        for position, name in enumerate(self.original_order, start=1):
            value = assignment.bit(position)
            if name in self._free_positions:
                bits = (bits << 1) | value
            elif name in self.forced_true and value != 1:
                raise LiteralConflictError(name, 1)
            elif name in self.forced_false and value != 0:
                raise LiteralConflictError(name, 0)
        return Assignment(bits, self.width)

    def expand_team(self, team: Team) -> Team:
        """Return the team over the original variables; see ``expand_team``."""
        if self.contradictory:
            raise ContradictoryFormulaError("expand_team")
        if team.width != self.width:
            raise WidthMismatchError(self.width, team.width)
        # Inserting constant bits preserves the order of the members.
        members = tuple(self.expand_assignment(x) for x in team.members)
        return Team(members, len(self.original_order))

    def to_formula(self) -> Formula:
        """Return the atom conjunction as a formula over the free variables."""
        terms: list[Node] = [Dep(atom.p, atom.q) for atom in self.atoms]
        root: Node = Const1()
        if terms:
            root = terms[0]
            for term in terms[1:]:
                root = And(root, term)
        return Formula(root, self.free_vars)


def reduce(formula: Formula) -> ReducedFormula:
    """
    Reduce a formula to forced literals and a conjunction of dependence atoms.

    Parameters
    ----------
    formula : Formula
        A parsed conjunction.

    Returns
    -------
    ReducedFormula
        Positive literals form I, negative literals form J. Each atom ``dep(P; Q)``
        becomes ``dep(P - (I + J); Q - (I + J))`` and is dropped when its Q part is
        empty. Constant 1 conjuncts vanish; constant 0 or ``I & J != {}`` marks the
        formula as contradictory.

    """
    forced_true: set[str] = set()
    forced_false: set[str] = set()
    deps: list[Dep] = []
    contradictory = False
    for term in formula.conjuncts():
        match term:
            case Var(name):
                forced_true.add(name)
            case NegVar(name):
                forced_false.add(name)
            case Const0():
                contradictory = True
            case Dep():
                deps.append(term)
            case _:
                pass

    forced = forced_true | forced_false
    free_vars = tuple(x for x in formula.variable_order if x not in forced)
    atoms: set[DepAtom] = set()
    for dep in deps:
        q = tuple(x for x in free_vars if x in dep.q)
        if q:
            atoms.add(DepAtom(tuple(x for x in free_vars if x in dep.p), q))

    position = {name: i for i, name in enumerate(free_vars)}
    ordered = sorted(
        atoms,
        key=lambda a: ([position[x] for x in a.p], [position[x] for x in a.q]),
    )
    return ReducedFormula(
        forced_true=frozenset(forced_true),
        forced_false=frozenset(forced_false),
        atoms=tuple(ordered),
        free_vars=free_vars,
        contradictory=contradictory or bool(forced_true & forced_false),
        original_order=formula.variable_order,
    )


def expand_team(reduced: ReducedFormula, team: Team) -> Team:
    """Extend a team over the free variables by the forced literal values."""
    return reduced.expand_team(team)


def restrict_team(reduced: ReducedFormula, team: Team) -> Team:
    """
    Project a team over the original variables onto the free variables.

    Raises ``LiteralConflictError`` when a member breaks a forced literal.
    """
    return Team.of((reduced.restrict_assignment(x) for x in team), reduced.width)

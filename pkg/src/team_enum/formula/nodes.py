"""Abstract syntax tree of Poor Man's propositional dependence logic."""

from collections.abc import Iterator
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Var:
    """Positive literal ``x``."""

    name: str


@dataclass(frozen=True, slots=True)
class NegVar:
    """Negative literal ``!x``."""

    name: str


@dataclass(frozen=True, slots=True)
class Const0:
    """The constant ``0``, satisfied by the empty team only."""


@dataclass(frozen=True, slots=True)
class Const1:
    """The constant ``1``, satisfied by every team."""


@dataclass(frozen=True, slots=True)
class And:
    """Conjunction of two subformulas."""

    left: "Node"
    right: "Node"


@dataclass(frozen=True, slots=True)
class Dep:
    """Dependence atom ``dep(P; Q)``: members agreeing on P agree on Q."""

    p: tuple[str, ...]
    q: tuple[str, ...]


Node = Var | NegVar | Const0 | Const1 | And | Dep


@dataclass(frozen=True, slots=True)
class Formula:
    """A formula tree together with the order that fixes the bit layout."""

    root: Node
    variable_order: tuple[str, ...]

    def conjuncts(self) -> Iterator[Node]:
        """Yield the non-conjunction nodes from left to right."""
        yield from conjuncts(self.root)

    def position(self, name: str) -> int:
        """Return the 1-based bit position of a variable."""
        return self.variable_order.index(name) + 1


def conjuncts(node: Node) -> Iterator[Node]:
    """Flatten nested conjunctions from left to right."""
    if isinstance(node, And):
        yield from conjuncts(node.left)
        yield from conjuncts(node.right)
    else:
        yield node


def variables(node: Node) -> Iterator[str]:
    """Yield variable occurrences in textual order."""
    for term in conjuncts(node):
        if isinstance(term, Var | NegVar):
            yield term.name
        elif isinstance(term, Dep):
            yield from term.p
            yield from term.q

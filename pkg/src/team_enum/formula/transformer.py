"""Class for transforming a formula parse tree into formula nodes."""

from dataclasses import dataclass
from functools import reduce
from typing import Any

from lark import Token, Transformer, v_args

from .exceptions import DuplicateVariableError
from .nodes import And, Const0, Const1, Dep, NegVar, Node, Var


@dataclass(frozen=True, slots=True)
class ParseResult:
    """The optional variable header and one root node per disjunct."""

    header: tuple[str, ...] | None
    disjuncts: tuple[Node, ...]


def unique_names(names: list[str], where: str) -> tuple[str, ...]:
    """Ensure a variable list holds no name twice."""
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateVariableError(name, where)
        seen.add(name)
    return tuple(names)


class FormulaTransformer(Transformer[Token, ParseResult]):
    """Formula parse tree transformer."""

    def start(self, children: list[Any]) -> ParseResult:
        """Combine the optional header and the disjuncts."""
        *header, disjuncts = children
        return ParseResult(header[0] if header else None, disjuncts)

    @v_args(inline=True)
    def header(self, _tag: Token, names: list[str]) -> tuple[str, ...]:
        """Variable order declaration."""
        return unique_names(names, "the 'vars:' header")

    @v_args(inline=True)
    def disjunction(self, *args: Node) -> tuple[Node, ...]:
        """OR, kept apart for merging."""
        return args

    @v_args(inline=True)
    def conjunction(self, *args: Node) -> Node:
        """AND."""
        return reduce(And, args)

    @v_args(inline=True)
    def var(self, name: Token) -> Var:
        """Positive literal."""
        return Var(str(name))

    @v_args(inline=True)
    def negvar(self, name: Token) -> NegVar:
        """Negative literal."""
        return NegVar(str(name))

    def const0(self, _: list[Token]) -> Const0:
        """Constant 0."""
        return Const0()

    def const1(self, _: list[Token]) -> Const1:
        """Constant 1."""
        return Const1()

    @v_args(inline=True)
    def dep(self, p: list[str], q: list[str]) -> Dep:
        """Dependence atom."""
        where = "a dep(P; Q) list"
        return Dep(unique_names(p, where), unique_names(q, where))

    def varlist(self, names: list[Token]) -> list[str]:
        """Variable names."""
        return [str(x) for x in names]

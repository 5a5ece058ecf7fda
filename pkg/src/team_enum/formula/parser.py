"""Class for parsing dependence logic formulas with Lark."""

from functools import cache

from lark import Lark, exceptions

from .exceptions import (
    DisjunctionError,
    FormulaError,
    FormulaSyntaxError,
    UnknownVariableError,
)
from .nodes import Formula, variables
from .transformer import FormulaTransformer, ParseResult

GRAMMAR = r"""
    start: header? disjunction

    header: VARS_HEADER varlist ";"
    disjunction: conjunction ("\\/" conjunction)*
    conjunction: term ("&" term)*

    ?term: VAR                                -> var
         | "!" VAR                            -> negvar
         | "0"                                -> const0
         | "1"                                -> const1
         | "dep" "(" varlist ";" varlist ")"  -> dep

    varlist: (VAR ","?)*

    VARS_HEADER.2: /vars\s*:/
    VAR: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class Parser:
    """Dependence logic formula parser."""

    def __init__(self) -> None:
        """Initialize the Lark parser with an inline transformer."""
        self._lark = Lark(GRAMMAR, parser="lalr", transformer=FormulaTransformer())

    def parse(self, text: str) -> list[Formula]:
        """
        Parse formula text into one formula per disjunct.

        Every disjunct shares the same variable order: the ``vars:`` header when
        present, otherwise the order of first occurrence across the whole text.
        """
        try:
            result = self._lark.parse(text)
        except exceptions.UnexpectedInput as e:
            raise FormulaSyntaxError(text, e.line, e.column) from e
        except exceptions.VisitError as e:
            if isinstance(e.orig_exc, FormulaError):
                raise e.orig_exc from e
            raise
        if not isinstance(result, ParseResult):
            msg = f"Parse result is of invalid type '{type(result)}'"
            raise TypeError(msg)

        names = (n for root in result.disjuncts for n in variables(root))
        used = list(dict.fromkeys(names))
        if result.header is None:
            order = tuple(used)
        else:
            order = result.header
            for name in used:
                if name not in order:
                    raise UnknownVariableError(name, order)
        return [Formula(root, order) for root in result.disjuncts]


@cache
def _parser() -> Parser:
    return Parser()


def parse_disjunction(text: str) -> list[Formula]:
    """Parse ``conj \\/ conj ...`` into formulas over one shared variable order."""
    return _parser().parse(text)


def parse_formula(text: str) -> Formula:
    """Parse a single conjunction of literals, constants and dependence atoms."""
    formulas = parse_disjunction(text)
    if len(formulas) != 1:
        raise DisjunctionError(len(formulas))
    return formulas[0]

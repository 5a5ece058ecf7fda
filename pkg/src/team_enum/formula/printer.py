"""Pretty-printer producing text the parser reads back to the same tree."""

from collections.abc import Sequence

from .nodes import And, Const0, Const1, Dep, Formula, NegVar, Node, Var


def format_node(node: Node) -> str:
    """Write a formula node in the input grammar."""
    match node:
        case Var(name):
            return name
        case NegVar(name):
            return f"!{name}"
        case Const0():
            return "0"
        case Const1():
            return "1"
        case And(left, right):
            return f"{format_node(left)} & {format_node(right)}"
        case Dep(p, q):
            return f"dep({', '.join(p)}; {', '.join(q)})"


def format_formula(formula: Formula) -> str:
    """Write a formula with a ``vars:`` header so the bit layout survives."""
    return format_disjunction([formula])


def format_disjunction(formulas: Sequence[Formula]) -> str:
    """Write formulas over one variable order as a single disjunction."""
    header = ", ".join(formulas[0].variable_order) if formulas else ""
    body = " \\/ ".join(format_node(f.root) for f in formulas)
    return f"vars: {header}; {body}"

"""Exceptions to throw when parsing and reducing formulas."""


class FormulaError(ValueError):
    """Base class for every formula input problem."""


class FormulaSyntaxError(FormulaError):
    """Flag when the formula text does not follow the grammar."""

    def __init__(self, text: str, line: int, column: int) -> None:
        """Pass message to ValueError exception."""
        self.line = line
        self.column = column
        msg = f"Syntax error at line {line}, column {column} in formula '{text}'"
        super().__init__(msg)


class DuplicateVariableError(FormulaError):
    """Flag when a variable list names the same variable twice."""

    def __init__(self, name: str, where: str) -> None:
        """Pass message to ValueError exception."""
        msg = f"Variable '{name}' appears twice in {where}."
        super().__init__(msg)


class UnknownVariableError(FormulaError):
    """Flag when a variable is used that the 'vars:' header does not declare."""

    def __init__(self, name: str, declared: tuple[str, ...]) -> None:
        """Pass message to ValueError exception."""
        msg = f"Variable '{name}' is not declared in the header '{list(declared)}'."
        super().__init__(msg)


class DisjunctionError(FormulaError):
    """Flag when a disjunction is given where a single conjunction is expected."""

    def __init__(self, count: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Expected a single conjunction but found {count} disjuncts."
        super().__init__(msg)


class ContradictoryFormulaError(FormulaError):
    """Flag when an operation needs a satisfiable reduced formula."""

    def __init__(self, operation: str) -> None:
        """Pass message to ValueError exception."""
        msg = f"Operation '{operation}' requires a non-contradictory formula."
        super().__init__(msg)


class FamilySizeError(FormulaError):
    """Flag when a formula family is requested with an invalid size."""

    def __init__(self, kind: str, size: int, minimum: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Invalid size '{size}' for family '{kind}'. Must be at least {minimum}."
        super().__init__(msg)


class LiteralConflictError(FormulaError):
    """Flag when an assignment disagrees with a value forced by a literal."""

    def __init__(self, name: str, forced: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Variable '{name}' is forced to {forced} by a literal of the formula."
        super().__init__(msg)

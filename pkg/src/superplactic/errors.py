"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)


class TableauError(ValueError):
    """A filling violates the super row or column condition.

    ``cell`` is the offending 1-based (row, col) and ``rule`` is one of
    ``"length"``, ``"row"``, ``"column"``.
    """

    def __init__(self, message, cell=None, rule=None):
        self.cell = cell
        self.rule = rule
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured size bound."""


class InvariantViolation(RuntimeError):
    """A checked identity failed; this indicates a bug, not bad input."""

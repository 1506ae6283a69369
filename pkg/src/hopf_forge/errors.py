"""Exception hierarchy shared by every layer of the engine."""

from __future__ import annotations


class HopfForgeError(Exception):
    """Base class for all engine errors."""


class MalformedObject(HopfForgeError, ValueError):
    """An object is not a valid canonical member of the rule's class."""


class ParseError(HopfForgeError, ValueError):
    """Text could not be parsed; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        self.line, self.column = _line_col(text, pos)
        super().__init__(f"{self.line}:{self.column}: {message}")


def _line_col(text: str, pos: int) -> tuple[int, int]:
    before = text[:pos]
    line = before.count("\n") + 1
    column = pos - (before.rfind("\n") + 1) + 1
    return line, column


class ConditionNotDeclared(HopfForgeError):
    """An operation needs a condition the rule does not claim."""

    def __init__(self, rule_name: str, *conditions: str):
        self.rule_name = rule_name
        self.conditions = conditions
        super().__init__(
            f"rule {rule_name!r} does not declare {', '.join(conditions)}"
        )


class BudgetExceeded(HopfForgeError):
    """Enumeration exceeded its budget; ``obj`` is the offending object."""

    def __init__(self, message: str, obj=None):
        self.obj = obj
        super().__init__(message)


class NonTermination(BudgetExceeded):
    """Nontrivial multiple decompositions did not die out within budget."""


class RecursionBudgetExceeded(BudgetExceeded):
    """The recursive antipode revisited an object or ran too deep."""


class UnknownInstance(HopfForgeError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown instance"


class EmptyAlphabet(HopfForgeError, ValueError):
    pass


class NotAMonoid(HopfForgeError, ValueError):
    """A supposedly determinate composition produced a non-singleton."""

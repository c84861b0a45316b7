"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ContractError(ValueError):
    """An input violates an operation's precondition."""


class ShapeError(ContractError):
    """A temporal graph does not have the structure an algorithm requires."""


class FormatError(ContractError):
    """A text file does not follow its declared format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """An exact search ran out of its node or time budget.

    ``lower`` and ``upper`` are the best bounds known when the search stopped;
    ``upper`` is ``None`` when no upper bound applies (enumeration progress).
    """

    def __init__(self, lower: int, upper: int | None, message: str = "search budget exhausted"):
        self.lower = lower
        self.upper = upper
        bounds = f"bounds {lower}..{upper}" if upper is not None else f"found {lower} so far"
        super().__init__(f"{message} ({bounds})")

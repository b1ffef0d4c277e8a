"""Exception hierarchy shared by every package of the project."""
from typing import Optional


class CriticalIdealsError(Exception):
    """Base class for all errors raised by the library."""


class Graph6ParseError(CriticalIdealsError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListParseError(CriticalIdealsError, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class GraphArgumentError(CriticalIdealsError, ValueError):
    pass


class NotSimpleGraphError(CriticalIdealsError, ValueError):
    pass


class DisconnectedGraphError(CriticalIdealsError, ValueError):
    pass


class SizeLimitError(CriticalIdealsError, ValueError):
    pass


class MissingVariableError(CriticalIdealsError, KeyError):
    pass


class GroebnerBudgetExhausted(CriticalIdealsError):
    def __init__(self, pairs: int, budget: int, index: Optional[int] = None):
        self.pairs = pairs
        self.budget = budget
        self.index = index
        where = f" while deciding I_{index}" if index is not None else ""
        super().__init__(f"Groebner budget exhausted after {pairs} pair reductions (budget {budget}){where}")

    def at_index(self, index: int) -> "GroebnerBudgetExhausted":
        return GroebnerBudgetExhausted(self.pairs, self.budget, index)


class HypothesisError(CriticalIdealsError, ValueError):
    pass


class UnknownFamilyError(CriticalIdealsError, ValueError):
    pass


class ReportValidationError(CriticalIdealsError):
    pass


class ReportStorageError(CriticalIdealsError):
    pass

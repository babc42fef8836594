"""
Analyzer exception hierarchy.
Every failure raised by the library derives from QuasiRandomError.
"""

from typing import Any, Dict, Optional


class QuasiRandomError(Exception):
    """Base error for the analyzer"""
    pass


class PreconditionError(QuasiRandomError, ValueError):
    """Arguments violate an operation's precondition"""
    pass


class InputFormatError(QuasiRandomError):
    """Malformed truth-table, code or pattern file"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")


class BudgetExceededError(QuasiRandomError):
    """A scan would exceed the configured operation budget"""

    def __init__(self, scan: str, cost: int, budget: int):
        self.scan = scan
        self.cost = cost
        self.budget = budget
        super().__init__(
            f"{scan}: estimated cost {cost} exceeds budget {budget}"
        )


class VerificationError(QuasiRandomError):
    """An identity or inequality that must hold was violated"""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        self.witness = witness or {}
        super().__init__(message)


def check_budget(scan: str, cost: int, budget: Optional[int]) -> None:
    """
    Refuse a scan whose estimated cost exceeds the budget.

    Args:
        scan: Human-readable scan name used in the refusal message
        cost: Estimated number of elementary operations
        budget: Operation cap, or None for no cap

    Raises:
        BudgetExceededError: If cost > budget
    """
    if budget is not None and cost > budget:
        raise BudgetExceededError(scan, int(cost), int(budget))

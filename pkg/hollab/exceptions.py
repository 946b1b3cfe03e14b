"""
Exception hierarchy for hollab.

Three families matter to callers: contract violations (bad input to a
well-defined operation), unsupported or oversized cases, and failed
verifications, which carry the witness that broke the check.
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class HollabError(Exception):
    """Base exception for every error raised by hollab."""


class ContractViolation(HollabError, ValueError):
    """An operation was called with inputs outside its precondition."""


class UnsupportedCase(HollabError, ValueError):
    """Parameters fall outside the grid a formula or algorithm covers."""


class BudgetExceeded(HollabError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"too large: {what} has {size} elements (budget {budget})")


class VerificationFailure(HollabError, AssertionError):
    """A structural check failed; ``witness`` records inputs and both sides."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        self.witness = dict(witness or {})
        super().__init__(message)

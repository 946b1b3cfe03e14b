"""Integer chain complexes: free ranks per degree and differential matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional

from .exceptions import ContractViolation, VerificationFailure
from .modular_linalg import IntegerMatrix


@dataclass
class ChainComplex:
    """
    C_q free of rank ``ranks[q]``; ``differentials[q]`` is d_q: C_q -> C_{q-1}
    with shape (rank q-1, rank q). Missing degrees are zero.
    """
    ranks: Dict[int, int]
    differentials: Dict[int, IntegerMatrix] = field(default_factory=dict)
    labels: Dict[int, List[Hashable]] = field(default_factory=dict)

    def __post_init__(self):
        for q, d in self.differentials.items():
            if d.rows != self.rank(q - 1) or d.cols != self.rank(q):
                raise ContractViolation(
                    f"d_{q} has shape {d.rows}x{d.cols}, expected {self.rank(q - 1)}x{self.rank(q)}"
                )

    def rank(self, q: int) -> int:
        return self.ranks.get(q, 0)

    def d(self, q: int) -> IntegerMatrix:
        if q in self.differentials:
            return self.differentials[q]
        return IntegerMatrix.zeros(self.rank(q - 1), self.rank(q))

    @property
    def degrees(self) -> List[int]:
        return sorted(q for q, r in self.ranks.items() if r)

    @property
    def top_degree(self) -> int:
        return max(self.ranks) if self.ranks else 0

    def square_zero_defect(self) -> Optional[int]:
        """First q with d_{q-1} d_q != 0, or None."""
        for q in sorted(self.differentials):
            if q - 1 in self.differentials and not (self.d(q - 1) @ self.d(q)).is_zero():
                return q
        return None

    def check_square_zero(self):
        q = self.square_zero_defect()
        if q is not None:
            raise VerificationFailure(f"d_{q - 1} d_{q} != 0", {"degree": q})

    def transformed(self, changes: Dict[int, "tuple"]) -> "ChainComplex":
        """
        Same complex in new bases: ``changes[q] = (B, B_inv)`` with unimodular
        B acting on C_q; d_q becomes B_{q-1}^-1 d_q B_q.
        """
        diffs = {}
        for q in self.differentials:
            d = self.d(q)
            if q in changes:
                d = d @ changes[q][0]
            if q - 1 in changes:
                d = changes[q - 1][1] @ d
            diffs[q] = d
        return ChainComplex(dict(self.ranks), diffs)

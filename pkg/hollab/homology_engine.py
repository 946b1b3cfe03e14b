"""
hollab - Homology Engine
========================

Integral homology of finite chain complexes by Smith normal form, the closed
forms for H_q(Hol(Z/p^r); Z) and mod-p cohomology ranks, and the cross-checks
that tie the computed and closed-form tables together.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint, isprime

from .chain_complex import ChainComplex
from .exceptions import ContractViolation, UnsupportedCase, VerificationFailure
from .group_ring_resolution import (
    MetabelianPresentation,
    augment,
    build_resolution,
    hol_cyclic_presentation,
)
from .modular_linalg import (
    IntegerMatrix,
    SmithDecomposition,
    prime_power,
    smith_decomposition,
    vp,
)
from .reference_data import MAX_HOMOLOGY_DEGREE, get_thread_cap

logger = logging.getLogger(__name__)

__all__ = [
    "AbelianInvariants",
    "ChainComplex",
    "ComplexHomology",
    "homology",
    "closed_form_homology",
    "computed_homology",
    "compare_homology",
    "mod_p_cohomology_ranks",
    "uct_ranks",
    "abelianization",
    "cyclic_complex_homology",
    "coefficient_reduction_check",
    "supported_homology",
]


# =============================================================================
# ABELIAN INVARIANTS
# =============================================================================

@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free + sum of Z/torsion[i]; torsion entries are prime powers, ascending."""
    free: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free < 0 or any(t <= 1 for t in self.torsion):
            raise ContractViolation(f"invalid abelian invariants {self.free}, {self.torsion}")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @classmethod
    def from_factors(cls, free: int, factors: Sequence[int]) -> "AbelianInvariants":
        """Split invariant factors into prime powers; units are dropped."""
        torsion: List[int] = []
        for d in factors:
            for p, e in factorint(abs(int(d))).items():
                torsion.append(int(p) ** e)
        return cls(free, tuple(torsion))

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int], free: int = 0) -> "AbelianInvariants":
        """{order: count} with each order a prime power."""
        return cls(free, tuple(order for order, n in multiplicities.items() for _ in range(n)))

    def __add__(self, other: "AbelianInvariants") -> "AbelianInvariants":
        return AbelianInvariants(self.free + other.free, self.torsion + other.torsion)

    @property
    def order(self) -> Optional[int]:
        if self.free:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def p_rank(self, p: int) -> int:
        """Number of cyclic p-power summands (the free part is not counted)."""
        return sum(1 for t in self.torsion if t % p == 0)

    def multiplicities(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for t in self.torsion:
            out[t] = out.get(t, 0) + 1
        return out

    def tokens(self) -> List[str]:
        out = [("Z" if self.free == 1 else f"Z^{self.free}")] if self.free else []
        return out + [f"Z/{t}" for t in self.torsion]

    def __str__(self):
        return " + ".join(self.tokens()) or "0"


# =============================================================================
# SMITH NORMAL FORM HOMOLOGY
# =============================================================================

class ComplexHomology:
    """Caches one Smith decomposition per differential of ``complex``."""

    def __init__(self, complex_: ChainComplex):
        self.complex = complex_
        self._smith: Dict[int, SmithDecomposition] = {}

    def smith(self, q: int) -> SmithDecomposition:
        if q not in self._smith:
            self._smith[q] = smith_decomposition(self.complex.d(q))
        return self._smith[q]

    def __call__(self, q: int) -> AbelianInvariants:
        C = self.complex
        if C.rank(q) == 0:
            return AbelianInvariants()
        if q + 1 in C.differentials and q in C.differentials:
            if not (C.d(q) @ C.d(q + 1)).is_zero():
                raise ContractViolation(f"d_{q} d_{q + 1} != 0; not a chain complex")
        incoming = self.smith(q + 1)
        free = C.rank(q) - self.smith(q).rank - incoming.rank
        return AbelianInvariants.from_factors(free, [d for d in incoming.invariants if abs(d) > 1])


def homology(C: ChainComplex, q: int) -> AbelianInvariants:
    """H_q = ker d_q / im d_{q+1}."""
    return ComplexHomology(C)(q)


# =============================================================================
# CLOSED FORMS
# =============================================================================

def _n1_from_r4(q: int) -> int:
    value = (Fraction(q * q, 8) - Fraction(q, 4) + q // 4 - q // 8 + (q + 3) // 4 + (q + 1) // 2
             + {1: Fraction(1, 8), 3: Fraction(-3, 8)}.get(q % 4, Fraction(0)))
    if value.denominator != 1:
        raise VerificationFailure("n_1 is not an integer", {"q": q, "value": str(value)})
    return int(value)


def _two_multiplicities(r: int, q: int) -> Dict[int, int]:
    odd = q % 2
    if r == 3:
        n = q // 4
        n1 = (2 * n * n + 3 * n, 2 * n * n + 4 * n + 3, 2 * n * n + 5 * n + 2, 2 * n * n + 6 * n + 4)[q % 4]
        return {2: n1, 4: 0, 8: int(q % 4 == 3)}
    if r == 4:
        return {
            2: _n1_from_r4(q),
            4: q // 8 + odd,
            8: int(q % 8 == 3),
            16: int(q % 8 == 7),
        }
    counts: Dict[int, int] = {}
    for i in range(1, r + 1):
        if i == 1:
            n_i = _n1_from_r4(q)
        elif i == r - 2:
            n_i = q // 2 ** (r - 1) + odd + int(q % 2 ** (r - 2) == 2 ** (r - 3) - 1)
        elif i == r - 1:
            n_i = int(q % 2 ** (r - 1) == 2 ** (r - 2) - 1)
        elif i == r:
            n_i = int(q % 2 ** (r - 1) == 2 ** (r - 1) - 1)
        elif i == 2:
            n_i = q // 8 - q // 16
        else:
            n_i = q // 2 ** (i + 1) - q // 2 ** (i + 2) + int(q % 2 ** i == 2 ** (i - 1) - 1)
        counts[2 ** i] = n_i
    return counts


def _lowest_degree_hit(q: int, step: int, p: int, coprime: bool = True) -> bool:
    """q = step * k - 1 for some k >= 1, with (k, p) = 1 when ``coprime``."""
    if (q + 1) % step or q + 1 <= 0:
        return False
    k = (q + 1) // step
    return not coprime or k % p != 0


def _odd_multiplicities(p: int, r: int, q: int) -> Tuple[Dict[int, int], int]:
    odd = q % 2
    base = 2 * (p - 1)
    if r == 1:
        return {p: int(_lowest_degree_hit(q, base, p, coprime=False))}, odd
    if r == 2:
        n1 = q // (base * p) + int(_lowest_degree_hit(q, base, p)) + odd
        n2 = int(_lowest_degree_hit(q, base * p, p, coprime=False))
        return {p: n1, p * p: n2}, odd
    counts: Dict[int, int] = {}
    for i in range(1, r + 1):
        if i <= r - 2:
            n_i = (q // (base * p ** i) - q // (base * p ** (i + 1))
                   + int(_lowest_degree_hit(q, base * p ** (i - 1), p)))
        elif i == r - 1:
            n_i = (q // (base * p ** (r - 1)) + int(_lowest_degree_hit(q, base * p ** (r - 2), p))
                   + odd)
        else:
            n_i = int(_lowest_degree_hit(q, base * p ** (r - 1), p, coprime=False))
        counts[p ** i] = n_i
    return counts, odd


def supported_homology(p: int, r: int) -> bool:
    if p == 2:
        return r >= 3
    return p > 2 and isprime(p) and r >= 1


def closed_form_homology(p: int, r: int, q: int) -> AbelianInvariants:
    """H_q(Hol(Z/p^r); Z) from the multiplicity formulas."""
    if not supported_homology(p, r):
        raise UnsupportedCase(f"no closed formula for p={p}, r={r}")
    if q < 0:
        raise ContractViolation("degree must be >= 0")
    if q == 0:
        return AbelianInvariants(1)
    if p == 2:
        return AbelianInvariants.from_multiplicities(_two_multiplicities(r, q))
    counts, unit_part = _odd_multiplicities(p, r, q)
    # Z/(p-1) splits into prime powers
    extra = AbelianInvariants.from_factors(0, [p - 1] * unit_part)
    return AbelianInvariants.from_multiplicities(counts) + extra


# =============================================================================
# COMPUTED HOMOLOGY
# =============================================================================

def summand_bound(qmax: int) -> int:
    """A^m starts in degree 2m - 1, so only m <= (qmax + 1) // 2 reach degree qmax."""
    return (qmax + 1) // 2


def _summand_table(res, m: int, qmax: int) -> Dict[int, AbelianInvariants]:
    C = augment(res, m)
    C.check_square_zero()
    H = ComplexHomology(C)
    return {q: H(q) for q in range(qmax + 1)}


def summand_homology(P: MetabelianPresentation, qmax: int,
                     x_plane_exponent: str = "s1") -> Dict[int, Dict[int, AbelianInvariants]]:
    """{m: {q: H_q(A^m)}} for every summand reaching degree qmax."""
    if qmax < 0 or qmax > MAX_HOMOLOGY_DEGREE:
        raise ContractViolation(f"qmax must lie in [0, {MAX_HOMOLOGY_DEGREE}]")
    res = build_resolution(P, max(qmax + 1, 2), x_plane_exponent)
    summands = range(summand_bound(qmax) + 1)
    with ThreadPoolExecutor(max_workers=get_thread_cap()) as pool:
        tables = list(pool.map(lambda m: _summand_table(res, m, qmax), summands))
    return dict(zip(summands, tables))


def _direct_sum(parts) -> AbelianInvariants:
    total = AbelianInvariants()
    for part in parts:
        total = total + part
    return total


def computed_homology(p: int, r: int, qmax: int) -> Dict[int, AbelianInvariants]:
    """{q: H_q(Hol(Z/p^r); Z)} as the direct sum over the summands A^m."""
    if not supported_homology(p, r):
        raise UnsupportedCase(f"no closed formula for p={p}, r={r}")
    per_summand = summand_homology(hol_cyclic_presentation(p, r), qmax)
    logger.debug("computed homology of Hol(Z/%d^%d) through degree %d", p, r, qmax)
    return {q: _direct_sum(per_summand[m][q] for m in sorted(per_summand))
            for q in range(qmax + 1)}


def compare_homology(p: int, r: int, qmax: int) -> Dict[int, AbelianInvariants]:
    """Computed table, after checking it degree by degree against the closed form."""
    if not supported_homology(p, r):
        raise UnsupportedCase(f"no closed formula for p={p}, r={r}")
    per_summand = summand_homology(hol_cyclic_presentation(p, r), qmax)
    table: Dict[int, AbelianInvariants] = {}
    for q in range(qmax + 1):
        parts = {m: per_summand[m][q] for m in sorted(per_summand)}
        total = _direct_sum(parts.values())
        expected = closed_form_homology(p, r, q)
        if total != expected:
            raise VerificationFailure(
                f"computed H_{q} differs from closed form for p={p}, r={r}",
                {"p": p, "r": r, "q": q, "computed": str(total), "expected": str(expected),
                 "summands": {m: str(h) for m, h in parts.items() if h != AbelianInvariants()}},
            )
        table[q] = total
    return table


def abelianization(P: MetabelianPresentation) -> AbelianInvariants:
    """G/[G, G] from the relation matrix of the presentation, independently of any resolution."""
    relations = IntegerMatrix.from_rows([
        (P.s1, 0, 0),
        (0, P.s2, 0),
        (0, 0, P.q),
        (0, 0, P.t1 - 1),
        (0, 0, P.t2 - 1),
    ])
    factors = smith_decomposition(relations).invariants
    free = 3 - sum(1 for d in factors if d != 0)
    return AbelianInvariants.from_factors(free, [d for d in factors if abs(d) > 1])


# =============================================================================
# MOD-p COHOMOLOGY RANKS
# =============================================================================

def mod_p_cohomology_ranks(p: int, r: int, q: int) -> int:
    """dim_{F_p} H^q(Hol(Z/p^r); F_p); independent of r."""
    if q < 0:
        raise ContractViolation("degree must be >= 0")
    if p == 2 and r >= 3:
        n, rem = divmod(q, 4)
        return 4 * n * n + (5, 7, 9, 11)[rem] * n + (1, 3, 5, 7)[rem]
    if p > 2 and supported_homology(p, r) and r >= 3:
        period = 2 * (p - 1) * p
        k, rem = divmod(q, period)
        step = 2 * (p - 1)
        first = (rem + 1) % step == 0 and 1 <= (rem + 1) // step <= p
        second = rem % step == 0 and 1 <= rem // step <= p - 1
        return 2 * k + 2 if first or second else 2 * k + 1
    raise UnsupportedCase(f"no mod-p rank formula for p={p}, r={r}")


def uct_ranks(table: Dict[int, AbelianInvariants], p: int) -> Dict[int, int]:
    """dim H^q(-; F_p) = (free_q + p-rank H_q) + p-rank H_{q-1}."""
    out: Dict[int, int] = {}
    for q in sorted(table):
        below = table[q - 1].p_rank(p) if q - 1 in table else 0
        out[q] = table[q].free + table[q].p_rank(p) + below
    return out


def check_uct_ranks(p: int, r: int, qmax: int,
                    table: Optional[Dict[int, AbelianInvariants]] = None) -> Dict[int, int]:
    table = table if table is not None else computed_homology(p, r, qmax)
    ranks = uct_ranks(table, p)
    for q, rank in ranks.items():
        expected = mod_p_cohomology_ranks(p, r, q)
        if rank != expected:
            raise VerificationFailure(
                f"UCT rank of H^{q} differs from the rank formula",
                {"p": p, "r": r, "q": q, "uct": rank, "formula": expected,
                 "H_q": str(table[q]), "H_q-1": str(table.get(q - 1, ""))},
            )
    return ranks


# =============================================================================
# COMPLEXES OF CYCLIC GROUPS
# =============================================================================

def cyclic_complex_homology(modulus: int, multipliers: Sequence[int]) -> List[int]:
    """
    Orders of the homology groups of Z/M <-(x m_1)- Z/M <-(x m_2)- ... , by
    enumerating kernels and images. Position i has incoming map m_{i+1} and
    outgoing map m_i; the ends are zero.
    """
    M = modulus
    maps = [0] + [m % M for m in multipliers] + [0]
    for a, b in zip(maps[1:-2], maps[2:-1]):
        if (a * b) % M:
            raise ContractViolation(f"(x{a}) o (x{b}) != 0 mod {M}")
    orders = []
    for i in range(len(multipliers) + 1):
        out_map, in_map = maps[i], maps[i + 1]
        kernel = {x for x in range(M) if (x * out_map) % M == 0}
        image = {(x * in_map) % M for x in range(M)}
        orders.append(len(kernel) // len(image))
    return orders


def coefficient_reduction_check(modulus: int, multipliers: Sequence[int], trials: int = 20,
                                seed: int = 0) -> bool:
    """
    Homology of a complex of copies of Z/p^r depends only on the p-adic
    valuations of the multipliers: p^v * u gives the same answer for every unit u.
    """
    pp = prime_power(modulus)
    if pp is None:
        raise UnsupportedCase(f"unsupported modulus {modulus}")
    p, r = pp
    rng = random.Random(seed)
    baseline = cyclic_complex_homology(modulus, multipliers)
    valuations = [r if m % modulus == 0 else vp(m % modulus, p) for m in multipliers]
    unit_choices = [u for u in range(1, modulus) if gcd(u, p) == 1]
    for _ in range(trials):
        replaced = [p ** v * rng.choice(unit_choices) for v in valuations]
        if cyclic_complex_homology(modulus, replaced) != baseline:
            return False
    return True

"""
hollab - Exact Linear Algebra
=============================

Arithmetic over Z and Z/m: residues, residue and integer matrices, p-adic
valuations, Smith normal form, GL enumeration and the unit groups of Z/p^r.

Conventions
- Residue values are stored reduced; mixing moduli is a contract violation.
- Matrices are immutable tuples of rows; hot loops use the raw tuple helpers
  (``mat_mul_mod``, ``mat_vec_mod``) rather than the wrapper classes.
- Smith normal form runs on Python integers (no overflow) and verifies
  ``U * M * V == D`` before returning.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, factorint, n_order, totient

from .exceptions import BudgetExceeded, ContractViolation, UnsupportedCase, VerificationFailure
from .reference_data import GL_ENUMERATION_BUDGET

logger = logging.getLogger(__name__)

IntRows = Tuple[Tuple[int, ...], ...]


# =============================================================================
# RESIDUES
# =============================================================================

@dataclass(frozen=True)
class Residue:
    """An element of Z/m, always stored reduced."""
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ContractViolation(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if not isinstance(other, Residue):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ContractViolation(
                f"mixed moduli: {self.modulus} and {other.modulus}"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        return Residue(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> "Residue":
        if not self.is_unit():
            raise ContractViolation(f"{self.value} is not a unit mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __int__(self):
        return self.value


# =============================================================================
# RAW TUPLE HELPERS
# =============================================================================

def identity_rows(n: int) -> IntRows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul_mod(a: IntRows, b: IntRows, m: int) -> IntRows:
    """Product of two tuple matrices with every entry reduced mod m."""
    cols = list(zip(*b)) if b else []
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % m for col in cols)
        for row in a
    )


def mat_vec_mod(a: IntRows, v: Sequence[int], m: int) -> Tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) % m for row in a)


def reduce_rows(a: Sequence[Sequence[int]], m: int) -> IntRows:
    return tuple(tuple(int(x) % m for x in row) for row in a)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=65536)
def inverse_rows_mod(rows: IntRows, m: int) -> IntRows:
    """Inverse of a square tuple matrix over Z/m (determinant must be a unit)."""
    if not rows or m == 1:
        return reduce_rows(rows, m)
    if gcd(det_int(rows), m) != 1:
        raise ContractViolation("matrix is not invertible mod %d" % m)
    inv = Matrix(rows).inv_mod(m)
    return reduce_rows(inv.tolist(), m)


# =============================================================================
# RESIDUE MATRICES
# =============================================================================

@dataclass(frozen=True)
class ResidueMatrix:
    """Matrix over Z/m; ``entries`` are reduced on construction."""
    entries: IntRows
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ContractViolation(f"modulus must be >= 1, got {self.modulus}")
        rows = reduce_rows(self.entries, self.modulus)
        if rows and len({len(r) for r in rows}) != 1:
            raise ContractViolation("ragged matrix rows")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int, modulus: int) -> "ResidueMatrix":
        return cls(identity_rows(n), modulus)

    @classmethod
    def scalar(cls, value: int, modulus: int) -> "ResidueMatrix":
        return cls(((value,),), modulus)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, index: Tuple[int, int]) -> Residue:
        i, j = index
        return Residue(self.entries[i][j], self.modulus)

    def _check(self, other: "ResidueMatrix"):
        if other.modulus != self.modulus:
            raise ContractViolation(
                f"mixed moduli: {self.modulus} and {other.modulus}"
            )

    def __matmul__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ContractViolation(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        return ResidueMatrix(mat_mul_mod(self.entries, other.entries, self.modulus), self.modulus)

    def __pow__(self, exponent: int) -> "ResidueMatrix":
        base = self if exponent >= 0 else self.inverse()
        result = ResidueMatrix.identity(self.rows, self.modulus)
        for _ in range(abs(exponent)):
            result = result @ base
        return result

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return mat_vec_mod(self.entries, vector, self.modulus)

    def transpose(self) -> "ResidueMatrix":
        return ResidueMatrix(tuple(zip(*self.entries)), self.modulus)

    @cached_property
    def det(self) -> int:
        if self.rows != self.cols:
            raise ContractViolation("determinant of a non-square matrix")
        return det_int(self.entries) % self.modulus

    def is_invertible(self) -> bool:
        return self.rows == self.cols and gcd(self.det, self.modulus) == 1

    @cached_property
    def _inverse(self) -> "ResidueMatrix":
        return ResidueMatrix(inverse_rows_mod(self.entries, self.modulus), self.modulus)

    def inverse(self) -> "ResidueMatrix":
        if not self.is_invertible():
            raise ContractViolation(f"matrix is not invertible mod {self.modulus}")
        return self._inverse

    def is_identity(self) -> bool:
        return self.entries == identity_rows(self.rows)


# =============================================================================
# INTEGER MATRICES
# =============================================================================

@dataclass(frozen=True)
class IntegerMatrix:
    """Integer matrix with explicit shape, so 0 x n and n x 0 are representable."""
    entries: IntRows
    rows: int
    cols: int

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ContractViolation(
                f"entries do not match declared shape {self.rows}x{self.cols}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(tuple(tuple(r) for r in rows), len(rows), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(identity_rows(n), n, n)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ContractViolation(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        entries = tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
            for row in self.entries
        )
        return IntegerMatrix(entries, self.rows, other.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def transpose(self) -> "IntegerMatrix":
        entries = tuple(
            tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)
        )
        return IntegerMatrix(entries, self.cols, self.rows)

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=object).reshape(self.rows, self.cols)


# =============================================================================
# VALUATIONS
# =============================================================================

def vp(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if n == 0:
        raise ContractViolation("valuation undefined for 0")
    if p < 2:
        raise ContractViolation(f"p must be prime, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def prime_power(m: int) -> Optional[Tuple[int, int]]:
    """(p, r) with m = p**r, or None when m is not a prime power."""
    if m < 2:
        return None
    factors = factorint(m)
    if len(factors) != 1:
        return None
    (p, r), = factors.items()
    return int(p), int(r)


# =============================================================================
# SMITH NORMAL FORM
# =============================================================================

@dataclass(frozen=True)
class SmithDecomposition:
    """``left * matrix * right == diagonal`` with unimodular ``left``/``right``."""
    invariants: Tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix
    diagonal: IntegerMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d != 0)


def _least_entry(a: List[List[int]], s: int) -> Optional[Tuple[int, int]]:
    best, pos = 0, None
    for i in range(s, len(a)):
        row = a[i]
        for j in range(s, len(row)):
            x = row[j]
            if x and (pos is None or abs(x) < best):
                best, pos = abs(x), (i, j)
                if best == 1:
                    return pos
    return pos


def _add_row(a, left, target: int, source: int, k: int):
    a[target] = [x + k * y for x, y in zip(a[target], a[source])]
    left[target] = [x + k * y for x, y in zip(left[target], left[source])]


def _add_col(a, right, target: int, source: int, k: int):
    for row in a:
        row[target] += k * row[source]
    for row in right:
        row[target] += k * row[source]


def smith_decomposition(matrix: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with transforms, by pivoting on the least entry."""
    rows, cols = matrix.rows, matrix.cols
    a = matrix.to_lists()
    left = [list(r) for r in identity_rows(rows)]
    right = [list(r) for r in identity_rows(cols)]

    for s in range(min(rows, cols)):
        while True:
            pos = _least_entry(a, s)
            if pos is None:
                break
            i, j = pos
            if i != s:
                a[s], a[i] = a[i], a[s]
                left[s], left[i] = left[i], left[s]
            if j != s:
                for row in a:
                    row[s], row[j] = row[j], row[s]
                for row in right:
                    row[s], row[j] = row[j], row[s]
            if a[s][s] < 0:
                a[s] = [-x for x in a[s]]
                left[s] = [-x for x in left[s]]

            pivot = a[s][s]
            clean = True
            for i in range(s + 1, rows):
                if a[i][s]:
                    q = a[i][s] // pivot
                    if q:
                        _add_row(a, left, i, s, -q)
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, cols):
                if a[s][j]:
                    q = a[s][j] // pivot
                    if q:
                        _add_col(a, right, j, s, -q)
                    clean = clean and a[s][j] == 0
            if not clean:
                continue

            # pivot must divide the remaining block
            bad = next(
                (i for i in range(s + 1, rows)
                 if any(x % pivot for x in a[i][s + 1:])),
                None,
            )
            if bad is None:
                break
            _add_row(a, left, s, bad, 1)
        if _least_entry(a, s) is None:
            break

    invariants = tuple(a[i][i] for i in range(min(rows, cols)))
    decomposition = SmithDecomposition(
        invariants=invariants,
        left=IntegerMatrix.from_rows(left, rows),
        right=IntegerMatrix.from_rows(right, cols),
        diagonal=IntegerMatrix.from_rows(a, cols),
    )
    product = decomposition.left @ matrix @ decomposition.right
    if product != decomposition.diagonal:
        raise VerificationFailure(
            "Smith transforms do not reproduce the diagonal form",
            {"rows": rows, "cols": cols},
        )
    return decomposition


def smith_normal_form(matrix: IntegerMatrix) -> Tuple[int, ...]:
    """Invariant factors d1 | d2 | ..., zeros last."""
    return smith_decomposition(matrix).invariants


def integer_rank(matrix: IntegerMatrix) -> int:
    return smith_decomposition(matrix).rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank over F_p by Gaussian elimination; ``matrix`` is any 2-D integer array."""
    a = np.array(matrix, dtype=object)
    if a.size == 0:
        return 0
    a = np.array([[int(x) % p for x in row] for row in a.tolist()], dtype=np.int64)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, c]), -1, p)) % p
        factors = a[:, c].copy()
        factors[rank] = 0
        a = (a - np.outer(factors, a[rank])) % p
        rank += 1
    return rank


def local_invariant_valuations(matrix, p: int, e: int) -> List[int]:
    """
    Valuations of the invariant factors of ``matrix`` over Z/p^e.

    Only factors with valuation below ``e`` are reported; anything divisible
    by p^e is indistinguishable from zero at this precision.
    """
    modulus = p ** e
    a = np.array(matrix, dtype=np.int64) % modulus
    if a.size == 0:
        return []
    rows, cols = a.shape
    found: List[int] = []
    s = 0
    while s < min(rows, cols):
        block = a[s:, s:]
        val = np.full(block.shape, e, dtype=np.int64)
        nonzero = block != 0
        val[nonzero] = 0
        for k in range(1, e):
            val[nonzero & (block % p ** k == 0)] = k
        v = int(val.min())
        if v >= e:
            break
        i, j = np.unravel_index(int(val.argmin()), val.shape)
        i, j = int(i) + s, int(j) + s
        a[[s, i]] = a[[i, s]]
        a[:, [s, j]] = a[:, [j, s]]
        pk = p ** v
        unit = int(a[s, s]) // pk
        a[s] = (a[s] * pow(unit, -1, modulus)) % modulus
        factors = a[s + 1:, s] // pk
        a[s + 1:] = (a[s + 1:] - np.outer(factors, a[s])) % modulus
        a[s, s + 1:] = 0
        found.append(v)
        s += 1
    return found


# =============================================================================
# UNIT GROUPS AND GL
# =============================================================================

def unit_order(u: int, m: int) -> int:
    if m == 1:
        return 1
    return int(n_order(u, m))


def aut_cyclic_generators(m: int) -> Dict[int, int]:
    """
    Generators of Aut(Z/m), as {multiplier: order}.

    m = 2^r with r >= 3 gives {3: 2^(r-2), 2^r - 1: 2}; an odd prime power
    gives the smallest unit of maximal order.
    """
    pp = prime_power(m)
    if pp is None:
        raise UnsupportedCase(f"unsupported modulus {m}")
    p, r = pp
    if p == 2:
        if r < 3:
            raise UnsupportedCase(f"unsupported modulus {m}")
        return {3: 2 ** (r - 2), m - 1: 2}
    phi = int(totient(m))
    for u in range(2, m):
        if gcd(u, m) == 1 and unit_order(u, m) == phi:
            return {u: phi}
    raise VerificationFailure(f"no unit of order {phi} mod {m}", {"m": m})


def unit_closure(generators: Sequence[int], m: int) -> frozenset:
    """Subgroup of (Z/m)^* generated by ``generators``."""
    seen = {1 % m}
    frontier = [1 % m]
    while frontier:
        nxt = []
        for u in frontier:
            for g in generators:
                w = (u * g) % m
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def units(m: int) -> List[int]:
    return [u for u in range(m) if gcd(u, m) == 1] if m > 1 else [0]


def gl_order(n: int, p: int, r: int) -> int:
    """|GL(n, Z/p^r)| = prod_{i<n} (p^{rn} - p^{(r-1)n+i})."""
    if n < 1 or r < 1:
        raise ContractViolation("gl_order needs n >= 1 and r >= 1")
    return prod(p ** (r * n) - p ** ((r - 1) * n + i) for i in range(n))


def enumerate_gl(n: int, m: int, budget: int = GL_ENUMERATION_BUDGET) -> Iterator[IntRows]:
    """All invertible n x n matrices over Z/m, as tuple rows."""
    candidates = m ** (n * n)
    pp = prime_power(m)
    size = gl_order(n, *pp) if pp else candidates
    if size > budget:
        raise BudgetExceeded(f"GL({n}, Z/{m})", size, budget)
    for flat in itertools.product(range(m), repeat=n * n):
        rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if gcd(det_int(rows), m) == 1:
            yield rows


def unit_valuation_table(p: int, r: int, multipliers: Optional[Sequence[int]] = None) -> List[Dict[str, int]]:
    """
    p-adic valuations of s^m - 1 and of the norm sum over Aut(Z/p^r).

    ``s`` is the chosen generator of Aut(Z/p^r), p odd. Valuations are capped
    at r because the maps act on Z/p^r. Each row records the predicted pair
    from the case split on m.
    """
    if p == 2:
        raise UnsupportedCase("unit valuation table needs an odd prime")
    (s, phi), = aut_cyclic_generators(p ** r).items()
    precision = p ** (r + 1)
    if multipliers is None:
        shaped = {(p - 1) * p ** (q - 1) * k for q in range(1, r + 1) for k in (1, 2) if k % p}
        multipliers = sorted(set(range(1, 31)) | shaped)

    table = []
    for m in multipliers:
        power = (pow(s, m, precision) - 1) % precision
        step = pow(s, m, precision)
        total, term = 0, 1
        for _ in range(phi):
            total = (total + term) % precision
            term = (term * step) % precision
        vp_power = min(vp(power, p), r) if power else r
        vp_sum = min(vp(total, p), r) if total else r
        if m % (p - 1):
            expected = (0, r)
        else:
            q = vp(m // (p - 1), p) + 1
            expected = (q, r - 1) if q <= r - 1 else (r, r - 1)
        table.append({
            "m": m,
            "vp_power": vp_power,
            "vp_sum": vp_sum,
            "expected_power": expected[0],
            "expected_sum": expected[1],
        })
    return table

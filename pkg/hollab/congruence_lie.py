"""
hollab - Congruence Subgroups and their Lie Algebra
===================================================

Gamma_{n,k} = Ker(Hol(sum_n Z/p^{k+1}) -> Hol(sum_n Z/p)): elements (1 + pA, px)
mod p^{k+1}, multiplied as holomorph pairs (M, v)(N, w) = (MN, N^-1 v + w).

Exhaustive checks run batched over numpy arrays of shape (count, n, n) and
(count, n); all moduli here are below 10^4 so int64 never overflows.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import BudgetExceeded, ContractViolation, VerificationFailure
from .graded_invariants import GradedAlgebra, GradedElement, Generator, apply_derivation
from .holomorph_core import FiniteAbelianGroup, HolElement, closure
from .modular_linalg import IntRows, gl_order
from .reference_data import GAMMA_ENUMERATION_BUDGET, ROOT_SEARCH_LIMIT

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
BasisLabel = Tuple[int, ...]  # (i, j) for e_ij, (l,) for e_l

# Bockstein formulas proven for p >= 5 and extended to these primes
BOCKSTEIN_EXTENDED_PRIMES = (2, 3)


# =============================================================================
# 1. ELEMENTS
# =============================================================================

def _unipotent_inverse(M: np.ndarray, p: int, modulus: int) -> np.ndarray:
    """(I + pA)^-1 = sum_i (-pA)^i, finite since (pA)^i vanishes mod p^{k+1}."""
    n = M.shape[-1]
    eye = np.broadcast_to(np.eye(n, dtype=np.int64), M.shape)
    nil = (eye - M) % modulus  # = -pA
    result = eye.copy()
    power = eye.copy()
    while True:
        power = np.matmul(power, nil) % modulus
        if not power.any():
            return result % modulus
        result = (result + power) % modulus


@dataclass(frozen=True)
class GammaElement:
    M: IntRows
    v: Vector
    p: int
    k: int

    def __post_init__(self):
        q = self.modulus
        M = tuple(tuple(int(a) % q for a in row) for row in self.M)
        v = tuple(int(a) % q for a in self.v)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "v", v)
        n = len(v)
        if len(M) != n or any(len(row) != n for row in M):
            raise ContractViolation("matrix and vector shapes differ")
        if any((M[i][j] - (i == j)) % self.p for i in range(n) for j in range(n)):
            raise ContractViolation("matrix part is not congruent to I mod p")
        if any(a % self.p for a in v):
            raise ContractViolation("vector part is not divisible by p")

    @property
    def modulus(self) -> int:
        return self.p ** (self.k + 1)

    @property
    def n(self) -> int:
        return len(self.v)

    @classmethod
    def identity(cls, n: int, p: int, k: int) -> "GammaElement":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n, p, k)

    @classmethod
    def from_lie(cls, A: Sequence[Sequence[int]], x: Sequence[int], p: int, k: int, scale: int = 1) -> "GammaElement":
        """(1 + p^scale A, p^scale x) at level k."""
        n = len(x)
        f = p ** scale
        M = tuple(tuple(int(i == j) + f * A[i][j] for j in range(n)) for i in range(n))
        return cls(M, tuple(f * a for a in x), p, k)

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.array(self.M, dtype=np.int64).reshape(self.n, self.n), np.array(self.v, dtype=np.int64)

    def _check(self, other: "GammaElement"):
        if (self.p, self.k, self.n) != (other.p, other.k, other.n):
            raise ContractViolation("elements of different congruence groups")

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        self._check(other)
        q = self.modulus
        M, v = self.arrays()
        N, w = other.arrays()
        N_inv = _unipotent_inverse(N, self.p, q)
        return GammaElement(tuple(map(tuple, (M @ N) % q)), tuple((N_inv @ v + w) % q), self.p, self.k)

    def inverse(self) -> "GammaElement":
        q = self.modulus
        M, v = self.arrays()
        return GammaElement(tuple(map(tuple, _unipotent_inverse(M, self.p, q))), tuple((M @ (-v)) % q),
                            self.p, self.k)

    def __pow__(self, exponent: int) -> "GammaElement":
        result = GammaElement.identity(self.n, self.p, self.k)
        for _ in range(exponent):
            result = result * self
        return result

    def is_identity(self) -> bool:
        return self == GammaElement.identity(self.n, self.p, self.k)

    def lift(self, k: int) -> "GammaElement":
        """Same integer entries at a higher level."""
        return GammaElement(self.M, self.v, self.p, k)

    def reduce(self, k: int) -> "GammaElement":
        return GammaElement(self.M, self.v, self.p, k)

    def depth(self) -> int:
        """Largest d <= k + 1 with M = I and v = 0 mod p^d."""
        d = 0
        while d <= self.k and all(
            (self.M[i][j] - (i == j)) % self.p ** (d + 1) == 0 and self.v[i] % self.p ** (d + 1) == 0
            for i in range(self.n) for j in range(self.n)
        ):
            d += 1
        return d

    def to_hol(self) -> HolElement:
        return HolElement(FiniteAbelianGroup.homocyclic(self.n, self.modulus), self.M, self.v)


# =============================================================================
# 2. ORDER AND ENUMERATION
# =============================================================================

def gamma_order(n: int, k: int, p: int) -> int:
    """|Gamma_{n,k}| = p^{k(n^2 + n)}."""
    if n < 1 or k < 0:
        raise ContractViolation("need n >= 1 and k >= 0")
    return p ** (k * (n * n + n))


def gamma_order_from_gl(n: int, k: int, p: int) -> int:
    """p^{kn} |GL(n, Z/p^{k+1})| / |GL(n, Z/p)|."""
    numerator = p ** (k * n) * gl_order(n, p, k + 1)
    denominator = gl_order(n, p, 1)
    if numerator % denominator:
        raise VerificationFailure("GL quotient is not an integer", {"n": n, "k": k, "p": p})
    return numerator // denominator


def _lie_parts(n: int, k: int, p: int, depth: int = 1) -> Iterator[Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]]:
    span = p ** (k + 1 - depth)
    for flat in itertools.product(range(span), repeat=n * n + n):
        A = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        yield A, tuple(flat[n * n:])


def gamma_enumerate(n: int, k: int, p: int, budget: int = GAMMA_ENUMERATION_BUDGET,
                    depth: int = 1) -> Iterator[GammaElement]:
    """Elements (1 + p^depth A, p^depth x) mod p^{k+1}; depth 1 gives all of Gamma_{n,k}."""
    size = p ** ((k + 1 - depth) * (n * n + n))
    if size > budget:
        raise BudgetExceeded(f"Gamma_{{{n},{k}}} at depth {depth} (p={p})", size, budget)
    for A, x in _lie_parts(n, k, p, depth):
        yield GammaElement.from_lie(A, x, p, k, scale=depth)


@dataclass
class GammaBatch:
    """All listed elements as stacked arrays, with inverses precomputed."""
    p: int
    k: int
    M: np.ndarray
    v: np.ndarray

    @classmethod
    def of(cls, elements: Sequence[GammaElement]) -> "GammaBatch":
        g = elements[0]
        M = np.array([e.M for e in elements], dtype=np.int64).reshape(len(elements), g.n, g.n)
        v = np.array([e.v for e in elements], dtype=np.int64).reshape(len(elements), g.n)
        return cls(g.p, g.k, M, v)

    @property
    def modulus(self) -> int:
        return self.p ** (self.k + 1)

    def __len__(self):
        return self.M.shape[0]

    def inverse_matrices(self) -> np.ndarray:
        return _unipotent_inverse(self.M, self.p, self.modulus)

    def times(self, other: "GammaBatch") -> "GammaBatch":
        """Elementwise product (broadcasting a batch of one)."""
        q = self.modulus
        N_inv = other.inverse_matrices()
        M = np.matmul(self.M, other.M) % q
        v = (np.einsum("bij,bj->bi", np.broadcast_to(N_inv, (max(len(self), len(other)),) + N_inv.shape[1:]),
                       np.broadcast_to(self.v, (max(len(self), len(other)), self.v.shape[1])))
             + other.v) % q
        return GammaBatch(self.p, self.k, M, v)

    def power(self, e: int) -> "GammaBatch":
        n = self.M.shape[1]
        result = GammaBatch(self.p, self.k,
                            np.broadcast_to(np.eye(n, dtype=np.int64), self.M.shape).copy(),
                            np.zeros_like(self.v))
        for _ in range(e):
            result = result.times(self)
        return result

    def inverse(self) -> "GammaBatch":
        q = self.modulus
        return GammaBatch(self.p, self.k, self.inverse_matrices(), np.einsum("bij,bj->bi", self.M, -self.v) % q)

    def is_identity(self) -> np.ndarray:
        n = self.M.shape[1]
        return ((self.M == np.eye(n, dtype=np.int64)).all(axis=(1, 2)) & (self.v == 0).all(axis=1))

    def take(self, index: int) -> "GammaBatch":
        return GammaBatch(self.p, self.k, self.M[index:index + 1], self.v[index:index + 1])


def gamma_closure_check(n: int, k: int, p: int, samples: int = 500, seed: int = 0) -> bool:
    """Enumeration has the predicted size and sampled products stay inside it."""
    elements = list(gamma_enumerate(n, k, p))
    if len(elements) != gamma_order(n, k, p):
        return False
    members = set(elements)
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.choice(elements), rng.choice(elements)
        if a * b not in members or a.inverse() not in members:
            return False
    return True


# =============================================================================
# 3. UNIFORM TOWER
# =============================================================================

def _require_odd(p: int):
    if p % 2 == 0:
        raise ContractViolation("the exponent-p description of Omega_1 needs p odd")


def omega1_and_kernel_check(n: int, k: int, p: int, budget: int = GAMMA_ENUMERATION_BUDGET) -> bool:
    """{g : g^p = 1} equals Ker(pi) = {(1 + p^k B, p^k y)} and is central, exhaustively."""
    _require_odd(p)
    elements = list(gamma_enumerate(n, k, p, budget))
    batch = GammaBatch.of(elements)
    exponent_p = batch.power(p).is_identity()
    in_kernel = np.array([g.depth() >= k for g in elements])
    if not np.array_equal(exponent_p, in_kernel):
        bad = int(np.flatnonzero(exponent_p != in_kernel)[0])
        logger.debug("Omega_1 and the kernel differ at %s", elements[bad])
        return False
    for index in np.flatnonzero(in_kernel):
        g = batch.take(int(index))
        left = g.times(batch)
        right = batch.times(g)
        if not (np.array_equal(left.M, right.M) and np.array_equal(left.v, right.v)):
            return False
    return True


def p_power_map(g: GammaElement) -> GammaElement:
    """Omega_1(Gamma_{n,k-1}) -> Omega_1(Gamma_{n,k}): lift, then take the p-th power."""
    if not (g ** g.p).is_identity():
        raise ContractViolation("input is not of exponent p")
    return g.lift(g.k + 1) ** g.p


def p_power_bijection_check(n: int, k: int, p: int, budget: int = GAMMA_ENUMERATION_BUDGET) -> bool:
    """The p-power map from level k - 1 hits every element of Omega_1 at level k exactly once."""
    _require_odd(p)
    if k < 2:
        raise ContractViolation("the tower map needs k >= 2")
    source = list(gamma_enumerate(n, k - 1, p, budget, depth=k - 1))
    images = [p_power_map(g) for g in source]
    target = set(gamma_enumerate(n, k, p, budget, depth=k))
    return len(set(images)) == len(source) and set(images) == target


# =============================================================================
# 4. LIE BRACKET AND STRUCTURE CONSTANTS
# =============================================================================

@dataclass(frozen=True)
class LiePair:
    """(A, x) over F_p."""
    A: IntRows
    x: Vector
    p: int

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(tuple(int(a) % self.p for a in row) for row in self.A))
        object.__setattr__(self, "x", tuple(int(a) % self.p for a in self.x))

    @property
    def n(self) -> int:
        return len(self.x)

    @classmethod
    def zero(cls, n: int, p: int) -> "LiePair":
        return cls(((0,) * n,) * n, (0,) * n, p)

    @classmethod
    def basis_element(cls, label: BasisLabel, n: int, p: int) -> "LiePair":
        A = [[0] * n for _ in range(n)]
        x = [0] * n
        if len(label) == 2:
            A[label[0] - 1][label[1] - 1] = 1
        else:
            x[label[0] - 1] = 1
        return cls(tuple(map(tuple, A)), tuple(x), p)

    def __add__(self, other: "LiePair") -> "LiePair":
        A = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.A, other.A))
        return LiePair(A, tuple(a + b for a, b in zip(self.x, other.x)), self.p)

    def scale(self, c: int) -> "LiePair":
        return LiePair(tuple(tuple(c * a for a in row) for row in self.A), tuple(c * a for a in self.x), self.p)

    def coordinates(self) -> Dict[BasisLabel, int]:
        out = {(i + 1, j + 1): a for i, row in enumerate(self.A) for j, a in enumerate(row) if a}
        out.update({(l + 1,): a for l, a in enumerate(self.x) if a})
        return out

    def gamma_lift(self, k: int) -> GammaElement:
        return GammaElement.from_lie(self.A, self.x, self.p, k)


def bracket(a: LiePair, b: LiePair) -> LiePair:
    """[(A, x), (B, y)] = (AB - BA, Ay - Bx)."""
    if (a.n, a.p) != (b.n, b.p):
        raise ContractViolation("bracket of pairs with different n or p")
    A, B = np.array(a.A, dtype=np.int64), np.array(b.A, dtype=np.int64)
    x, y = np.array(a.x, dtype=np.int64), np.array(b.x, dtype=np.int64)
    return LiePair(tuple(map(tuple, (A @ B - B @ A) % a.p)), tuple((A @ y - B @ x) % a.p), a.p)


def lie_elements(n: int, p: int) -> List[LiePair]:
    return [LiePair(A, x, p) for A, x in _lie_parts(n, 0, p)]


def bracket_matches_commutator(n: int, p: int, budget: int = GAMMA_ENUMERATION_BUDGET ** 2) -> bool:
    """
    For every pair, lift (1 + pA, px) and (1 + pB, py) to mod p^3; the
    commutator is (1 + p^2 C, p^2 z) and (C, z) mod p must equal the bracket.
    """
    pairs = lie_elements(n, p)
    if len(pairs) ** 2 > budget:
        raise BudgetExceeded(f"bracket pairs for n={n}, p={p}", len(pairs) ** 2, budget)
    lifts = GammaBatch.of([a.gamma_lift(2) for a in pairs])
    inverses = lifts.inverse()
    q = p ** 3
    for index, a in enumerate(pairs):
        g = lifts.take(index)
        g_inv = inverses.take(index)
        commutator = g.times(lifts).times(g_inv).times(inverses)
        C = (commutator.M - np.eye(n, dtype=np.int64)) % q
        z = commutator.v % q
        if (C % (p * p)).any() or (z % (p * p)).any():
            return False
        expected = [bracket(a, b) for b in pairs]
        C_exp = np.array([e.A for e in expected], dtype=np.int64).reshape(len(pairs), n, n)
        z_exp = np.array([e.x for e in expected], dtype=np.int64).reshape(len(pairs), n)
        if not (np.array_equal((C // (p * p)) % p, C_exp) and np.array_equal((z // (p * p)) % p, z_exp)):
            return False
    return True


def basis_labels(n: int) -> List[BasisLabel]:
    """e_11, e_12, ..., e_nn, then e_1, ..., e_n."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)] + [(l,) for l in range(1, n + 1)]


def _delta(a: int, b: int) -> int:
    return int(a == b)


def _formula_constant(a: BasisLabel, b: BasisLabel, c: BasisLabel) -> int:
    if len(a) == 2 and len(b) == 2:
        (i, j), (l, m) = a, b
        if len(c) == 2:
            t, u = c
            return _delta(i, t) * _delta(u, m) * _delta(j, l) - _delta(t, l) * _delta(u, j) * _delta(i, m)
        return 0
    if len(a) == 2 and len(b) == 1:
        (i, j), (l,) = a, b
        return _delta(c[0], i) * _delta(j, l) if len(c) == 1 else 0
    if len(a) == 1 and len(b) == 2:
        (i,), (l, m) = a, b
        return -_delta(c[0], l) * _delta(i, m) if len(c) == 1 else 0
    return 0


@lru_cache(maxsize=64)
def structure_constants(n: int, p: int) -> Dict[Tuple[BasisLabel, BasisLabel], Dict[BasisLabel, int]]:
    """c_{ab}^c mod p from the delta formulas; only nonzero entries are kept."""
    if n < 1 or n > 4:
        raise ContractViolation("structure constants are tabulated for 1 <= n <= 4")
    labels = basis_labels(n)
    table = {}
    for a in labels:
        for b in labels:
            row = {c: _formula_constant(a, b, c) % p for c in labels}
            table[(a, b)] = {c: v for c, v in row.items() if v}
    return table


def structure_constants_check(n: int, p: int) -> bool:
    """Delta formulas agree with the bracket on every pair of basis elements."""
    table = structure_constants(n, p)
    for (a, b), expected in table.items():
        value = bracket(LiePair.basis_element(a, n, p), LiePair.basis_element(b, n, p))
        if value.coordinates() != expected:
            return False
    return True


def jacobi_check(n: int, p: int, samples: int = 300, seed: int = 0) -> bool:
    rng = random.Random(seed)

    def random_pair():
        return LiePair(tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n)),
                       tuple(rng.randrange(p) for _ in range(n)), p)

    zero = LiePair.zero(n, p)
    for _ in range(samples):
        a, b, c = random_pair(), random_pair(), random_pair()
        total = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
        if total != zero:
            return False
    return True


# =============================================================================
# 5. BOCKSTEIN
# =============================================================================

def _name(prefix: str, label: BasisLabel) -> str:
    return prefix + "_" + "".join(str(i) for i in label)


@lru_cache(maxsize=64)
def bockstein_algebra(n: int, p: int) -> GradedAlgebra:
    """Lambda(x_ij, x_l) (x) F_p[s_ij, s_l]; generator order follows ``basis_labels``."""
    labels = basis_labels(n)
    gens = [Generator(_name("x", a), 1, exterior=True) for a in labels]
    gens += [Generator(_name("s", a), 2) for a in labels]
    return GradedAlgebra(tuple(gens), p)


def _x(B: GradedAlgebra, *label: int) -> GradedElement:
    return B.gen(_name("x", label))


def _s(B: GradedAlgebra, *label: int) -> GradedElement:
    return B.gen(_name("s", label))


@lru_cache(maxsize=64)
def bockstein_images_explicit(n: int, p: int) -> Dict[str, GradedElement]:
    """Generator images read off the closed formulas."""
    B = bockstein_algebra(n, p)
    images: Dict[str, GradedElement] = {}
    rng = range(1, n + 1)
    for t in rng:
        for u in rng:
            start = t if t < u else t + 1
            stop = t if t > u else t - 1
            value = B.zero()
            for i in range(start, n + 1):
                value = value - _x(B, t, i) * _x(B, i, u)
            for i in range(1, stop + 1):
                value = value + _x(B, i, u) * _x(B, t, i)
            images[_name("x", (t, u))] = value
            images[_name("s", (t, u))] = sum(
                (_s(B, t, i) * _x(B, i, u) - _s(B, i, u) * _x(B, t, i) for i in rng), B.zero())
        images[_name("x", (t,))] = sum((-(_x(B, t, i) * _x(B, i)) for i in rng), B.zero())
        images[_name("s", (t,))] = sum(
            (_s(B, t, i) * _x(B, i) - _s(B, i) * _x(B, t, i) for i in rng), B.zero())
    return images


@lru_cache(maxsize=64)
def bockstein_images_generic(n: int, p: int) -> Dict[str, GradedElement]:
    """beta(x_t) = -sum_{a<b} c_ab^t x_a x_b and beta(s_t) = sum_{a,b} c_ab^t s_a x_b."""
    B = bockstein_algebra(n, p)
    labels = basis_labels(n)
    table = structure_constants(n, p)
    images = {_name(kind, c): B.zero() for kind in ("x", "s") for c in labels}
    for ia, a in enumerate(labels):
        for ib, b in enumerate(labels):
            for c, value in table[(a, b)].items():
                if ia < ib:
                    images[_name("x", c)] = images[_name("x", c)] - (B.gen(_name("x", a)) * B.gen(_name("x", b))).scale(value)
                images[_name("s", c)] = images[_name("s", c)] + (B.gen(_name("s", a)) * B.gen(_name("x", b))).scale(value)
    return images


def bockstein(e: GradedElement, n: int, p: int, generic: bool = False) -> GradedElement:
    """The first Bockstein as a derivation on Lambda(x) (x) F_p[s]."""
    if e.algebra != bockstein_algebra(n, p):
        raise ContractViolation("element does not live in the congruence cohomology algebra")
    images = bockstein_images_generic(n, p) if generic else bockstein_images_explicit(n, p)
    return apply_derivation(e, images)


def bockstein_is_extended(p: int) -> bool:
    return p in BOCKSTEIN_EXTENDED_PRIMES


def bockstein_square_zero(n: int, p: int) -> bool:
    B = bockstein_algebra(n, p)
    return all(bockstein(bockstein(B.gen(g.name), n, p), n, p).is_zero() for g in B.generators)


def bockstein_definitions_agree(n: int, p: int) -> bool:
    return bockstein_images_explicit(n, p) == bockstein_images_generic(n, p)


# =============================================================================
# 6. ROOTS AND ALMOST POWERFUL EMBEDDING
# =============================================================================

MIKE_VARIANTS = {
    # variant: (prime, base step, target step, exponent)
    "odd": (None, 1, 2, None),
    "square": (2, 4, 8, 2),
    "fourth": (2, 4, 16, 4),
}


def mike_lemma_solve(a: int, p: int, k: int, variant: Optional[str] = None,
                     limit: int = ROOT_SEARCH_LIMIT) -> int:
    """
    Smallest b >= 0 with (1 + step b)^e == 1 + target a (mod p^{k+1}):
    p odd: (1 + pb)^p == 1 + p^2 a; p = 2: (1 + 4b)^2 == 1 + 8a or (1 + 4b)^4 == 1 + 16a.
    """
    variant = variant or ("odd" if p % 2 else "square")
    if variant not in MIKE_VARIANTS:
        raise ContractViolation(f"unknown variant {variant!r}")
    prime, step, target, exponent = MIKE_VARIANTS[variant]
    if prime is not None and p != prime:
        raise ContractViolation(f"variant {variant!r} needs p = {prime}")
    if variant == "odd":
        if p % 2 == 0:
            raise ContractViolation("variant 'odd' needs p odd")
        step, target, exponent = p, p * p, p
    q = p ** (k + 1)
    goal = (1 + target * a) % q
    for b in range(min(q, limit)):
        if pow(1 + step * b, exponent, q) == goal:
            return b
    raise VerificationFailure("root search exhausted", {"a": a, "p": p, "k": k, "variant": variant})


def _commutator(g: GammaElement, h: GammaElement) -> GammaElement:
    return g * h * g.inverse() * h.inverse()


def almost_powerfully_embedded_check(n: int, k: int, p: int,
                                     budget: int = GAMMA_ENUMERATION_BUDGET) -> bool:
    """
    p odd: [G, N] lies in N^p with N = G. p = 2: N = {(1 + 4A, 4x)},
    [G, N] in N^2 and [N, N] in N^4.
    """
    G = list(gamma_enumerate(n, k, p, budget))
    identity = GammaElement.identity(n, p, k)
    mul = lambda a, b: a * b
    if p % 2:
        N = G
        powers = closure({g ** p for g in N}, mul, identity, budget, "N^p")
        return all(_commutator(g, h) in powers for g in G for h in N)
    if k < 2:
        raise ContractViolation("p = 2 needs k >= 2")
    N = list(gamma_enumerate(n, k, p, budget, depth=2))
    squares = closure({g ** 2 for g in N}, mul, identity, budget, "N^2")
    fourths = closure({g ** 4 for g in N}, mul, identity, budget, "N^4")
    return (all(_commutator(g, h) in squares for g in G for h in N)
            and all(_commutator(g, h) in fourths for g in N for h in N))

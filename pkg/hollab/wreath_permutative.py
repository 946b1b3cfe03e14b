"""
hollab - Wreath Products and Permutative Categories
===================================================

Wreath products P wr X for X one of G (translations), Aut(G), Hol(G) or a
smaller wreath product, with elements (sigma, x_1, ..., x_q) and

    (sigma, x)(tau, y) = (sigma tau, (x_{tau^-1(i)} y_i)_i)

Permutations multiply left to right (sympy): (sigma tau)(i) = tau(sigma(i)).
In that convention (sigma, h) acts on tuples by

    (sigma, h) . a = (h_{sigma(k)} . a_{sigma(k)})_k

which is what ``embed_i`` and ``embed_j`` write down as matrices and
holomorph pairs on G^q.

The permutative categories have objects n >= 0 and endomorphisms only:
Aut(G^n), Hol(G^n) or the row-form matrices of Hol(R^n) in GL(n+1, R).
The tensor m [] n = m + n is block sum and c(m, n) swaps the two blocks.
"""
from __future__ import annotations

import itertools
import logging
import random
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Any, Callable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from .exceptions import BudgetExceeded, ContractViolation
from .holomorph_core import (
    FiniteAbelianGroup,
    HolElement,
    hol_identity,
    hol_inv,
    hol_mul,
    hol_to_matrix,
    pullback_extension,
)
from .modular_linalg import IntRows, ResidueMatrix, det_int, enumerate_gl, gl_order, identity_rows, prime_power
from .reference_data import (
    DEFAULT_SEED,
    EXHAUSTIVE_BUDGET,
    HOM_SET_ENUMERATION_LIMIT,
    MORPHISM_SAMPLES,
    SAMPLE_SIZE,
    get_thread_cap,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def power_group(group: FiniteAbelianGroup, q: int) -> FiniteAbelianGroup:
    """G^q with the factors laid out one after another."""
    return FiniteAbelianGroup(group.moduli * q)


def _identity_permutation(q: int) -> Permutation:
    return Permutation(list(range(q)))


def _random_permutation(q: int, rng: random.Random) -> Permutation:
    points = list(range(q))
    rng.shuffle(points)
    return Permutation(points)


# =============================================================================
# 1. FACTORS
# =============================================================================

class TranslationFactor:
    """G itself, acting on G by translation."""

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group

    def identity(self) -> Vector:
        return self.group.zero

    def multiply(self, a: Vector, b: Vector) -> Vector:
        return self.group.add(a, b)

    def act(self, a: Vector, point: Vector) -> Vector:
        return self.group.add(a, point)

    def elements(self) -> List[Vector]:
        return self.group.elements()

    def order(self) -> int:
        return self.group.order

    def random(self, rng: random.Random) -> Vector:
        return tuple(rng.randrange(m) for m in self.group.moduli)


class AutFactor:
    """Aut(G), composed as maps."""

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group
        self._elements = None

    def identity(self) -> IntRows:
        return self.group.identity_aut

    def multiply(self, f: IntRows, g: IntRows) -> IntRows:
        return self.group.compose(f, g)

    def act(self, f: IntRows, point: Vector) -> Vector:
        return self.group.apply(f, point)

    def elements(self) -> List[IntRows]:
        if self._elements is None:
            self._elements = self.group.automorphisms()
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def random(self, rng: random.Random) -> IntRows:
        return rng.choice(self.elements())


class HolFactor:
    """Hol(G) with the pair product."""

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group
        self._auts = AutFactor(group)

    def identity(self) -> HolElement:
        return hol_identity(self.group)

    def multiply(self, a: HolElement, b: HolElement) -> HolElement:
        return hol_mul(a, b)

    def act(self, h: HolElement, point: Vector) -> Vector:
        return h.act(point)

    def elements(self) -> List[HolElement]:
        return [HolElement(self.group, f, x) for f in self._auts.elements() for x in self.group.elements()]

    def order(self) -> int:
        return self._auts.order() * self.group.order

    def random(self, rng: random.Random) -> HolElement:
        return HolElement(self.group, self._auts.random(rng),
                          tuple(rng.randrange(m) for m in self.group.moduli))


class WreathFactor:
    """S_n wr X as the factor of a larger wreath product."""

    def __init__(self, n: int, inner: Any):
        self.n = n
        self.inner = inner
        self.group = power_group(inner.group, n)

    def identity(self) -> "WreathElement":
        return WreathElement.identity(self.n, self.inner)

    def multiply(self, a: "WreathElement", b: "WreathElement") -> "WreathElement":
        return wreath_mul(a, b)

    def act(self, w: "WreathElement", point: Vector) -> Vector:
        return w.act(point)

    def elements(self) -> List["WreathElement"]:
        return wreath_elements(self.n, self.inner)

    def order(self) -> int:
        return factorial(self.n) * self.inner.order() ** self.n

    def random(self, rng: random.Random) -> "WreathElement":
        return WreathElement(_random_permutation(self.n, rng),
                             tuple(self.inner.random(rng) for _ in range(self.n)), self.inner)


# =============================================================================
# 2. WREATH ELEMENTS
# =============================================================================

@dataclass(frozen=True)
class WreathElement:
    sigma: Permutation
    parts: Tuple[Any, ...]
    factor: Any = field(compare=False, repr=False)

    def __post_init__(self):
        if self.sigma.size != len(self.parts):
            raise ContractViolation(
                f"permutation on {self.sigma.size} points with {len(self.parts)} parts")

    @property
    def q(self) -> int:
        return len(self.parts)

    @classmethod
    def identity(cls, q: int, factor: Any) -> "WreathElement":
        return cls(_identity_permutation(q), tuple(factor.identity() for _ in range(q)), factor)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return wreath_mul(self, other)

    def act(self, point: Vector) -> Vector:
        """On G^q, split into q blocks of the factor's rank."""
        width = self.factor.group.rank
        blocks = [point[k * width:(k + 1) * width] for k in range(self.q)]
        image = []
        for k in range(self.q):
            s = self.sigma.array_form[k]
            image.extend(self.factor.act(self.parts[s], tuple(blocks[s])))
        return tuple(image)


def wreath_mul(a: WreathElement, b: WreathElement) -> WreathElement:
    """(sigma, x)(tau, y) = (sigma tau, (x_{tau^-1(i)} y_i)_i)."""
    if a.q != b.q:
        raise ContractViolation(f"wreath elements on {a.q} and {b.q} points")
    if a.factor.group != b.factor.group or type(a.factor) is not type(b.factor):
        raise ContractViolation("wreath elements over different factors")
    tau_inv = (~b.sigma).array_form
    parts = tuple(a.factor.multiply(a.parts[tau_inv[i]], b.parts[i]) for i in range(a.q))
    return WreathElement(a.sigma * b.sigma, parts, a.factor)


def wreath_elements(q: int, factor: Any, budget: int = EXHAUSTIVE_BUDGET) -> List[WreathElement]:
    size = factorial(q) * factor.order() ** q
    if size > budget:
        raise BudgetExceeded(f"S_{q} wreath product", size, budget)
    perms = [Permutation(list(p)) for p in itertools.permutations(range(q))]
    pieces = factor.elements()
    return [WreathElement(s, parts, factor) for s in perms for parts in itertools.product(pieces, repeat=q)]


def wreath_pairs(q: int, factor: Any, samples: int = SAMPLE_SIZE, seed: int = DEFAULT_SEED,
                 budget: int = EXHAUSTIVE_BUDGET) -> List[Tuple[WreathElement, WreathElement]]:
    """All pairs when their count fits the budget, else seeded samples."""
    size = factorial(q) * factor.order() ** q
    if size * size <= budget:
        elements = wreath_elements(q, factor, budget)
        return [(a, b) for a in elements for b in elements]
    rng = random.Random(seed)
    make = WreathFactor(q, factor).random
    return [(make(rng), make(rng)) for _ in range(samples)]


# =============================================================================
# 3. EMBEDDINGS INTO Aut(G^q) AND Hol(G^q)
# =============================================================================

def permutation_blocks(sigma: Permutation, blocks: Sequence[IntRows], group: FiniteAbelianGroup) -> IntRows:
    """Matrix on G^q whose block row k is blocks[sigma(k)] in block column sigma(k)."""
    q, r = sigma.size, group.rank
    rows = [[0] * (q * r) for _ in range(q * r)]
    for k in range(q):
        s = sigma.array_form[k]
        for a in range(r):
            for b in range(r):
                rows[k * r + a][s * r + b] = blocks[s][a][b]
    return tuple(map(tuple, rows))


def permute_factors(sigma: Permutation, group: FiniteAbelianGroup) -> IntRows:
    """phi(sigma)(x)_k = x_{sigma(k)}."""
    return permutation_blocks(sigma, [group.identity_aut] * sigma.size, group)


def embed_i(w: WreathElement) -> IntRows:
    """S_q wr Aut(G) -> Aut(G^q)."""
    if not isinstance(w.factor, AutFactor):
        raise ContractViolation("embed_i needs parts in Aut(G)")
    return permutation_blocks(w.sigma, w.parts, w.factor.group)


def embed_j(w: WreathElement) -> HolElement:
    """S_q wr Hol(G) -> Hol(G^q); translation parts are read as (1, x)."""
    group = w.factor.group
    if isinstance(w.factor, HolFactor):
        auts = [h.aut for h in w.parts]
        trans = [h.trans for h in w.parts]
    elif isinstance(w.factor, TranslationFactor):
        auts = [group.identity_aut] * w.q
        trans = list(w.parts)
    else:
        raise ContractViolation("embed_j needs parts in G or Hol(G)")
    return HolElement(power_group(group, w.q), permutation_blocks(w.sigma, auts, group),
                      tuple(a for x in trans for a in x))


def _embedding(w: WreathElement) -> Tuple[Callable, Callable, Any]:
    if isinstance(w.factor, AutFactor):
        target = power_group(w.factor.group, w.q)
        return embed_i, target.compose, target.identity_aut
    target = power_group(w.factor.group, w.q)
    return embed_j, hol_mul, hol_identity(target)


def _pair_is_multiplicative(pair: Tuple[WreathElement, WreathElement]) -> bool:
    a, b = pair
    embed, mul, _ = _embedding(a)
    return embed(wreath_mul(a, b)) == mul(embed(a), embed(b))


def embedding_homomorphism_check(q: int, factor: Any, samples: int = SAMPLE_SIZE,
                                 seed: int = DEFAULT_SEED) -> bool:
    """embed(ab) = embed(a) embed(b) on all pairs or seeded samples, and only 1 maps to 1."""
    pairs = wreath_pairs(q, factor, samples, seed)
    with ThreadPoolExecutor(max_workers=get_thread_cap()) as pool:
        if not all(pool.map(_pair_is_multiplicative, pairs)):
            return False
    identity = WreathElement.identity(q, factor)
    embed, _, target_identity = _embedding(identity)
    if embed(identity) != target_identity:
        return False
    candidates = {a for pair in pairs for a in pair}
    return all(w == identity for w in candidates if embed(w) == target_identity)


def embedding_image(q: int, factor: Any, budget: int = EXHAUSTIVE_BUDGET) -> set:
    elements = wreath_elements(q, factor, budget)
    embed, _, _ = _embedding(elements[0])
    return {embed(w) for w in elements}


def wreath_action_check(q: int, factor: Any, samples: int = SAMPLE_SIZE, seed: int = DEFAULT_SEED) -> bool:
    """The product acts as composition on G^q: (ab).pt = a.(b.pt)."""
    points = power_group(factor.group, q).elements()
    for a, b in wreath_pairs(q, factor, samples, seed):
        ab = wreath_mul(a, b)
        if any(ab.act(pt) != a.act(b.act(pt)) for pt in points):
            return False
    return True


def to_permutation(w: WreathElement, points: Sequence[Vector]) -> Permutation:
    """pt -> w^-1 . pt on the listed points, so sympy products match wreath products."""
    index = {pt: i for i, pt in enumerate(points)}
    images = [None] * len(points)
    for i, pt in enumerate(points):
        images[index[w.act(pt)]] = i
    return Permutation(images)


def base_inclusion_check(q: int, group: FiniteAbelianGroup, budget: int = 81) -> bool:
    """embed_j restricted to the base (1, (1, x_i)) is x -> (1, x)."""
    target = power_group(group, q)
    if target.order > budget:
        raise BudgetExceeded(f"{target}", target.order, budget)
    factor = HolFactor(group)
    ident = _identity_permutation(q)
    for x in target.elements():
        r = group.rank
        parts = tuple(HolElement(group, group.identity_aut, x[k * r:(k + 1) * r]) for k in range(q))
        if embed_j(WreathElement(ident, parts, factor)) != HolElement(target, target.identity_aut, x):
            return False
    return True


# =============================================================================
# 4. PULLBACK DESCRIPTION
# =============================================================================

def wreath_pullback_check(generators: Sequence[Permutation], group: FiniteAbelianGroup,
                          q: Optional[int] = None, budget: int = EXHAUSTIVE_BUDGET) -> bool:
    """
    P wr G is the pullback of P -> Aut(G^q) <- Hol(G^q): the split extension
    classified by phi has the same order, (sigma, x) -> (sigma, x) is a
    multiplicative bijection onto it, and theta agrees with embed_j.
    """
    q = q or (generators[0].size if generators else 1)
    gens = [g for g in generators if g.size == q] or [_identity_permutation(q)]
    target = power_group(group, q)
    extension = pullback_extension(target, {g: permute_factors(g, group) for g in gens}, budget)
    factor = TranslationFactor(group)
    r = group.rank
    wreath = [
        WreathElement(h, tuple(x[k * r:(k + 1) * r] for k in range(q)), factor)
        for h, x in extension.elements()
    ]
    if len(wreath) != extension.order or extension.order != len(extension.action) * group.order ** q:
        return False

    def flat(w: WreathElement):
        return (w.sigma, tuple(a for part in w.parts for a in part))

    rng = random.Random(DEFAULT_SEED)
    pairs = [(a, b) for a in wreath for b in wreath] if len(wreath) ** 2 <= budget else \
        [(rng.choice(wreath), rng.choice(wreath)) for _ in range(SAMPLE_SIZE)]
    for a, b in pairs:
        if flat(wreath_mul(a, b)) != extension.multiply(flat(a), flat(b)):
            return False
    return all(extension.to_holomorph(flat(w)) == embed_j(w) for w in wreath)


# =============================================================================
# 5. DOUBLE WREATH
# =============================================================================

def flatten_double(w: WreathElement) -> WreathElement:
    """S_q wr (S_n wr X) -> S_{qn} wr X by (i, a) -> (sigma(i), tau_{sigma(i)}(a))."""
    if not isinstance(w.factor, WreathFactor):
        raise ContractViolation("flatten needs parts that are wreath elements")
    n = w.factor.n
    image = []
    for i in range(w.q):
        s = w.sigma.array_form[i]
        tau = w.parts[s].sigma.array_form
        image.extend(s * n + tau[a] for a in range(n))
    parts = tuple(piece for inner in w.parts for piece in inner.parts)
    return WreathElement(Permutation(image), parts, w.factor.inner)


def double_wreath_check(q: int = 2, n: int = 2, group: Optional[FiniteAbelianGroup] = None,
                        samples: int = SAMPLE_SIZE, seed: int = DEFAULT_SEED) -> bool:
    """
    S_q wr S_n wr Hol(G) -> Hol(G^{qn}) two ways: embed the inner parts first,
    or flatten to S_{qn} wr Hol(G) and embed once. Flattening is also
    checked to be multiplicative.
    """
    group = group or FiniteAbelianGroup.cyclic(2)
    inner = HolFactor(group)
    outer = WreathFactor(n, inner)
    middle = HolFactor(power_group(group, n))
    rng = random.Random(seed)
    for _ in range(samples):
        wa = WreathElement(_random_permutation(q, rng), tuple(outer.random(rng) for _ in range(q)), outer)
        wb = WreathElement(_random_permutation(q, rng), tuple(outer.random(rng) for _ in range(q)), outer)
        for w in (wa, wb):
            stepwise = embed_j(WreathElement(w.sigma, tuple(embed_j(part) for part in w.parts), middle))
            if stepwise != embed_j(flatten_double(w)):
                return False
        if flatten_double(wreath_mul(wa, wb)) != wreath_mul(flatten_double(wa), flatten_double(wb)):
            return False
    return True


# =============================================================================
# 6. PERMUTATIVE CATEGORIES
# =============================================================================

def _block_sum(a: IntRows, b: IntRows) -> IntRows:
    na, nb = len(a), len(b)
    return tuple(tuple(row) + (0,) * nb for row in a) + tuple((0,) * na + tuple(row) for row in b)


def _swap(m: int, n: int, width: int) -> IntRows:
    """Matrix of (x, y) -> (y, x) for x in m blocks and y in n blocks."""
    size = (m + n) * width
    rows = [[0] * size for _ in range(size)]
    for j in range(n * width):
        rows[j][m * width + j] = 1
    for i in range(m * width):
        rows[n * width + i][i] = 1
    return tuple(map(tuple, rows))


class PermutativeCategory(ABC):
    """Objects n >= 0 and the endomorphism groups End(n) of one family."""
    name = "category"

    def __init__(self, group: FiniteAbelianGroup):
        if not group.is_homocyclic():
            raise ContractViolation("permutative checks need a homocyclic G")
        self.group = group
        self.modulus = group.moduli[0] if group.rank else 1

    def width(self, n: int) -> int:
        return n * self.group.rank

    def _gl(self, n: int, rng: Optional[random.Random]) -> List[IntRows]:
        size = self.width(n)
        if size == 0:
            return [()]
        pp = prime_power(self.modulus)
        count = gl_order(size, *pp)
        if count <= HOM_SET_ENUMERATION_LIMIT or rng is None:
            return list(enumerate_gl(size, self.modulus, max(count, HOM_SET_ENUMERATION_LIMIT)))
        sample = []
        while len(sample) < MORPHISM_SAMPLES:
            rows = tuple(tuple(rng.randrange(self.modulus) for _ in range(size)) for _ in range(size))
            if gcd(det_int(rows), self.modulus) == 1:
                sample.append(rows)
        return sample

    @abstractmethod
    def hom_size(self, n: int) -> int:
        raise NotImplementedError

    @abstractmethod
    def morphisms(self, n: int, rng: random.Random) -> List:
        raise NotImplementedError

    @abstractmethod
    def identity(self, n: int):
        raise NotImplementedError

    @abstractmethod
    def compose(self, a, b):
        """a o b: b first."""
        raise NotImplementedError

    @abstractmethod
    def tensor(self, a, b):
        raise NotImplementedError

    @abstractmethod
    def symmetry(self, m: int, n: int):
        raise NotImplementedError


class AutPowers(PermutativeCategory):
    name = "aut-powers"

    def hom_size(self, n: int) -> int:
        return gl_order(self.width(n), *prime_power(self.modulus)) if self.width(n) else 1

    def morphisms(self, n: int, rng: random.Random) -> List[IntRows]:
        return self._gl(n, rng)

    def identity(self, n: int) -> IntRows:
        return identity_rows(self.width(n))

    def compose(self, a: IntRows, b: IntRows) -> IntRows:
        size = len(a)
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(size)) % self.modulus
                           for j in range(size)) for i in range(size))

    def tensor(self, a: IntRows, b: IntRows) -> IntRows:
        return _block_sum(a, b)

    def symmetry(self, m: int, n: int) -> IntRows:
        return _swap(m, n, self.group.rank)


class HolPowers(PermutativeCategory):
    name = "hol-powers"

    def hom_size(self, n: int) -> int:
        return AutPowers(self.group).hom_size(n) * self.group.order ** n

    def object_group(self, n: int) -> FiniteAbelianGroup:
        return power_group(self.group, n)

    def morphisms(self, n: int, rng: random.Random) -> List[HolElement]:
        target = self.object_group(n)
        auts = self._gl(n, None if self.hom_size(n) <= HOM_SET_ENUMERATION_LIMIT else rng)
        if self.hom_size(n) <= HOM_SET_ENUMERATION_LIMIT:
            return [HolElement(target, f, x) for f in auts for x in target.elements()]
        return [HolElement(target, f, tuple(rng.randrange(m) for m in target.moduli)) for f in auts]

    def identity(self, n: int) -> HolElement:
        return hol_identity(self.object_group(n))

    def compose(self, a: HolElement, b: HolElement) -> HolElement:
        return hol_mul(a, b)

    def tensor(self, a: HolElement, b: HolElement) -> HolElement:
        target = FiniteAbelianGroup(a.group.moduli + b.group.moduli)
        return HolElement(target, _block_sum(a.aut, b.aut), a.trans + b.trans)

    def symmetry(self, m: int, n: int) -> HolElement:
        target = self.object_group(m + n)
        return HolElement(target, _swap(m, n, self.group.rank), target.zero)


class HolMatrix(PermutativeCategory):
    """Row-form matrices [[1, x^T], [0, (M^-1)^T]] over R = Z/m."""
    name = "hol-matrix"

    def __init__(self, modulus: int):
        super().__init__(FiniteAbelianGroup.cyclic(modulus))
        self.modulus = modulus
        self._hol = HolPowers(self.group)

    def hom_size(self, n: int) -> int:
        return self._hol.hom_size(n)

    def to_matrix(self, h: HolElement) -> ResidueMatrix:
        if h.group.rank == 0:
            return ResidueMatrix.identity(1, self.modulus)
        return hol_to_matrix(h, "row")

    def morphisms(self, n: int, rng: random.Random) -> List[ResidueMatrix]:
        return [self.to_matrix(h) for h in self._hol.morphisms(n, rng)]

    def identity(self, n: int) -> ResidueMatrix:
        return ResidueMatrix.identity(n + 1, self.modulus)

    def compose(self, a: ResidueMatrix, b: ResidueMatrix) -> ResidueMatrix:
        return a @ b

    def tensor(self, a: ResidueMatrix, b: ResidueMatrix) -> ResidueMatrix:
        """[[1, x, y], [0, A, 0], [0, 0, B]]."""
        m, n = a.rows - 1, b.rows - 1
        rows = [(1,) + a.entries[0][1:] + b.entries[0][1:]]
        rows += [(0,) + a.entries[i][1:] + (0,) * n for i in range(1, m + 1)]
        rows += [(0,) + (0,) * m + b.entries[i][1:] for i in range(1, n + 1)]
        return ResidueMatrix(tuple(rows), self.modulus)

    def symmetry(self, m: int, n: int) -> ResidueMatrix:
        # the swap is its own inverse transpose, so the row form keeps it as is
        return ResidueMatrix(_block_sum(((1,),), _swap(m, n, 1)), self.modulus)

    def agrees_with_hol(self, m: int, n: int, rng: random.Random) -> bool:
        """Row form carries tensor and symmetry of Hol(R^n) to those of matrices."""
        if self.to_matrix(self._hol.symmetry(m, n)) != self.symmetry(m, n):
            return False
        return all(self.to_matrix(self._hol.tensor(a, b)) == self.tensor(self.to_matrix(a), self.to_matrix(b))
                   for a in self._hol.morphisms(m, rng) for b in self._hol.morphisms(n, rng))


CATEGORY_KINDS = ("aut-powers", "hol-powers", "hol-matrix")


def make_category(kind: str, modulus: int = 2, group: Optional[FiniteAbelianGroup] = None) -> PermutativeCategory:
    group = group or FiniteAbelianGroup.cyclic(modulus)
    if group.order > 4:
        raise ContractViolation(f"permutative checks need |G| <= 4, got {group.order}")
    if kind == "aut-powers":
        return AutPowers(group)
    if kind == "hol-powers":
        return HolPowers(group)
    if kind == "hol-matrix":
        if group.rank != 1:
            raise ContractViolation("the matrix category is over a cyclic ring Z/m")
        return HolMatrix(group.moduli[0])
    raise ContractViolation(f"unknown category {kind!r}; expected one of {CATEGORY_KINDS}")


def _triples(homs: Sequence[List], rng: random.Random) -> List[Tuple]:
    A, B, D = homs
    if len(A) * len(B) * len(D) <= HOM_SET_ENUMERATION_LIMIT:
        return list(itertools.product(A, B, D))
    return [(rng.choice(A), rng.choice(B), rng.choice(D)) for _ in range(MORPHISM_SAMPLES)]


def permutative_axioms_check(category: PermutativeCategory, m: int, n: int, p: int,
                             seed: int = DEFAULT_SEED) -> bool:
    """
    Associativity and unit of [], c(m, 0) = 1, c(n, m) c(m, n) = 1,
    (c(p, m) [] 1_n) c(m + n, p) = 1_m [] c(n, p), functoriality of [] and
    naturality c(m, n) (A [] B) = (B [] A) c(m, n), on the hom-sets or samples.
    """
    if max(m, n, p) > 3 or min(m, n, p) < 0:
        raise ContractViolation("objects must lie in 0..3")
    C = category
    rng = random.Random(seed)
    one = C.identity
    structural = {
        "c(m,0) = 1": C.symmetry(m, 0) == one(m) and C.symmetry(0, m) == one(m),
        "c(n,m) c(m,n) = 1": C.compose(C.symmetry(n, m), C.symmetry(m, n)) == one(m + n),
        "hexagon": C.compose(C.tensor(C.symmetry(p, m), one(n)), C.symmetry(m + n, p))
        == C.tensor(one(m), C.symmetry(n, p)),
        "unit on identities": C.tensor(one(m), one(0)) == one(m) == C.tensor(one(0), one(m)),
    }
    failed = [name for name, ok in structural.items() if not ok]
    if failed:
        logger.debug("%s fails %s at (%d, %d, %d)", C.name, failed, m, n, p)
        return False
    homs = (C.morphisms(m, rng), C.morphisms(n, rng), C.morphisms(p, rng))
    c_mn = C.symmetry(m, n)
    for A, B, D in _triples(homs, rng):
        if C.tensor(C.tensor(A, B), D) != C.tensor(A, C.tensor(B, D)):
            return False
        if C.tensor(A, one(0)) != A or C.tensor(one(0), A) != A:
            return False
        if C.compose(c_mn, C.tensor(A, B)) != C.compose(C.tensor(B, A), c_mn):
            return False
        A2, B2 = rng.choice(homs[0]), rng.choice(homs[1])
        if C.compose(C.tensor(A, B), C.tensor(A2, B2)) != C.tensor(C.compose(A, A2), C.compose(B, B2)):
            return False
    if isinstance(C, HolMatrix) and not C.agrees_with_hol(min(m, 1), min(n, 1), rng):
        return False
    return True


def hol_symmetry_acts_as_swap(category: HolPowers, m: int, n: int) -> bool:
    """c(m, n) sends (x, y) to (y, x) on G^{m+n}."""
    target = category.object_group(m + n)
    width = category.group.rank
    c = category.symmetry(m, n)
    return all(c.act(pt) == pt[m * width:] + pt[:m * width] for pt in target.elements())


def inverse_symmetry(category: PermutativeCategory, m: int, n: int):
    """c(m, n)^-1 computed from the group structure, for comparison with c(n, m)."""
    c = category.symmetry(m, n)
    if isinstance(c, HolElement):
        return hol_inv(c)
    if isinstance(c, ResidueMatrix):
        return c.inverse()
    size = len(c)
    return tuple(tuple(c[j][i] for j in range(size)) for i in range(size))

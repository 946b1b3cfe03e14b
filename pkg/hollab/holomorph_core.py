"""
hollab - Holomorph Core
=======================

Holomorphs Hol(K) = K x| Aut(K) of finite abelian groups K.

Models
- Pair form: (f, x) with (f,x)(g,y) = (f o g, g^-1(x) + y) and
  (f,x)^-1 = (f^-1, f(-x)). The element (f, x) acts on K by a -> f(x + a).
- Permutation form: (f, x) becomes the sympy permutation a -> (f,x)^-1(a),
  so sympy's left-to-right product agrees with the pair product.
- Matrix form for K = (Z/m)^n: row form [[1, x^T], [0, (M_f^-1)^T]] and
  column form [[1, 0], [M_f x, M_f]]; both are injective homomorphisms into
  GL(n+1, Z/m).

Automorphisms and homomorphisms between abelian groups are integer matrices
whose column i is the image of the i-th generator; entry (j, i) is read
mod m_j of the target.
"""
from __future__ import annotations

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.utilities.iterables import partitions

from .exceptions import BudgetExceeded, ContractViolation, VerificationFailure
from .modular_linalg import (
    IntRows,
    ResidueMatrix,
    det_int,
    enumerate_gl,
    gl_order,
    identity_rows,
    inverse_rows_mod,
    mat_mul_mod,
    prime_power,
    vp,
)
from .reference_data import EXHAUSTIVE_BUDGET, GAMMA_ENUMERATION_BUDGET, SAMPLE_SIZE, DEFAULT_SEED

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


# =============================================================================
# 1. GENERIC CLOSURE
# =============================================================================

def closure(generators: Iterable[Hashable], multiply: Callable, identity: Hashable,
            budget: int = EXHAUSTIVE_BUDGET, what: str = "subgroup") -> Set:
    """Subgroup generated by ``generators`` (finite groups), breadth first."""
    gens = list(dict.fromkeys(generators))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = multiply(a, g)
                if b not in seen:
                    seen.add(b)
                    if len(seen) > budget:
                        raise BudgetExceeded(what, len(seen), budget)
                    nxt.append(b)
        frontier = nxt
    return seen


def small_generating_set(elements: Iterable[Hashable], multiply: Callable,
                         identity: Hashable) -> List:
    """Greedy generating set: keep an element when it enlarges the closure."""
    gens: List = []
    span = {identity}
    for g in elements:
        if g in span:
            continue
        gens.append(g)
        span = closure(gens, multiply, identity, budget=10 ** 7)
    return gens


@dataclass(frozen=True)
class GroupSignature:
    """Order, element-order multiset and commutativity."""
    order: int
    element_orders: Tuple[Tuple[int, int], ...]
    abelian: bool


def element_order(g, multiply: Callable, identity) -> int:
    k, h = 1, g
    while h != identity:
        h = multiply(h, g)
        k += 1
    return k


def group_signature(elements: Sequence, multiply: Callable, identity) -> GroupSignature:
    orders = Counter(element_order(g, multiply, identity) for g in elements)
    abelian = all(multiply(a, b) == multiply(b, a) for a in elements for b in elements)
    return GroupSignature(len(elements), tuple(sorted(orders.items())), abelian)


def permutation_group_signature(group: PermutationGroup) -> GroupSignature:
    elements = list(group.generate())
    return group_signature(elements, lambda a, b: a * b, group.identity)


# =============================================================================
# 2. FINITE ABELIAN GROUPS
# =============================================================================

@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/m_1 + ... + Z/m_n; elements are tuples of residues."""
    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli if int(m) != 1)
        if any(m < 1 for m in moduli):
            raise ContractViolation(f"moduli must be >= 1, got {self.moduli}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def cyclic(cls, m: int) -> "FiniteAbelianGroup":
        return cls((m,))

    @classmethod
    def homocyclic(cls, n: int, m: int) -> "FiniteAbelianGroup":
        return cls((m,) * n)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def zero(self) -> Vector:
        return (0,) * self.rank

    def is_homocyclic(self) -> bool:
        return len(set(self.moduli)) <= 1

    def elements(self) -> List[Vector]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def basis(self) -> List[Vector]:
        return [tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank)]

    def reduce(self, x: Sequence[int]) -> Vector:
        return tuple(int(a) % m for a, m in zip(x, self.moduli))

    def add(self, x: Vector, y: Vector) -> Vector:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: Vector) -> Vector:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.rank and all(0 <= a < m for a, m in zip(x, self.moduli))

    def apply(self, matrix: IntRows, x: Vector) -> Vector:
        return tuple(sum(c * a for c, a in zip(row, x)) % m for row, m in zip(matrix, self.moduli))

    def compose(self, f: IntRows, g: IntRows) -> IntRows:
        """f o g for endomorphism matrices of this group."""
        return tuple(
            tuple(sum(f[j][k] * g[k][i] for k in range(self.rank)) % self.moduli[j]
                  for i in range(self.rank))
            for j in range(self.rank)
        )

    @property
    def identity_aut(self) -> IntRows:
        return identity_rows(self.rank)

    def is_automorphism(self, matrix: IntRows) -> bool:
        if not is_hom_matrix(matrix, self, self):
            return False
        if self.is_homocyclic() and self.rank:
            return gcd(det_int(matrix), self.moduli[0]) == 1
        return len({self.apply(matrix, x) for x in self.elements()}) == self.order

    def automorphisms(self, budget: int = GAMMA_ENUMERATION_BUDGET) -> List[IntRows]:
        return _automorphisms(self, budget)

    def aut_inverse(self, matrix: IntRows) -> IntRows:
        return _aut_inverse(self, matrix)

    def __str__(self):
        if not self.moduli:
            return "0"
        return " + ".join(f"Z/{m}" for m in self.moduli)


def is_hom_matrix(matrix: IntRows, source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> bool:
    """Column i may map e_i anywhere killed by m_i."""
    if len(matrix) != target.rank or any(len(r) != source.rank for r in matrix):
        return False
    return all(
        (mi * matrix[j][i]) % mj == 0
        for j, mj in enumerate(target.moduli)
        for i, mi in enumerate(source.moduli)
    )


def hom_matrices(source: FiniteAbelianGroup, target: FiniteAbelianGroup,
                 budget: int = GAMMA_ENUMERATION_BUDGET) -> List[IntRows]:
    """Every homomorphism source -> target as a reduced matrix."""
    choices = [
        [[v for v in range(mj) if (mi * v) % mj == 0] for mi in source.moduli]
        for mj in target.moduli
    ]
    size = prod(len(c) for row in choices for c in row)
    if size > budget:
        raise BudgetExceeded(f"Hom({source}, {target})", size, budget)
    flat = [c for row in choices for c in row]
    result = []
    for values in itertools.product(*flat):
        result.append(tuple(
            tuple(values[j * source.rank:(j + 1) * source.rank]) for j in range(target.rank)
        ))
    return result


@lru_cache(maxsize=256)
def _automorphisms(group: FiniteAbelianGroup, budget: int) -> List[IntRows]:
    return [m for m in hom_matrices(group, group, budget) if group.is_automorphism(m)]


@lru_cache(maxsize=65536)
def _aut_inverse(group: FiniteAbelianGroup, matrix: IntRows) -> IntRows:
    if not group.rank:
        return matrix
    if group.is_homocyclic():
        return inverse_rows_mod(matrix, group.moduli[0])
    preimage = {group.apply(matrix, x): x for x in group.elements()}
    if len(preimage) != group.order:
        raise ContractViolation("endomorphism is not invertible")
    columns = [preimage[e] for e in group.basis()]
    return tuple(tuple(columns[i][j] for i in range(group.rank)) for j in range(group.rank))


def abelian_groups_of_order(n: int) -> List[FiniteAbelianGroup]:
    """Isomorphism classes of abelian groups of order n (elementary divisors)."""
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        options = []
        for part in partitions(e):
            options.append(tuple(sorted(p ** k for k, mult in part.items() for _ in range(mult))))
        per_prime.append(options)
    groups = []
    for combo in itertools.product(*per_prime):
        groups.append(FiniteAbelianGroup(tuple(m for factor in combo for m in factor)))
    return groups


def abelian_groups_up_to(n: int) -> List[FiniteAbelianGroup]:
    return [g for k in range(1, n + 1) for g in abelian_groups_of_order(k)]


# =============================================================================
# 3. PAIR FORM
# =============================================================================

@dataclass(frozen=True)
class HolElement:
    """(f, x) in Hol(K)."""
    group: FiniteAbelianGroup
    aut: IntRows
    trans: Vector

    def _check(self, other: "HolElement"):
        if other.group != self.group:
            raise ContractViolation(f"mismatched groups: {self.group} and {other.group}")

    def __mul__(self, other: "HolElement") -> "HolElement":
        return hol_mul(self, other)

    def inverse(self) -> "HolElement":
        return hol_inv(self)

    def act(self, point: Vector) -> Vector:
        """a -> f(x + a)."""
        return self.group.apply(self.aut, self.group.add(self.trans, point))

    @property
    def aut_matrix(self) -> ResidueMatrix:
        if not self.group.is_homocyclic():
            raise ContractViolation("aut part is a residue matrix only for homocyclic K")
        return ResidueMatrix(self.aut, self.group.moduli[0] if self.group.rank else 1)

    def is_identity(self) -> bool:
        return self.aut == self.group.identity_aut and self.trans == self.group.zero


def hol_identity(group: FiniteAbelianGroup) -> HolElement:
    return HolElement(group, group.identity_aut, group.zero)


def make_hol(group: FiniteAbelianGroup, aut: Sequence[Sequence[int]], trans: Sequence[int]) -> HolElement:
    aut = tuple(tuple(int(a) % m for a in row) for row, m in zip(aut, group.moduli))
    if not group.is_automorphism(aut):
        raise ContractViolation("aut part is not an automorphism")
    return HolElement(group, aut, group.reduce(trans))


def hol_mul(a: HolElement, b: HolElement) -> HolElement:
    """(f,x)(g,y) = (f o g, g^-1(x) + y)."""
    a._check(b)
    k = a.group
    aut = k.compose(a.aut, b.aut)
    trans = k.add(k.apply(k.aut_inverse(b.aut), a.trans), b.trans)
    return HolElement(k, aut, trans)


def hol_inv(a: HolElement) -> HolElement:
    """(f,x)^-1 = (f^-1, f(-x))."""
    k = a.group
    return HolElement(k, k.aut_inverse(a.aut), k.apply(a.aut, k.neg(a.trans)))


def _check_size(size: int, budget: int, what: str):
    if size > budget:
        raise BudgetExceeded(what, size, budget)


def hol_elements(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET) -> List[HolElement]:
    auts = group.automorphisms()
    _check_size(len(auts) * group.order, budget, f"Hol({group})")
    return [HolElement(group, f, x) for f in auts for x in group.elements()]


def hol_generators(group: FiniteAbelianGroup) -> List[HolElement]:
    """Translations by the basis together with a generating set of Aut(K)."""
    ident = group.identity_aut
    aut_gens = small_generating_set(group.automorphisms(), group.compose, ident)
    return ([HolElement(group, ident, e) for e in group.basis()]
            + [HolElement(group, f, group.zero) for f in aut_gens])


def hol_order(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET) -> int:
    """|K| * |Aut K|."""
    _check_size(group.order, budget, f"K = {group}")
    return group.order * len(group.automorphisms())


def is_hol_full_symmetric(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET) -> bool:
    """Whether Hol(K) fills the whole symmetric group on K."""
    return hol_order(group, budget) == factorial(group.order)


# =============================================================================
# 4. PERMUTATION FORM
# =============================================================================

@dataclass
class CayleyEmbedding:
    """Hol(K) inside Sym(K); ``points[i]`` is the element moved by index i."""
    group: FiniteAbelianGroup
    points: List[Vector]
    image: PermutationGroup
    kernel_image: PermutationGroup
    index: Dict[Vector, int] = field(repr=False)

    def to_permutation(self, h: HolElement) -> Permutation:
        inv = hol_inv(h)
        return Permutation([self.index[inv.act(a)] for a in self.points])

    def order(self) -> int:
        return int(self.image.order())

    def kernel_is_normal(self) -> bool:
        return bool(self.kernel_image.is_normal(self.image))


def cayley_embed(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET) -> CayleyEmbedding:
    _check_size(group.order, budget, f"K = {group}")
    points = group.elements()
    index = {a: i for i, a in enumerate(points)}
    embedding = CayleyEmbedding(group, points, None, None, index)
    gens = hol_generators(group)
    perms = [embedding.to_permutation(h) for h in gens] or [Permutation(list(range(len(points))))]
    translations = [embedding.to_permutation(h) for h in gens if h.aut == group.identity_aut] \
        or [Permutation(list(range(len(points))))]
    embedding.image = PermutationGroup(perms)
    embedding.kernel_image = PermutationGroup(translations)
    return embedding


def conjugation_check(group: FiniteAbelianGroup) -> bool:
    """(f,0)(1,y)(f,0)^-1 == (1, f(y)) for every f and y."""
    ident = group.identity_aut
    for f in group.automorphisms():
        s = HolElement(group, f, group.zero)
        s_inv = hol_inv(s)
        for y in group.elements():
            lhs = hol_mul(hol_mul(s, HolElement(group, ident, y)), s_inv)
            if lhs != HolElement(group, ident, group.apply(f, y)):
                return False
    return True


def group_axioms_check(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET,
                       seed: int = DEFAULT_SEED) -> bool:
    """Associativity, identity and inverses for the pair multiplication."""
    elements = hol_elements(group)
    e = hol_identity(group)
    if any(hol_mul(a, hol_inv(a)) != e or hol_mul(e, a) != a for a in elements):
        return False
    if len(elements) ** 3 <= budget:
        triples = itertools.product(elements, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(elements), rng.choice(elements), rng.choice(elements))
                   for _ in range(SAMPLE_SIZE))
    return all(hol_mul(hol_mul(a, b), c) == hol_mul(a, hol_mul(b, c)) for a, b, c in triples)


# =============================================================================
# 5. SPLIT EXTENSIONS AND THE UNIVERSAL PROPERTY
# =============================================================================

def extend_action(group: FiniteAbelianGroup,
                  generator_images: Mapping[Permutation, IntRows]) -> Dict[Permutation, IntRows]:
    """Extend phi from generators to the whole permutation group, checking it is a homomorphism."""
    for g, f in generator_images.items():
        if not group.is_automorphism(f):
            raise ContractViolation(f"image of {g} is not an automorphism")
    gens = list(generator_images)
    if not gens:
        return {}
    identity = Permutation(list(range(gens[0].size)))
    phi = {identity: group.identity_aut}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                hg = h * g
                image = group.compose(phi[h], generator_images[g])
                if hg in phi:
                    if phi[hg] != image:
                        raise ContractViolation("phi is not a homomorphism")
                    continue
                phi[hg] = image
                nxt.append(hg)
        frontier = nxt
    return phi


@dataclass
class SplitExtension:
    """G = K x|_phi H with elements (h, x) and (h,x)(h',y) = (hh', phi(h')^-1 x + y)."""
    kernel: FiniteAbelianGroup
    quotient: PermutationGroup
    action: Dict[Permutation, IntRows]

    @property
    def order(self) -> int:
        return self.kernel.order * len(self.action)

    @property
    def identity(self):
        return (self.quotient.identity, self.kernel.zero)

    def elements(self) -> List[Tuple[Permutation, Vector]]:
        return [(h, x) for h in self.action for x in self.kernel.elements()]

    def multiply(self, a, b):
        (h, x), (h2, y) = a, b
        k = self.kernel
        return (h * h2, k.add(k.apply(k.aut_inverse(self.action[h2]), x), y))

    def inverse(self, a):
        h, x = a
        k = self.kernel
        return (~h, k.apply(self.action[h], k.neg(x)))

    def include(self, x: Vector):
        return (self.quotient.identity, x)

    def section(self, h: Permutation):
        return (h, self.kernel.zero)

    def project(self, a) -> Permutation:
        return a[0]

    def generators(self) -> List:
        return ([self.section(h) for h in self.quotient.generators]
                + [self.include(e) for e in self.kernel.basis()])

    def recovered_action(self, h: Permutation) -> IntRows:
        """Matrix of x -> s(h) i(x) s(h)^-1."""
        s, s_inv = self.section(h), self.inverse(self.section(h))
        columns = [self.multiply(self.multiply(s, self.include(e)), s_inv)[1]
                   for e in self.kernel.basis()]
        rank = self.kernel.rank
        return tuple(tuple(columns[i][j] for i in range(rank)) for j in range(rank))

    def to_holomorph(self, a) -> HolElement:
        """theta(h, x) = (phi(h), x)."""
        h, x = a
        return HolElement(self.kernel, self.action[h], x)

    def verify_commuting(self) -> bool:
        """theta is a homomorphism (checked against generators) and restricts to the identity on K."""
        gens = self.generators()
        for a in self.elements():
            for g in gens:
                if self.to_holomorph(self.multiply(a, g)) != hol_mul(self.to_holomorph(a), self.to_holomorph(g)):
                    return False
        return all(self.to_holomorph(self.include(x)).trans == x for x in self.kernel.elements())

    def is_abelian(self) -> bool:
        elements = self.elements()
        return all(self.multiply(a, b) == self.multiply(b, a) for a in elements for b in elements)

    def signature(self) -> GroupSignature:
        return group_signature(self.elements(), self.multiply, self.identity)


def pullback_extension(group: FiniteAbelianGroup,
                       generator_images: Mapping[Permutation, IntRows],
                       budget: int = EXHAUSTIVE_BUDGET) -> SplitExtension:
    """The split extension classified by phi: H -> Aut(K), H given by permutation generators."""
    action = extend_action(group, generator_images)
    quotient = PermutationGroup(list(generator_images))
    if len(action) != quotient.order():
        raise VerificationFailure("action closure disagrees with |H|",
                                  {"closure": len(action), "order": int(quotient.order())})
    _check_size(len(action) * group.order, budget, "split extension")
    extension = SplitExtension(group, quotient, action)
    if not extension.verify_commuting():
        raise VerificationFailure("theta: G -> Hol(K) is not a homomorphism", {"K": str(group)})
    return extension


def aut_as_permutation_group(group: FiniteAbelianGroup) -> Tuple[PermutationGroup, Dict[Permutation, IntRows]]:
    """Aut(K) as permutations of K, with phi the tautological action."""
    points = group.elements()
    index = {a: i for i, a in enumerate(points)}
    images = {}
    gens = small_generating_set(group.automorphisms(), group.compose, group.identity_aut) \
        or [group.identity_aut]
    for f in gens:
        inv = group.aut_inverse(f)
        images[Permutation([index[group.apply(inv, a)] for a in points])] = f
    return PermutationGroup(list(images)), images


# =============================================================================
# 6. COMPATIBLE PAIRS
# =============================================================================

@dataclass
class CompatiblePair:
    """F: G -> H on the groups and F': Aut(G) -> Aut(H) on automorphisms."""
    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    F: IntRows
    F_prime: Dict[IntRows, IntRows]

    def map_hol(self, h: HolElement) -> HolElement:
        """F''(f, x) = (F'(f), F(x))."""
        return HolElement(self.target, self.F_prime[h.aut], self.target.apply(self.F, h.trans))


def check_compatible(pair: CompatiblePair) -> bool:
    """F'(g)(F(x)) == F(g(x)) for every automorphism g and element x."""
    g_group, h_group = pair.source, pair.target
    for g in g_group.automorphisms():
        if g not in pair.F_prime:
            return False
        for x in g_group.elements():
            if h_group.apply(pair.F_prime[g], h_group.apply(pair.F, x)) != h_group.apply(pair.F, g_group.apply(g, x)):
                return False
    return True


def build_F2(pair: CompatiblePair, budget: int = EXHAUSTIVE_BUDGET,
             seed: int = DEFAULT_SEED) -> Callable[[HolElement], HolElement]:
    """The induced map Hol(G) -> Hol(H), verified to be a homomorphism."""
    if not check_compatible(pair):
        raise ContractViolation("F and F' are not compatible")
    elements = hol_elements(pair.source)
    if len(elements) ** 2 <= budget:
        pairs = itertools.product(elements, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(elements), rng.choice(elements)) for _ in range(SAMPLE_SIZE))
    for a, b in pairs:
        if pair.map_hol(hol_mul(a, b)) != hol_mul(pair.map_hol(a), pair.map_hol(b)):
            raise VerificationFailure("F'' is not a homomorphism",
                                      {"a": (a.aut, a.trans), "b": (b.aut, b.trans)})
    return pair.map_hol


def aut_homomorphisms(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> List[Dict[IntRows, IntRows]]:
    """Every group homomorphism Aut(source) -> Aut(target)."""
    src_ident, tgt_ident = source.identity_aut, target.identity_aut
    gens = small_generating_set(source.automorphisms(), source.compose, src_ident)
    targets = target.automorphisms()
    result = []
    for images in itertools.product(targets, repeat=len(gens)):
        table = {src_ident: tgt_ident}
        frontier = [src_ident]
        consistent = True
        while frontier and consistent:
            nxt = []
            for f in frontier:
                for g, img in zip(gens, images):
                    fg = source.compose(f, g)
                    value = target.compose(table[f], img)
                    if fg in table:
                        if table[fg] != value:
                            consistent = False
                            break
                    else:
                        table[fg] = value
                        nxt.append(fg)
                if not consistent:
                    break
            frontier = nxt
        if consistent:
            result.append(table)
    return result


def compatible_pairs(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> List[CompatiblePair]:
    pairs = []
    for F in hom_matrices(source, target):
        for F_prime in aut_homomorphisms(source, target):
            pair = CompatiblePair(source, target, F, F_prime)
            if check_compatible(pair):
                pairs.append(pair)
    return pairs


def reduction_pair(m_from: int, m_to: int) -> CompatiblePair:
    """Z/m_from -> Z/m_to reduction with u -> u mod m_to on automorphisms."""
    if m_to < 1 or m_from % m_to:
        raise ContractViolation(f"{m_to} does not divide {m_from}")
    if m_to < 2:
        raise ContractViolation("reduction target must be nontrivial")
    source, target = FiniteAbelianGroup.cyclic(m_from), FiniteAbelianGroup.cyclic(m_to)
    F_prime = {f: ((f[0][0] % m_to,),) for f in source.automorphisms()}
    return CompatiblePair(source, target, ((1,),), F_prime)


def sign_map_is_induced(source: FiniteAbelianGroup = FiniteAbelianGroup.cyclic(3),
                        target: FiniteAbelianGroup = FiniteAbelianGroup.cyclic(2)) -> bool:
    """Whether some compatible pair induces the sign map Hol(source) -> Hol(target) = Z/2."""
    embedding = cayley_embed(source)
    elements = hol_elements(source)
    generator = (1,)
    for pair in compatible_pairs(source, target):
        induced = True
        for h in elements:
            odd = embedding.to_permutation(h).is_odd
            expected = HolElement(target, target.identity_aut, generator if odd else target.zero)
            if pair.map_hol(h) != expected:
                induced = False
                break
        if induced:
            return True
    return False


# =============================================================================
# 7. MODULE ACTION ON Z[K]
# =============================================================================

def module_action_check(group: FiniteAbelianGroup, budget: int = EXHAUSTIVE_BUDGET,
                        seed: int = DEFAULT_SEED) -> bool:
    """
    The translation and automorphism actions on the basis of Z[K] satisfy
    f(x + m) = f(x) + f(m), so (f,x)(m) = f(x + m) is an action of Hol(K).
    """
    points = group.elements()
    for f in group.automorphisms():
        for x in points:
            for m in points:
                if group.apply(f, group.add(x, m)) != group.add(group.apply(f, x), group.apply(f, m)):
                    return False
    elements = hol_elements(group)
    if len(elements) ** 2 * len(points) <= budget:
        triples = ((a, b, m) for a in elements for b in elements for m in points)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(elements), rng.choice(elements), rng.choice(points))
                   for _ in range(SAMPLE_SIZE))
    return all(hol_mul(a, b).act(m) == a.act(b.act(m)) for a, b, m in triples)


# =============================================================================
# 8. MATRIX FORM
# =============================================================================

def hol_to_matrix(h: HolElement, form: str = "row") -> ResidueMatrix:
    """(n+1) x (n+1) matrix of (f, x) for K = (Z/m)^n."""
    k = h.group
    if not k.is_homocyclic():
        raise ContractViolation("matrix form needs K = (Z/m)^n")
    n = k.rank
    m = k.moduli[0] if n else 1
    if not k.is_automorphism(h.aut):
        raise ContractViolation("aut part is not invertible")
    if form == "row":
        inv_t = tuple(zip(*inverse_rows_mod(h.aut, m))) if n else ()
        rows = [(1,) + tuple(h.trans)] + [(0,) + tuple(r) for r in inv_t]
    elif form == "column":
        fx = k.apply(h.aut, h.trans)
        rows = [(1,) + (0,) * n] + [(fx[i],) + tuple(h.aut[i]) for i in range(n)]
    else:
        raise ContractViolation(f"unknown matrix form {form!r}")
    return ResidueMatrix(tuple(rows), m)


def matrix_to_hol(matrix: ResidueMatrix, form: str = "row") -> HolElement:
    """Inverse of ``hol_to_matrix`` on its image."""
    n, m = matrix.rows - 1, matrix.modulus
    k = FiniteAbelianGroup.homocyclic(n, m)
    rows = matrix.entries
    if form == "row":
        if any(rows[i][0] != (1 if i == 0 else 0) for i in range(n + 1)):
            raise ContractViolation("matrix does not fix e1")
        block_t = tuple(tuple(rows[i + 1][j + 1] for i in range(n)) for j in range(n))
        return HolElement(k, inverse_rows_mod(block_t, m), tuple(rows[0][1:]))
    aut = tuple(tuple(rows[i + 1][1:]) for i in range(n))
    fx = tuple(rows[i + 1][0] for i in range(n))
    return HolElement(k, aut, k.apply(inverse_rows_mod(aut, m), fx))


def e1_stabilizer(n: int, m: int, budget: int = EXHAUSTIVE_BUDGET) -> List[IntRows]:
    """Matrices in GL(n+1, Z/m) whose first column is e1."""
    size = m ** (n * (n + 1))
    _check_size(size, budget * 10, f"stabilizer candidates for GL({n + 1}, Z/{m})")
    result = []
    for flat in itertools.product(range(m), repeat=n * (n + 1)):
        rows = [(1,) + tuple(flat[:n])]
        for i in range(n):
            rows.append((0,) + tuple(flat[n + i * n:n + (i + 1) * n]))
        rows = tuple(rows)
        if gcd(det_int(rows), m) == 1:
            result.append(rows)
    return result


def matrix_image_check(n: int, m: int) -> bool:
    """The row form is injective and lands exactly on the e1-stabilizer."""
    k = FiniteAbelianGroup.homocyclic(n, m)
    images = {hol_to_matrix(h).entries for h in hol_elements(k)}
    return len(images) == hol_order(k) and images == set(e1_stabilizer(n, m))


def matrix_multiplicativity_check(n: int, m: int, samples: int = 200, seed: int = DEFAULT_SEED,
                                  form: str = "row") -> bool:
    k = FiniteAbelianGroup.homocyclic(n, m)
    elements = hol_elements(k, budget=GAMMA_ENUMERATION_BUDGET)
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.choice(elements), rng.choice(elements)
        if hol_to_matrix(hol_mul(a, b), form) != hol_to_matrix(a, form) @ hol_to_matrix(b, form):
            return False
    return True


# =============================================================================
# 9. MAXIMALITY AND SYLOW SUBGROUPS
# =============================================================================

def find_intermediate_subgroup(subgroup_generators: Sequence[IntRows],
                               ambient_generators: Sequence[IntRows], modulus: int,
                               budget: int = EXHAUSTIVE_BUDGET) -> Optional[frozenset]:
    """A subgroup strictly between H and G, or None when H is maximal in G."""
    n = len(ambient_generators[0])
    ident = identity_rows(n)
    mul = lambda a, b: mat_mul_mod(a, b, modulus)
    ambient = closure(ambient_generators, mul, ident, budget, "ambient group")
    sub = closure(subgroup_generators, mul, ident, budget, "subgroup")
    if not sub <= ambient:
        raise ContractViolation("subgroup is not contained in the ambient group")
    if sub == ambient:
        return frozenset(sub)
    covered: Set[IntRows] = set()
    for g in ambient - sub:
        if g in covered:
            continue
        span = closure(list(subgroup_generators) + [g], mul, ident, budget)
        if span != ambient:
            return frozenset(span)
        covered.add(g)
    return None


def is_maximal(subgroup_generators: Sequence[IntRows], ambient_generators: Sequence[IntRows],
               modulus: int, budget: int = EXHAUSTIVE_BUDGET) -> bool:
    """True iff H is proper and every g outside H generates G together with H."""
    return find_intermediate_subgroup(subgroup_generators, ambient_generators, modulus, budget) is None


def hol_matrix_generators(n: int, m: int) -> List[IntRows]:
    k = FiniteAbelianGroup.homocyclic(n, m)
    return [hol_to_matrix(h).entries for h in hol_generators(k)]


def hol_maximal_in_gl(n: int, m: int) -> bool:
    """Is the row-form image of Hol((Z/m)^n) maximal in GL(n+1, Z/m)?"""
    ambient = list(enumerate_gl(n + 1, m))
    return is_maximal(hol_matrix_generators(n, m), ambient, m)


@dataclass(frozen=True)
class SylowCheck:
    n: int
    p: int
    r: int
    hol_exponent: int
    gl_exponent: int

    @property
    def equal(self) -> bool:
        return self.hol_exponent == self.gl_exponent

    @property
    def claim_holds(self) -> bool:
        """Equal p-parts for r = 1, different ones for r >= 2."""
        return self.equal if self.r == 1 else not self.equal


def sylow_order_check(n: int, p: int, r: int = 1) -> SylowCheck:
    """Compare the p-parts of |Hol((Z/p^r)^n)| and |GL(n+1, Z/p^r)|."""
    hol = r * n + vp(gl_order(n, p, r), p)
    gl = vp(gl_order(n + 1, p, r), p)
    expected_hol = r * n + r * n * n - n * (n + 1) // 2
    if hol != expected_hol:
        raise VerificationFailure("p-part of |Hol| disagrees with the closed exponent",
                                  {"n": n, "p": p, "r": r, "computed": hol, "closed": expected_hol})
    return SylowCheck(n, p, r, hol, gl)


def unitriangular_sylow_check(n: int, p: int) -> bool:
    """
    Upper unitriangular matrices of size n+1 over F_p: a p-Sylow subgroup of
    GL(n+1, F_p) inside the row-form image of Hol(F_p^n), filtered by normal
    subgroups U_i (off-diagonal entries only in the first i rows).
    """
    size = n + 1
    positions = [(i, j) for i in range(size) for j in range(i + 1, size)]
    _check_size(p ** len(positions), EXHAUSTIVE_BUDGET, "unitriangular group")
    mul = lambda a, b: mat_mul_mod(a, b, p)

    def build(values, allowed_rows):
        rows = [list(r) for r in identity_rows(size)]
        for (i, j), v in zip(positions, values):
            if i < allowed_rows:
                rows[i][j] = v
        return tuple(tuple(r) for r in rows)

    full = {build(v, size) for v in itertools.product(range(p), repeat=len(positions))}
    if vp(len(full), p) != vp(gl_order(size, p, 1), p) or len(full) != p ** vp(len(full), p):
        return False
    image = set(e1_stabilizer(n, p))
    if not full <= image:
        return False
    subgroups = [
        {build(v, i) for v in itertools.product(range(p), repeat=len(positions))}
        for i in range(1, size + 1)
    ]
    for i, small in enumerate(subgroups):
        for big in subgroups[i + 1:]:
            for g in big:
                g_inv = inverse_rows_mod(g, p)
                if any(mul(mul(g, u), g_inv) not in small for u in small):
                    return False
    return True


def lower_congruence_sylow_check(n: int, p: int, r: int) -> bool:
    """
    Matrices over Z/p^r with diagonal = 1 mod p, strictly lower part = 0 mod p
    and arbitrary upper part form a subgroup of p-power order equal to the
    p-part of |GL(n, Z/p^r)|.
    """
    m = p ** r
    diag = [a for a in range(m) if a % p == 1 % p]
    lower = [b for b in range(m) if b % p == 0]
    upper = list(range(m))
    slots = []
    for i in range(n):
        for j in range(n):
            slots.append(diag if i == j else (lower if i > j else upper))
    size = prod(len(s) for s in slots)
    _check_size(size, EXHAUSTIVE_BUDGET, "congruence Sylow candidate")
    elements = {
        tuple(tuple(values[i * n:(i + 1) * n]) for i in range(n))
        for values in itertools.product(*slots)
    }
    generated = closure(list(elements), lambda a, b: mat_mul_mod(a, b, m), identity_rows(n),
                        budget=GAMMA_ENUMERATION_BUDGET)
    return generated == elements and len(elements) == p ** vp(gl_order(n, p, r), p)

"""
hollab - Group Ring Resolution
==============================

The metabelian group

    G(q, s1, s2, t1, t2) = < x, y, z | x^s1 = y^s2 = z^q = 1, xy = yx,
                                       zx = x z^t1, zy = y z^t2 >,

its integral group ring in normal form x^a y^b z^c, and the two-parameter
generalisation of Wall's resolution for the split extension
1 -> Z/q -> G -> Z/s1 + Z/s2 -> 1.

Generators a(n, row, i) sit at lattice point (i, n - i, row): i counts x-steps,
j = n - i counts y-steps, row is the degree in the resolution of Z/q.
Differentials, with mu = ceil(row / 2), phi = x L_{t1,1}^mu and
psi = y L_{t2,1}^mu:

    d0 a(n, 2k+1, i) = (z - 1) a(n, 2k, i)
    d0 a(n, 2k, i)   = N_z a(n, 2k-1, i)                          (k >= 1)
    d1 a(n, row, i)  = (-1)^row [ X_i a(n-1, row, i-1)
                                  + (-1)^i Y_j a(n-1, row, i) ]
    d2 a(n, 2m-1, i) = -c^y_m a(n-2, 2m, i) - c^x_m a(n-2, 2m, i-2)

where X_i is phi - 1 for odd i and sum_{j<s1} phi^j for even i (Y_j likewise
with psi, s2), c^x_m = (t1^{m s1} - 1)/q and c^y_m = (t2^{m s2} - 1)/q.
Terms whose target falls outside the lattice are dropped. When s2 = 1 only the
j = 0 generators exist.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .chain_complex import ChainComplex
from .exceptions import ContractViolation, UnsupportedCase, VerificationFailure
from .holomorph_core import FiniteAbelianGroup, HolElement
from .modular_linalg import IntegerMatrix, aut_cyclic_generators
from .reference_data import DEFAULT_DEGREE_CAP

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int, int]
Key = Tuple[int, int, int]

X_PLANE_EXPONENTS = ("s1", "s2")


# =============================================================================
# 1. PRESENTATION AND NORMAL FORM
# =============================================================================

@dataclass(frozen=True)
class MetabelianPresentation:
    q: int
    s1: int
    s2: int
    t1: int
    t2: int

    def __post_init__(self):
        if min(self.q, self.s1, self.s2, self.t1, self.t2) < 1:
            raise ContractViolation(f"parameters must be positive: {self}")
        if pow(self.t1, self.s1, self.q) != 1 % self.q:
            raise ContractViolation(f"t1^s1 != 1 mod q for {self}")
        if pow(self.t2, self.s2, self.q) != 1 % self.q:
            raise ContractViolation(f"t2^s2 != 1 mod q for {self}")

    @property
    def order(self) -> int:
        return self.q * self.s1 * self.s2

    def multiply(self, u: Monomial, v: Monomial) -> Monomial:
        return _monomial_product(self, u, v)

    def generator(self, letter: str) -> Monomial:
        table = {
            "x": (1 % self.s1, 0, 0),
            "y": (0, 1 % self.s2, 0),
            "z": (0, 0, 1 % self.q),
            "X": ((self.s1 - 1) % self.s1, 0, 0),
            "Y": (0, (self.s2 - 1) % self.s2, 0),
            "Z": (0, 0, (self.q - 1) % self.q),
        }
        if letter not in table:
            raise ContractViolation(f"unknown generator {letter!r} (use x, y, z or X, Y, Z for inverses)")
        return table[letter]

    def monomials(self) -> List[Monomial]:
        return [(a, b, c) for a in range(self.s1) for b in range(self.s2) for c in range(self.q)]


@lru_cache(maxsize=1 << 16)
def _monomial_product(P: MetabelianPresentation, u: Monomial, v: Monomial) -> Monomial:
    # z^c x^a' y^b' = x^a' y^b' z^(c t1^a' t2^b')
    a, b, c = u
    a2, b2, c2 = v
    twist = pow(P.t1, a2, P.q) * pow(P.t2, b2, P.q)
    return ((a + a2) % P.s1, (b + b2) % P.s2, (c * twist + c2) % P.q)


def normalize(word: Iterable[str], P: MetabelianPresentation) -> Monomial:
    """Normal form x^a y^b z^c of a word in x, y, z (capitals are inverses)."""
    result: Monomial = (0, 0, 0)
    for letter in word:
        result = P.multiply(result, P.generator(letter))
    return result


def relator_check(P: MetabelianPresentation) -> bool:
    """Each defining relation normalizes to the identity."""
    one = (0, 0, 0)
    words = [
        "x" * P.s1,
        "y" * P.s2,
        "z" * P.q,
        "xyXY",
    ]
    if normalize("zx", P) != normalize("x" + "z" * P.t1, P):
        return False
    if normalize("zy", P) != normalize("y" + "z" * P.t2, P):
        return False
    return all(normalize(w, P) == one for w in words)


def monomial_to_hol(P: MetabelianPresentation, u: Monomial) -> HolElement:
    """x -> (t1^-1, 0), y -> (t2^-1, 0), z -> (1, 1) in Hol(Z/q)."""
    a, b, c = u
    unit = pow(pow(P.t1, a, P.q) * pow(P.t2, b, P.q), -1, P.q)
    return HolElement(FiniteAbelianGroup.cyclic(P.q), ((unit,),), (c,))


def hol_cyclic_presentation(p: int, r: int) -> MetabelianPresentation:
    """Hol(Z/p^r) as G(q, s1, s2, t1, t2)."""
    q = p ** r
    if p == 2:
        if r < 3:
            raise UnsupportedCase(f"Hol(Z/2^{r}) has no presentation of this shape")
        return MetabelianPresentation(q, 2 ** (r - 2), 2, 3, q - 1)
    (s, order), = aut_cyclic_generators(q).items()
    return MetabelianPresentation(q, order, 1, s, 1)


# =============================================================================
# 2. GROUP RING
# =============================================================================

@dataclass(frozen=True)
class GroupRingElement:
    """Integer combination of normal-form monomials; no zero coefficients stored."""
    presentation: MetabelianPresentation
    terms: Tuple[Tuple[Monomial, int], ...] = ()

    @classmethod
    def from_dict(cls, P: MetabelianPresentation, coeffs: Dict[Monomial, int]) -> "GroupRingElement":
        return cls(P, tuple(sorted((m, c) for m, c in coeffs.items() if c)))

    @classmethod
    def zero(cls, P: MetabelianPresentation) -> "GroupRingElement":
        return cls(P, ())

    @classmethod
    def one(cls, P: MetabelianPresentation) -> "GroupRingElement":
        return cls(P, (((0, 0, 0), 1),))

    @classmethod
    def monomial(cls, P: MetabelianPresentation, u: Monomial, coeff: int = 1) -> "GroupRingElement":
        return cls.from_dict(P, {u: coeff})

    @classmethod
    def word(cls, P: MetabelianPresentation, word: str) -> "GroupRingElement":
        return cls.monomial(P, normalize(word, P))

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def _check(self, other: "GroupRingElement"):
        if other.presentation != self.presentation:
            raise ContractViolation("group ring elements over different presentations")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return GroupRingElement.from_dict(self.presentation, acc)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.presentation, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def scale(self, k: int) -> "GroupRingElement":
        if k == 0:
            return GroupRingElement.zero(self.presentation)
        return GroupRingElement(self.presentation, tuple((m, k * c) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return _ring_product(self, other)

    def __rmul__(self, k: int):
        return self.scale(k)

    def __pow__(self, exponent: int) -> "GroupRingElement":
        result = GroupRingElement.one(self.presentation)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        """x, y, z -> 1."""
        return sum(c for _, c in self.terms)


@lru_cache(maxsize=8192)
def _ring_product(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    P = u.presentation
    acc: Dict[Monomial, int] = {}
    for m1, c1 in u.terms:
        for m2, c2 in v.terms:
            m = _monomial_product(P, m1, m2)
            acc[m] = acc.get(m, 0) + c1 * c2
    return GroupRingElement.from_dict(P, acc)


@lru_cache(maxsize=1024)
def norm_z(P: MetabelianPresentation) -> GroupRingElement:
    return GroupRingElement.from_dict(P, {(0, 0, c): 1 for c in range(P.q)})


@lru_cache(maxsize=1024)
def L_element(P: MetabelianPresentation, t: int, j: int = 1) -> GroupRingElement:
    """L_{t,j} = sum_{i < t^j} z^i."""
    acc: Dict[Monomial, int] = {}
    for i in range(t ** j):
        key = (0, 0, i % P.q)
        acc[key] = acc.get(key, 0) + 1
    return GroupRingElement.from_dict(P, acc)


@lru_cache(maxsize=1024)
def twisted_generator(P: MetabelianPresentation, var: str, mu: int) -> GroupRingElement:
    """phi = x L_{t1,1}^mu (var 'x') or psi = y L_{t2,1}^mu (var 'y')."""
    t = P.t1 if var == "x" else P.t2
    return GroupRingElement.word(P, var) * (L_element(P, t) ** mu)


# =============================================================================
# 3. SYMBOLIC COEFFICIENTS
# =============================================================================

@dataclass(frozen=True)
class Coefficient:
    """
    A differential entry kept symbolically: ``kind`` is one of
    'int', 'z_minus_1', 'norm_z', 'P' (phi - 1), 'Q' (sum of powers of phi).
    """
    kind: str
    scalar: int = 1
    var: str = ""
    mu: int = 0

    def element(self, P: MetabelianPresentation) -> GroupRingElement:
        return _coefficient_element(P, self)

    def augmentation(self, P: MetabelianPresentation) -> int:
        if self.kind == "int":
            return self.scalar
        if self.kind == "z_minus_1":
            return 0
        if self.kind == "norm_z":
            return self.scalar * P.q
        t, s = (P.t1, P.s1) if self.var == "x" else (P.t2, P.s2)
        if self.kind == "P":
            return self.scalar * (t ** self.mu - 1)
        if self.kind == "Q":
            return self.scalar * sum(t ** (j * self.mu) for j in range(s))
        raise ContractViolation(f"unknown coefficient kind {self.kind!r}")


@lru_cache(maxsize=4096)
def _coefficient_element(P: MetabelianPresentation, coef: Coefficient) -> GroupRingElement:
    one = GroupRingElement.one(P)
    if coef.kind == "int":
        base = one
    elif coef.kind == "z_minus_1":
        base = GroupRingElement.word(P, "z") - one
    elif coef.kind == "norm_z":
        base = norm_z(P)
    elif coef.kind in ("P", "Q"):
        phi = twisted_generator(P, coef.var, coef.mu)
        if coef.kind == "P":
            base = phi - one
        else:
            s = P.s1 if coef.var == "x" else P.s2
            base, power = GroupRingElement.zero(P), one
            for _ in range(s):
                base = base + power
                power = power * phi
    else:
        raise ContractViolation(f"unknown coefficient kind {coef.kind!r}")
    return base.scale(coef.scalar)


Term = Tuple[Key, Coefficient]
PARTS = ("d0", "d1x", "d1y", "d2x", "d2y")


# =============================================================================
# 4. THE RESOLUTION
# =============================================================================

@dataclass
class Resolution:
    """Generalised Wall resolution built through total degree ``max_degree``."""
    presentation: MetabelianPresentation
    max_degree: int
    x_plane_exponent: str = "s1"
    components: Dict[Key, Dict[str, List[Term]]] = field(default_factory=dict, repr=False)

    def has_generator(self, key: Key) -> bool:
        n, row, i = key
        if n < 0 or row < 0 or not 0 <= i <= n:
            return False
        return self.presentation.s2 > 1 or i == n

    def generators(self, n: int, row: int) -> List[Key]:
        return [(n, row, i) for i in range(n + 1) if self.has_generator((n, row, i))]

    def keys(self, degree: Optional[int] = None) -> List[Key]:
        top = self.max_degree if degree is None else degree
        return [k for total in range(top + 1) for row in range(total + 1)
                for k in self.generators(total - row, row)
                if degree is None or k[0] + k[1] == degree]

    def differential(self, key: Key, parts: Sequence[str] = PARTS) -> List[Term]:
        comps = self.components[key]
        return [t for part in parts for t in comps.get(part, [])]

    def component(self, key: Key, part: str) -> List[Term]:
        return self.components[key].get(part, [])


def _d2_constant(t: int, exponent: int, q: int, label: str, key: Key) -> int:
    value = t ** exponent - 1
    if value % q:
        raise VerificationFailure("integrality failure in d2", {
            "generator": key, "plane": label, "numerator": value, "q": q,
        })
    return value // q


def _components(res: Resolution, key: Key) -> Dict[str, List[Term]]:
    P = res.presentation
    n, row, i = key
    j = n - i
    out: Dict[str, List[Term]] = {part: [] for part in PARTS}

    if row % 2 == 1:
        out["d0"].append(((n, row - 1, i), Coefficient("z_minus_1")))
    elif row >= 2:
        out["d0"].append(((n, row - 1, i), Coefficient("norm_z")))

    mu = (row + 1) // 2
    sign = -1 if row % 2 else 1
    if i >= 1 and res.has_generator((n - 1, row, i - 1)):
        kind = "P" if i % 2 else "Q"
        out["d1x"].append(((n - 1, row, i - 1), Coefficient(kind, sign, "x", mu)))
    if j >= 1 and res.has_generator((n - 1, row, i)):
        kind = "P" if j % 2 else "Q"
        out["d1y"].append(((n - 1, row, i), Coefficient(kind, sign * (-1) ** i, "y", mu)))

    if row % 2 == 1:
        m = mu
        if j >= 2 and res.has_generator((n - 2, row + 1, i)):
            c = _d2_constant(P.t2, m * P.s2, P.q, "y", key)
            out["d2y"].append(((n - 2, row + 1, i), Coefficient("int", -c)))
        if i >= 2 and res.has_generator((n - 2, row + 1, i - 2)):
            exponent = m * (P.s1 if res.x_plane_exponent == "s1" else P.s2)
            c = _d2_constant(P.t1, exponent, P.q, "x", key)
            out["d2x"].append(((n - 2, row + 1, i - 2), Coefficient("int", -c)))
    return out


def build_resolution(P: MetabelianPresentation, max_degree: int = DEFAULT_DEGREE_CAP,
                     x_plane_exponent: str = "s1") -> Resolution:
    """Populate d0, d1, d2 for every generator of total degree <= max_degree."""
    if max_degree < 2:
        raise ContractViolation("resolution degree must be at least 2")
    if x_plane_exponent not in X_PLANE_EXPONENTS:
        raise ContractViolation(f"x_plane_exponent must be one of {X_PLANE_EXPONENTS}")
    res = Resolution(P, max_degree, x_plane_exponent)
    for key in res.keys():
        res.components[key] = _components(res, key)
    logger.debug("built resolution for %s through degree %d (%d generators)",
                 P, max_degree, len(res.components))
    return res


# =============================================================================
# 5. ACYCLICITY CHECKS
# =============================================================================

def _compose(res: Resolution, key: Key, first: Sequence[str], second: Sequence[str]) -> Dict[Key, GroupRingElement]:
    """(second o first)(a) for a left-module map: sum_b r_ab * d(b)."""
    P = res.presentation
    acc: Dict[Key, GroupRingElement] = {}
    for b, r_ab in res.differential(key, first):
        if b not in res.components:
            continue
        left = r_ab.element(P)
        for c, r_bc in res.differential(b, second):
            value = left * r_bc.element(P)
            acc[c] = acc[c] + value if c in acc else value
    return acc


def _sum_maps(*maps: Dict[Key, GroupRingElement]) -> Dict[Key, GroupRingElement]:
    total: Dict[Key, GroupRingElement] = {}
    for mp in maps:
        for k, v in mp.items():
            total[k] = total[k] + v if k in total else v
    return {k: v for k, v in total.items() if not v.is_zero()}


def verify_square_zero(res: Resolution, max_degree: Optional[int] = None):
    """Raise naming the first generator whose d(d(a)) is nonzero."""
    top = res.max_degree if max_degree is None else max_degree
    for key in res.keys():
        if key[0] + key[1] > top:
            continue
        defect = _sum_maps(_compose(res, key, PARTS, PARTS))
        if defect:
            raise VerificationFailure(
                f"d o d != 0 at bidegree (n={key[0]}, row={key[1]}), generator {key[2]}",
                {"generator": key, "presentation": res.presentation.__dict__,
                 "targets": sorted(defect)},
            )


def wall_plane_identities(res: Resolution, max_degree: Optional[int] = None):
    """
    The per-plane identities d0 d1 + d1 d0 = 0 and d0 d2 + d1 d1 + d2 d0 = 0
    for the x-plane and (with the (-1)^i twist removed) the y-plane.
    """
    top = res.max_degree if max_degree is None else max_degree
    for key in res.keys():
        if key[0] + key[1] > top:
            continue
        i = key[2]
        for plane in ("x", "y"):
            d1, d2 = f"d1{plane}", f"d2{plane}"
            first = _sum_maps(_compose(res, key, ["d0"], [d1]), _compose(res, key, [d1], ["d0"]))
            second = _sum_maps(
                _compose(res, key, ["d0"], [d2]),
                _compose(res, key, [d2], ["d0"]),
                _untwisted_square(res, key, plane),
            )
            for label, defect in (("k=1", first), ("k=2", second)):
                if defect:
                    raise VerificationFailure(
                        f"{plane}-plane identity {label} fails at {key}",
                        {"generator": key, "plane": plane, "identity": label, "x_coordinate": i},
                    )


def _untwisted_square(res: Resolution, key: Key, plane: str) -> Dict[Key, GroupRingElement]:
    part = f"d1{plane}"
    if plane == "x":
        return _compose(res, key, [part], [part])
    # undo the (-1)^i sign: y-steps keep i fixed, so both factors carry the same sign
    P = res.presentation
    acc: Dict[Key, GroupRingElement] = {}
    for b, r_ab in res.component(key, part):
        if b not in res.components:
            continue
        for c, r_bc in res.component(b, part):
            value = r_ab.element(P) * r_bc.element(P)
            acc[c] = acc[c] + value if c in acc else value
    return acc


def augmentation_agrees(res: Resolution, samples: int = 40, seed: int = 0) -> bool:
    """Closed-form augmentation of each coefficient equals the coefficient sum of its ring element."""
    rng = random.Random(seed)
    P = res.presentation
    keys = res.keys()
    for key in rng.sample(keys, min(samples, len(keys))):
        for _, coef in res.differential(key):
            if coef.element(P).augmentation() != coef.augmentation(P):
                return False
    return True


# =============================================================================
# 6. AUGMENTED COMPLEXES
# =============================================================================

def summand_rows(m: int) -> Tuple[int, ...]:
    return (0,) if m == 0 else (2 * m - 1, 2 * m)


def augment(res: Resolution, m: int) -> ChainComplex:
    """
    A^m = (row 0) for m = 0, rows 2m-1 and 2m otherwise, tensored down to Z.
    Degree of a(n, row, i) is n + row.
    """
    if m < 0:
        raise ContractViolation("summand index must be >= 0")
    P = res.presentation
    rows = summand_rows(m)
    basis: Dict[int, List[Key]] = {}
    for key in res.keys():
        if key[1] in rows:
            basis.setdefault(key[0] + key[1], []).append(key)
    for keys in basis.values():
        keys.sort()
    index = {deg: {k: idx for idx, k in enumerate(keys)} for deg, keys in basis.items()}

    differentials: Dict[int, IntegerMatrix] = {}
    for deg, keys in basis.items():
        below = basis.get(deg - 1, [])
        if not below and deg - 1 not in basis:
            continue
        matrix = [[0] * len(keys) for _ in below]
        for col, key in enumerate(keys):
            for target, coef in res.differential(key):
                if target[1] not in rows:
                    if coef.augmentation(P) != 0:
                        raise VerificationFailure("augmented differential leaves the summand",
                                                  {"source": key, "target": target, "m": m})
                    continue
                matrix[index[deg - 1][target]][col] += coef.augmentation(P)
        differentials[deg] = IntegerMatrix.from_rows(matrix, len(keys))
    ranks = {deg: len(keys) for deg, keys in basis.items()}
    return ChainComplex(ranks, differentials, {deg: list(keys) for deg, keys in basis.items()})


def augment_all(res: Resolution, max_summand: int) -> Dict[int, ChainComplex]:
    return {m: augment(res, m) for m in range(max_summand + 1)}

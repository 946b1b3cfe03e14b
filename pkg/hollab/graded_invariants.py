"""
hollab - Graded Invariants
==========================

Graded-commutative algebras over F_p built from exterior and polynomial
generators, presented quotients and their Hilbert series, the Dickson
coefficient, and the d2 derivation used to show that the LHS spectral sequence
for Hol(sum_n Z/p^r) does not collapse at E2.
"""
from __future__ import annotations

import itertools
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, symbols

from .exceptions import BudgetExceeded, ContractViolation, VerificationFailure
from .modular_linalg import enumerate_gl
from .reference_data import EXHAUSTIVE_BUDGET, GL_ENUMERATION_BUDGET, HILBERT_DEGREE, get_thread_cap

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

D2_MODES = ("r3", "r>3", "odd")


# =============================================================================
# ALGEBRAS AND ELEMENTS
# =============================================================================

@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    exterior: bool = False
    # "base" classes come from the quotient, "fiber" classes from the kernel
    filtration: str = "fiber"


@dataclass(frozen=True)
class GradedAlgebra:
    """Free graded-commutative algebra over F_p; exterior generators square to zero."""
    generators: Tuple[Generator, ...]
    p: int

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ContractViolation(f"duplicate generator names in {names}")
        if self.p > 2:
            odd_poly = [g.name for g in self.generators if g.degree % 2 and not g.exterior]
            if odd_poly:
                raise ContractViolation(f"odd-degree polynomial generators need p = 2: {odd_poly}")

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise ContractViolation(f"unknown generator {name!r}")

    def degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def bidegree(self, mono: Monomial) -> Tuple[int, int]:
        base = sum(e * g.degree for e, g in zip(mono, self.generators) if g.filtration == "base")
        return base, self.degree(mono) - base

    def _odd(self, i: int) -> bool:
        return self.p > 2 and self.generators[i].degree % 2 == 1

    def multiply_monomials(self, m1: Monomial, m2: Monomial) -> Tuple[int, Optional[Monomial]]:
        """(sign, m1 m2), or (0, None) when an exterior generator repeats."""
        product = []
        for i, (a, b) in enumerate(zip(m1, m2)):
            if self.generators[i].exterior and a + b > 1:
                return 0, None
            product.append(a + b)
        sign = 1
        # moving each odd factor of m2 left past the odd factors of m1 with a larger index
        for j, b in enumerate(m2):
            if b and self._odd(j):
                passed = sum(m1[i] for i in range(j + 1, len(m1)) if self._odd(i))
                if passed % 2:
                    sign = -sign
        return sign, tuple(product)

    def monomials(self, degree: int) -> List[Monomial]:
        return list(_monomials(self, degree))

    def one(self) -> "GradedElement":
        return GradedElement(self, (((0,) * len(self.generators), 1),))

    def zero(self) -> "GradedElement":
        return GradedElement(self, ())

    def gen(self, name: str) -> "GradedElement":
        mono = [0] * len(self.generators)
        mono[self.index(name)] = 1
        return GradedElement(self, ((tuple(mono), 1),))

    def parse(self, text: str) -> "GradedElement":
        """'a*c*x + 2*b^2' style input; '0' and '1' are accepted."""
        total = self.zero()
        for term in text.replace(" ", "").split("+"):
            if not term:
                continue
            value = self.one()
            for factor in term.split("*"):
                if re.fullmatch(r"-?\d+", factor):
                    value = value.scale(int(factor))
                    continue
                match = re.fullmatch(r"([A-Za-z]\w*?)(?:\^(\d+))?", factor)
                if not match:
                    raise ContractViolation(f"cannot parse factor {factor!r}")
                value = value * self.gen(match.group(1)) ** int(match.group(2) or 1)
            total = total + value
        return total


@lru_cache(maxsize=4096)
def _monomials(algebra: GradedAlgebra, degree: int) -> Tuple[Monomial, ...]:
    gens = algebra.generators
    out: List[Monomial] = []

    def walk(i: int, remaining: int, prefix: List[int]):
        if i == len(gens):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        top = 1 if gens[i].exterior else remaining // gens[i].degree
        for e in range(min(top, remaining // gens[i].degree) + 1):
            prefix.append(e)
            walk(i + 1, remaining - e * gens[i].degree, prefix)
            prefix.pop()

    walk(0, degree, [])
    return tuple(sorted(out))


@dataclass(frozen=True)
class GradedElement:
    algebra: GradedAlgebra
    terms: Tuple[Tuple[Monomial, int], ...] = ()

    @classmethod
    def from_dict(cls, algebra: GradedAlgebra, coeffs: Dict[Monomial, int]) -> "GradedElement":
        p = algebra.p
        return cls(algebra, tuple(sorted((m, c % p) for m, c in coeffs.items() if c % p)))

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def _check(self, other: "GradedElement"):
        if other.algebra != self.algebra:
            raise ContractViolation("elements of different algebras")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return GradedElement.from_dict(self.algebra, acc)

    def __neg__(self) -> "GradedElement":
        return self.scale(-1)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def scale(self, k: int) -> "GradedElement":
        return GradedElement.from_dict(self.algebra, {m: k * c for m, c in self.terms})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: Dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                sign, m = self.algebra.multiply_monomials(m1, m2)
                if m is not None:
                    acc[m] = acc.get(m, 0) + sign * c1 * c2
        return GradedElement.from_dict(self.algebra, acc)

    def __pow__(self, exponent: int) -> "GradedElement":
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({self.algebra.degree(m) for m, _ in self.terms})

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ContractViolation(f"element is not homogeneous (degrees {degs})")
        return degs[0]

    def coefficient(self, text: str) -> int:
        (mono, _), = self.algebra.parse(text).terms
        return self.as_dict().get(mono, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            factors = [g.name if e == 1 else f"{g.name}^{e}"
                       for g, e in zip(self.algebra.generators, mono) if e]
            body = "*".join(factors) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


# =============================================================================
# PRESENTATIONS AND HILBERT SERIES
# =============================================================================

@dataclass(frozen=True)
class GradedPresentation:
    """Quotient of ``algebra`` by the two-sided ideal of ``relations`` (each read as lhs - rhs = 0)."""
    name: str
    algebra: GradedAlgebra
    relations: Tuple[GradedElement, ...]

    def __post_init__(self):
        for rel in self.relations:
            if len(rel.degrees()) > 1:
                raise ContractViolation(f"relation {rel} is not homogeneous")

    @classmethod
    def from_strings(cls, name: str, algebra: GradedAlgebra, relations: Sequence[str]) -> "GradedPresentation":
        parsed = []
        for text in relations:
            lhs, _, rhs = text.partition("=")
            parsed.append(algebra.parse(lhs) - algebra.parse(rhs or "0"))
        return cls(name, algebra, tuple(parsed))


def _sparse_rank(vectors: Sequence[Dict[int, int]], p: int) -> int:
    """Rank over F_p of sparse vectors by online elimination."""
    pivots: Dict[int, Dict[int, int]] = {}
    for vec in vectors:
        v = {k: c % p for k, c in vec.items() if c % p}
        while v:
            lead = max(v)
            if lead not in pivots:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {k: (c * inv) % p for k, c in v.items()}
                break
            factor = v[lead]
            for k, c in pivots[lead].items():
                v[k] = (v.get(k, 0) - factor * c) % p
                if v[k] == 0:
                    del v[k]
    return len(pivots)


def ideal_dimension(P: GradedPresentation, degree: int) -> int:
    """dim of the degree-``degree`` part of the ideal, spanned by m * rel for monomials m."""
    A = P.algebra
    index = {m: i for i, m in enumerate(A.monomials(degree))}
    vectors = []
    for rel in P.relations:
        if rel.is_zero() or rel.degree > degree:
            continue
        for m in A.monomials(degree - rel.degree):
            multiple = GradedElement(A, ((m, 1),)) * rel
            if not multiple.is_zero():
                vectors.append({index[mono]: c for mono, c in multiple.terms})
    return _sparse_rank(vectors, A.p)


def hilbert_series(P: GradedPresentation, max_degree: int = HILBERT_DEGREE) -> List[int]:
    """[dim_0, ..., dim_D] of the quotient ring."""
    A = P.algebra
    return [len(A.monomials(d)) - ideal_dimension(P, d) for d in range(max_degree + 1)]


def series_coefficients(numerator: Sequence[int], denominator: Sequence[int], max_degree: int) -> List[int]:
    """Power-series coefficients of numerator / denominator (denominator[0] == 1)."""
    if not denominator or denominator[0] != 1:
        raise ContractViolation("denominator must have constant term 1")
    out: List[int] = []
    for d in range(max_degree + 1):
        value = numerator[d] if d < len(numerator) else 0
        value -= sum(denominator[k] * out[d - k] for k in range(1, min(d, len(denominator) - 1) + 1))
        out.append(value)
    return out


# =============================================================================
# NAMED PRESENTATIONS
# =============================================================================

def hol_two_cohomology(r: int) -> GradedPresentation:
    """
    H*(Hol(Z/2^r); F_2), the r > 3 and r = 3 forms.

    The x*y, y*z (x^2*y when r = 3) and c*x*y terms restrict to zero on both
    detecting subgroups. Dropping them makes a*(a*b) force b*x*y = 0, which
    kills a surviving E_infinity class and loses one rank in degree 5.
    """
    if r < 3:
        raise ContractViolation("the presentation needs r >= 3")
    if r > 3:
        A = GradedAlgebra((
            Generator("x", 1, exterior=True), Generator("a", 1), Generator("y", 1),
            Generator("z", 2), Generator("b", 3), Generator("c", 4),
        ), 2)
        rels = ["a^2 = a*x + a*y + x*y", "a*z = y*z", "a*b = b*y", "b^2 = a*c*x + b*x*z + a*c*y + c*x*y"]
    else:
        A = GradedAlgebra((
            Generator("x", 1), Generator("a", 1), Generator("y", 1),
            Generator("b", 3), Generator("c", 4),
        ), 2)
        rels = ["a^2 = a*x + a*y + x*y", "a*x^2 = x^2*y", "a*b = b*y",
                "b^2 = a*c*x + b*x^3 + a*c*y + c*x^2 + c*x*y"]
    return GradedPresentation.from_strings(f"H*(Hol(Z/2^{r}); F_2)", A, rels)


def hol_odd_cohomology(p: int) -> GradedPresentation:
    """H*(Hol(Z/p^r); F_p) for p odd and r >= 3."""
    if p < 3:
        raise ContractViolation("p must be an odd prime")
    gens = [Generator(f"d{i}", 2 * (p - 1) * (i + 1) - 1, exterior=True) for i in range(p - 1)]
    gens += [
        Generator("e", 2 * p * (p - 1) - 1, exterior=True),
        Generator("x", 1, exterior=True),
        Generator("f", 2 * p * (p - 1)),
        Generator("z", 2),
    ]
    A = GradedAlgebra(tuple(gens), p)
    rels = [f"d{i}*d{j}" for i in range(p - 1) for j in range(i + 1, p - 1)]
    rels += [f"d{i}*e" for i in range(p - 1)] + [f"d{i}*z" for i in range(p - 1)]
    return GradedPresentation.from_strings(f"H*(Hol(Z/{p}^r); F_{p})", A, rels)


def continuous_limit_cohomology(p: int) -> GradedPresentation:
    """Continuous cohomology of the inverse limit of Hol(Z/p^n)."""
    if p == 2:
        A = GradedAlgebra((Generator("x", 1, exterior=True), Generator("u", 1), Generator("y", 1)), 2)
        return GradedPresentation.from_strings("H*_cont(lim Hol(Z/2^n); F_2)", A, ["u^2 = u*x + u*y"])
    A = GradedAlgebra((Generator("x", 1, exterior=True),), p)
    return GradedPresentation(f"H*_cont(lim Hol(Z/{p}^n); F_{p})", A, ())


# =============================================================================
# DICKSON COEFFICIENT AND d2
# =============================================================================

def default_mode(p: int) -> str:
    return "r>3" if p == 2 else "odd"


def _check_mode(p: int, mode: str):
    if mode not in D2_MODES:
        raise ContractViolation(f"unknown d2 mode {mode!r}; expected one of {D2_MODES}")
    if (p == 2) != (mode in ("r3", "r>3")):
        raise ContractViolation(f"mode {mode!r} does not apply in characteristic {p}")


@lru_cache(maxsize=64)
def spectral_algebra(n: int, p: int, mode: str) -> GradedAlgebra:
    """
    E2 generators for Hol(sum_n Z/p^r): fiber classes u_i (deg 1), v_i (deg 2)
    and base classes x_i (deg 1), z_i (deg 2). x_i squares to zero except in
    mode 'r3', where x_i^2 is the d2 target.
    """
    _check_mode(p, mode)
    gens = []
    for i in range(1, n + 1):
        gens.append(Generator(f"u{i}", 1, exterior=True))
        gens.append(Generator(f"v{i}", 2))
    for i in range(1, n + 1):
        gens.append(Generator(f"x{i}", 1, exterior=(mode != "r3"), filtration="base"))
        gens.append(Generator(f"z{i}", 2, filtration="base"))
    return GradedAlgebra(tuple(gens), p)


def _chunk_product(chunk: Sequence[Tuple[int, ...]], n: int, p: int):
    v = symbols(f"v1:{n + 1}")
    result = Poly(1, *v, modulus=p)
    for c in chunk:
        result = result * Poly(sum(ci * vi for ci, vi in zip(c, v)), *v, modulus=p)
    return result


def dickson_coefficient(n: int, p: int, mode: Optional[str] = None,
                        budget: int = EXHAUSTIVE_BUDGET) -> GradedElement:
    """Coefficient of t in prod_{c in F_p^n} (t + sum c_i v_i)."""
    if n < 1:
        raise ContractViolation("n must be >= 1")
    if p ** n > budget:
        raise BudgetExceeded(f"F_{p}^{n}", p ** n, budget)
    mode = mode or default_mode(p)
    A = spectral_algebra(n, p, mode)
    nonzero = [c for c in itertools.product(range(p), repeat=n) if any(c)]
    workers = max(1, min(get_thread_cap(), len(nonzero)))
    chunks = [nonzero[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda ch: _chunk_product(ch, n, p), chunks))
    product = reduce(lambda a, b: a * b, parts)
    v_index = [A.index(f"v{i}") for i in range(1, n + 1)]
    coeffs: Dict[Monomial, int] = {}
    for exps, c in product.terms():
        mono = [0] * len(A.generators)
        for idx, e in zip(v_index, exps):
            mono[idx] = e
        coeffs[tuple(mono)] = int(c)
    return GradedElement.from_dict(A, coeffs)


def _v_polynomial(f: GradedElement, n: int):
    A = f.algebra
    v = symbols(f"v1:{n + 1}")
    v_index = {A.index(f"v{i}"): i - 1 for i in range(1, n + 1)}
    expr = 0
    for mono, c in f.terms:
        if any(e and i not in v_index for i, e in enumerate(mono)):
            raise ContractViolation("GL action is only defined on the v-subalgebra")
        term = c
        for i, e in enumerate(mono):
            if e:
                term *= v[v_index[i]] ** e
        expr += term
    return Poly(expr, *v, modulus=A.p), v


def check_gl_invariance(f: GradedElement, n: int, p: int, budget: int = GL_ENUMERATION_BUDGET) -> bool:
    """f(M^T v) == f for every M in GL(n, F_p)."""
    poly, v = _v_polynomial(f, n)
    expr = poly.as_expr()
    for M in enumerate_gl(n, p, budget):
        image = {v[i]: sum(M[j][i] * v[j] for j in range(n)) for i in range(n)}
        moved = Poly(expr.xreplace(image).expand(), *v, modulus=p)
        if moved != poly:
            logger.debug("not invariant under %s", M)
            return False
    return True


def apply_derivation(f: GradedElement, images: Dict[str, GradedElement]) -> GradedElement:
    """
    Odd-degree derivation with the given generator images (missing names map
    to zero), extended by D(ab) = D(a) b + (-1)^|a| a D(b).
    """
    A = f.algebra
    total = A.zero()
    for mono, c in f.terms:
        for i, e in enumerate(mono):
            image = images.get(A.generators[i].name) if e else None
            if image is None or image.is_zero():
                continue
            prefix = tuple(mono[:i]) + (0,) * (len(mono) - i)
            rest = [0] * i + [e - 1] + list(mono[i + 1:])
            sign = -1 if A.degree(prefix) % 2 else 1
            # an exterior generator has e == 1; a polynomial one is even and commutes
            piece = GradedElement(A, ((prefix, 1),)) * image * GradedElement(A, ((tuple(rest), 1),))
            total = total + piece.scale(sign * e * c)
    return total


@lru_cache(maxsize=64)
def _d2_images(A: GradedAlgebra, mode: str) -> Dict[str, GradedElement]:
    images = {}
    for g in A.generators:
        if g.name.startswith("v"):
            i = g.name[1:]
            target = A.gen(f"x{i}") ** 2 if mode == "r3" else A.gen(f"z{i}")
            images[g.name] = A.gen(f"u{i}") * target
    return images


def apply_d2(f: GradedElement, mode: Optional[str] = None) -> GradedElement:
    """d2(v_i) = u_i z_i (u_i x_i^2 in mode 'r3'), zero on u, x and z."""
    A = f.algebra
    mode = mode or default_mode(A.p)
    _check_mode(A.p, mode)
    n = sum(1 for g in A.generators if g.name.startswith("v"))
    if A != spectral_algebra(n, A.p, mode):
        raise ContractViolation(f"element does not live in the mode {mode!r} E2 algebra")
    return apply_derivation(f, _d2_images(A, mode))


def noncollapse_bidegree(n: int, p: int, mode: Optional[str] = None) -> Tuple[int, int]:
    """E2 bidegree (base, fiber) hit by d2 of the Dickson coefficient."""
    image = apply_d2(dickson_coefficient(n, p, mode), mode)
    if image.is_zero():
        raise VerificationFailure("d2 of the Dickson coefficient vanishes", {"n": n, "p": p, "mode": mode})
    bidegrees = {image.algebra.bidegree(m) for m, _ in image.terms}
    if len(bidegrees) != 1:
        raise VerificationFailure("d2 image is not bihomogeneous", {"bidegrees": sorted(bidegrees)})
    return bidegrees.pop()

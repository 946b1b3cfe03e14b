"""
hollab - Verification Suites
============================

Named campaigns that re-check the library's structural claims and report
pass/fail per claim, with a witness (inputs and both sides) for failures.

Report schema (JSON):
    {suite, version, seed, checks: [{id, anchor, status, witness?}], elapsed_ms}

Checks run in a thread pool capped by HOLLAB_THREADS; the report lists them
by claim id, so its content depends only on the suite, the seed and the
version. ``elapsed_ms`` is the one run-dependent field and can be left out.
"""
from __future__ import annotations

import itertools
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Tuple

from sympy import primerange
from sympy.combinatorics import Permutation

from .congruence_lie import (
    almost_powerfully_embedded_check,
    bockstein_definitions_agree,
    bockstein_square_zero,
    bracket_matches_commutator,
    gamma_closure_check,
    gamma_enumerate,
    gamma_order,
    gamma_order_from_gl,
    jacobi_check,
    mike_lemma_solve,
    omega1_and_kernel_check,
    p_power_bijection_check,
    structure_constants_check,
)
from .exceptions import BudgetExceeded, ContractViolation, HollabError, VerificationFailure
from .graded_invariants import (
    apply_d2,
    check_gl_invariance,
    continuous_limit_cohomology,
    dickson_coefficient,
    hilbert_series,
    hol_odd_cohomology,
    hol_two_cohomology,
    noncollapse_bidegree,
    series_coefficients,
)
from .group_ring_resolution import (
    MetabelianPresentation,
    augmentation_agrees,
    build_resolution,
    hol_cyclic_presentation,
    relator_check,
    verify_square_zero,
    wall_plane_identities,
)
from .holomorph_core import (
    FiniteAbelianGroup,
    abelian_groups_up_to,
    aut_as_permutation_group,
    build_F2,
    cayley_embed,
    conjugation_check,
    group_axioms_check,
    hol_elements,
    hol_maximal_in_gl,
    hol_mul,
    hol_order,
    is_hol_full_symmetric,
    lower_congruence_sylow_check,
    matrix_image_check,
    matrix_multiplicativity_check,
    module_action_check,
    pullback_extension,
    reduction_pair,
    sign_map_is_induced,
    sylow_order_check,
    unitriangular_sylow_check,
)
from .homology_engine import (
    AbelianInvariants,
    abelianization,
    check_uct_ranks,
    closed_form_homology,
    coefficient_reduction_check,
    compare_homology,
    computed_homology,
    mod_p_cohomology_ranks,
    uct_ranks,
)
from .methodology import CLAIMS
from .modular_linalg import aut_cyclic_generators, unit_closure, unit_order, unit_valuation_table, units, vp
from .reference_data import (
    HILBERT_DEGREE,
    HOMOLOGY_CHECK_GRID,
    REPORT_VERSION,
    SUITE_NAMES,
    get_suite_seed,
    get_thread_cap,
)
from .run_logger import run_log
from .wreath_permutative import (
    CATEGORY_KINDS,
    AutFactor,
    HolFactor,
    TranslationFactor,
    WreathElement,
    base_inclusion_check,
    double_wreath_check,
    embedding_homomorphism_check,
    embedding_image,
    hol_symmetry_acts_as_swap,
    make_category,
    permutative_axioms_check,
    wreath_action_check,
    wreath_mul,
    wreath_pullback_check,
)

logger = logging.getLogger(__name__)

Grid = Dict[Tuple[int, int], int]
CheckFn = Callable[[int], None]

PASS = "pass"
FAIL = "fail"


# =============================================================================
# REPORT TYPES
# =============================================================================

@dataclass(frozen=True)
class CheckResult:
    id: str
    anchor: str
    status: str
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    version: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        out = {
            "suite": self.suite,
            "version": self.version,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True, default=str)


def _expect(ok: bool, message: str, **witness):
    if not ok:
        raise VerificationFailure(message, witness)


# =============================================================================
# SHARED COMPUTATIONS
# =============================================================================

@lru_cache(maxsize=32)
def _resolution(P: MetabelianPresentation, degree: int):
    return build_resolution(P, degree)


@lru_cache(maxsize=32)
def _checked_homology(p: int, r: int, qmax: int):
    return compare_homology(p, r, qmax)


def _check_d_squared(P: MetabelianPresentation, degree: int = 8) -> CheckFn:
    def run(seed: int):
        verify_square_zero(_resolution(P, degree), degree)
    return run


# =============================================================================
# 1. HOLOMORPH BASICS
# =============================================================================

Z2, Z3, Z4 = (FiniteAbelianGroup.cyclic(m) for m in (2, 3, 4))
Z2Z2 = FiniteAbelianGroup((2, 2))


def _hb_orders(seed: int):
    orders = {str(K): hol_order(K) for K in (Z3, Z4, Z2Z2)}
    expected = {"Z/3": 6, "Z/4": 8, "Z/2 + Z/2": 24}
    _expect(orders == expected, "holomorph orders", computed=orders, expected=expected)
    els = hol_elements(Z3)
    _expect(any(hol_mul(a, b) != hol_mul(b, a) for a in els for b in els),
            "Hol(Z/3) is abelian", group="Z/3")


def _hb_full_symmetric(seed: int):
    full = sorted(str(K) for K in abelian_groups_up_to(9) if is_hol_full_symmetric(K))
    expected = sorted(["0", "Z/2", "Z/3", "Z/2 + Z/2"])
    _expect(full == expected, "groups with Hol(K) = Sym(K)", computed=full, expected=expected)


def _hb_axioms(seed: int):
    for K in (Z3, Z4, Z2Z2):
        _expect(group_axioms_check(K, seed=seed), "group axioms fail", group=str(K))


def _hb_conjugation(seed: int):
    for K in (Z4, Z2Z2, FiniteAbelianGroup.cyclic(8)):
        _expect(conjugation_check(K), "conjugation does not give f(y)", group=str(K))


def _hb_cayley(seed: int):
    for K in (Z4, Z2Z2, FiniteAbelianGroup.cyclic(5)):
        emb = cayley_embed(K)
        _expect(emb.order() == hol_order(K) and emb.kernel_is_normal(), "Cayley embedding",
                group=str(K), image_order=emb.order(), hol_order=hol_order(K))


def _hb_split_extension(seed: int):
    for K in (Z3, Z4, Z2Z2):
        _, images = aut_as_permutation_group(K)
        extension = pullback_extension(K, images)
        _expect(extension.order == hol_order(K), "split extension order",
                group=str(K), computed=extension.order, expected=hol_order(K))
        for h in images:
            _expect(extension.recovered_action(h) == extension.action[h], "conjugation recovers phi",
                    group=str(K), h=str(h))


def _hb_compatible(seed: int):
    build_F2(reduction_pair(8, 4), seed=seed)
    _expect(not sign_map_is_induced(), "sign map of Hol(Z/3) is induced by a compatible pair")


def _hb_module_action(seed: int):
    for K in (Z4, Z2Z2):
        _expect(module_action_check(K, seed=seed), "not an action on K", group=str(K))


def _hb_matrix_multiplicative(seed: int):
    for (n, m), form in itertools.product(((2, 2), (2, 4), (2, 3)), ("row", "column")):
        _expect(matrix_multiplicativity_check(n, m, 200, seed, form), "matrix form not multiplicative",
                n=n, m=m, form=form)


def _hb_matrix_image(seed: int):
    for n, m in ((1, 4), (2, 2), (2, 3)):
        _expect(matrix_image_check(n, m), "row form image differs from the e1 stabilizer", n=n, m=m)


def _hb_maximal(seed: int):
    _expect(hol_maximal_in_gl(2, 2), "Hol((Z/2)^2) is not maximal in GL(3, Z/2)")


def _hb_sylow(seed: int):
    for n, p, r in itertools.product((1, 2, 3), (2, 3), (1, 2)):
        check = sylow_order_check(n, p, r)
        _expect(check.claim_holds, "Sylow exponents", n=n, p=p, r=r,
                hol_exponent=check.hol_exponent, gl_exponent=check.gl_exponent)


def _hb_unitriangular(seed: int):
    for n, p in ((1, 2), (2, 2), (3, 2), (1, 3), (2, 3)):
        _expect(unitriangular_sylow_check(n, p), "unitriangular Sylow subgroup", n=n, p=p)


def _hb_congruence_sylow(seed: int):
    for n, p, r in ((2, 2, 2), (2, 3, 2), (3, 2, 1)):
        _expect(lower_congruence_sylow_check(n, p, r), "congruence Sylow subgroup", n=n, p=p, r=r)


def _holomorph_basics(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {
        "HB-01": _hb_orders, "HB-02": _hb_full_symmetric, "HB-03": _hb_axioms,
        "HB-04": _hb_conjugation, "HB-05": _hb_cayley, "HB-06": _hb_split_extension,
        "HB-07": _hb_compatible, "HB-08": _hb_module_action, "HB-09": _hb_matrix_multiplicative,
        "HB-10": _hb_matrix_image, "HB-11": _hb_maximal, "HB-12": _hb_sylow,
        "HB-13": _hb_unitriangular, "HB-14": _hb_congruence_sylow,
    }


# =============================================================================
# 2. RESOLUTION ACYCLICITY
# =============================================================================

RESOLUTION_PRESENTATIONS = (
    MetabelianPresentation(8, 2, 2, 3, 7),
    MetabelianPresentation(16, 4, 2, 3, 15),
    MetabelianPresentation(32, 8, 2, 3, 31),
)


def _ra_planes(seed: int):
    wall_plane_identities(_resolution(RESOLUTION_PRESENTATIONS[0], 8), 6)


def _ra_augmentation(seed: int):
    for P in RESOLUTION_PRESENTATIONS[:2]:
        _expect(augmentation_agrees(_resolution(P, 8), 40, seed), "augmentation disagrees",
                presentation=P.__dict__)


def _ra_relators(seed: int):
    for p, r in sorted(HOMOLOGY_CHECK_GRID):
        _expect(relator_check(hol_cyclic_presentation(p, r)), "relators fail in Hol(Z/p^r)", p=p, r=r)


def _resolution_acyclicity(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    checks = {f"RA-0{i + 1}": _check_d_squared(P) for i, P in enumerate(RESOLUTION_PRESENTATIONS)}
    checks.update({
        "RA-04": _ra_planes,
        "RA-05": _ra_augmentation,
        "RA-06": _ra_relators,
        "RA-07": _check_d_squared(hol_cyclic_presentation(3, 2)),
    })
    return checks


# =============================================================================
# 3. HOMOLOGY TABLES AND 4. COHOMOLOGY RANKS
# =============================================================================

def _grid_check(points: Grid) -> CheckFn:
    def run(seed: int):
        for (p, r), qmax in sorted(points.items()):
            _checked_homology(p, r, qmax)
    return run


def _split_grid(grid: Grid) -> Tuple[Grid, Grid]:
    two = {k: v for k, v in grid.items() if k[0] == 2}
    odd = {k: v for k, v in grid.items() if k[0] != 2}
    return two, odd


def _ht_abelianization(seed: int):
    for p, r in ((2, 3), (2, 4), (3, 1), (3, 2)):
        P = hol_cyclic_presentation(p, r)
        h1 = computed_homology(p, r, 1)[1]
        _expect(h1 == abelianization(P), "H_1 differs from the abelianization",
                p=p, r=r, computed=str(h1), expected=str(abelianization(P)))
    h1 = computed_homology(2, 3, 1)[1]
    _expect(h1 == AbelianInvariants(0, (2, 2, 2)), "H_1(Hol(Z/8))", computed=str(h1), expected="(Z/2)^3")


def _ht_h3_sym3(seed: int):
    expected = AbelianInvariants.from_factors(0, [6])
    closed = closed_form_homology(3, 1, 3)
    computed = computed_homology(3, 1, 3)[3]
    _expect(closed == expected == computed, "H_3(Hol(Z/3))",
            closed=str(closed), computed=str(computed), expected=str(expected))


def _ht_cyclic_complexes(seed: int):
    for modulus, multipliers in ((27, (3, 9, 3)), (16, (4, 4, 4)), (8, (2, 4, 2))):
        _expect(coefficient_reduction_check(modulus, multipliers, seed=seed),
                "homology changed under a unit rescaling", modulus=modulus, multipliers=list(multipliers))


def _homology_tables(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    two, odd = _split_grid(HOMOLOGY_CHECK_GRID if grid is None else grid)
    checks: Dict[str, CheckFn] = {}
    if two:
        checks["HT-01"] = _grid_check(two)
    if odd:
        checks["HT-02"] = _grid_check(odd)
    if grid is None:
        checks.update({"HT-03": _ht_abelianization, "HT-04": _ht_h3_sym3, "HT-05": _ht_cyclic_complexes})
    return checks


def _uct_check(points: Grid) -> CheckFn:
    def run(seed: int):
        for (p, r), qmax in sorted(points.items()):
            check_uct_ranks(p, r, qmax, _checked_homology(p, r, qmax))
    return run


def _cr_independent_of_r(seed: int):
    first = [mod_p_cohomology_ranks(2, 3, q) for q in range(4)]
    _expect(first == [1, 3, 5, 7], "low-degree mod-2 ranks", computed=first, expected=[1, 3, 5, 7])
    sequences = {}
    for r in (3, 4, 5):
        qmax = HOMOLOGY_CHECK_GRID[(2, r)]
        ranks = uct_ranks(_checked_homology(2, r, qmax), 2)
        sequences[r] = [ranks[q] for q in sorted(ranks)]
    _expect(len({tuple(s) for s in sequences.values()}) == 1, "mod-2 ranks depend on r", ranks=sequences)


def _cohomology_ranks(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    points = HOMOLOGY_CHECK_GRID if grid is None else grid
    with_formula = {k: v for k, v in points.items() if k[0] == 2 or k[1] >= 3}
    two, odd = _split_grid(with_formula)
    checks: Dict[str, CheckFn] = {}
    if two:
        checks["CR-01"] = _uct_check(two)
    if odd:
        checks["CR-02"] = _uct_check(odd)
    if grid is None:
        checks["CR-03"] = _cr_independent_of_r
    return checks


# =============================================================================
# 5. RING PRESENTATIONS
# =============================================================================

def _series_check(presentation_factory: Callable, p: int, r: int) -> CheckFn:
    def run(seed: int):
        series = hilbert_series(presentation_factory(), HILBERT_DEGREE)
        ranks = [mod_p_cohomology_ranks(p, r, q) for q in range(HILBERT_DEGREE + 1)]
        _expect(series == ranks, "Hilbert series differs from the rank formula",
                p=p, r=r, series=series, ranks=ranks)
    return run


def _rh_odd(seed: int):
    for p in (3, 5):
        _series_check(lambda: hol_odd_cohomology(p), p, 3)(seed)


def _rh_limit(seed: int):
    series = hilbert_series(continuous_limit_cohomology(2), HILBERT_DEGREE)
    expected = series_coefficients([1, 2, 1], [1, -1], HILBERT_DEGREE)
    _expect(series == expected, "continuous cohomology series", series=series, expected=expected)


def _ring_hilbert(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {
        "RH-01": _series_check(lambda: hol_two_cohomology(4), 2, 4),
        "RH-02": _series_check(lambda: hol_two_cohomology(3), 2, 3),
        "RH-03": _rh_odd,
        "RH-04": _rh_limit,
    }


# =============================================================================
# 6. DICKSON NON-COLLAPSE
# =============================================================================

DICKSON_CASES = ((2, 2, "r3"), (2, 2, "r>3"), (3, 2, "r3"), (3, 2, "r>3"), (2, 3, "odd"))


def _dn_invariance(seed: int):
    for n, p in ((2, 2), (3, 2), (2, 3)):
        _expect(check_gl_invariance(dickson_coefficient(n, p), n, p), "not GL-invariant", n=n, p=p)


def _dn_nonzero(seed: int):
    for n, p, mode in DICKSON_CASES:
        image = apply_d2(dickson_coefficient(n, p, mode), mode)
        _expect(not image.is_zero(), "d2 of the Dickson coefficient vanishes", n=n, p=p, mode=mode)


def _dn_bidegree(seed: int):
    for n, p, mode in DICKSON_CASES:
        found = noncollapse_bidegree(n, p, mode)
        expected = (2, 2 * p ** n - 3)
        _expect(found == expected, "d2 bidegree", n=n, p=p, mode=mode, computed=found, expected=expected)


def _dickson_noncollapse(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {"DN-01": _dn_invariance, "DN-02": _dn_nonzero, "DN-03": _dn_bidegree}


# =============================================================================
# 7. CONGRUENCE TOWER AND 8. BOCKSTEIN
# =============================================================================

GAMMA_CASES = ((1, 1, 3), (1, 2, 3), (2, 1, 3), (1, 1, 5))


def _ct_order(seed: int):
    for n, k, p in GAMMA_CASES:
        counted = sum(1 for _ in gamma_enumerate(n, k, p))
        closed = gamma_order(n, k, p)
        via_gl = gamma_order_from_gl(n, k, p)
        _expect(counted == closed == via_gl, "order of Gamma_{n,k}",
                n=n, k=k, p=p, enumerated=counted, closed=closed, from_gl=via_gl)


def _ct_closure(seed: int):
    for n, k, p in GAMMA_CASES:
        _expect(gamma_closure_check(n, k, p, 200, seed), "Gamma_{n,k} not closed", n=n, k=k, p=p)


def _ct_omega(seed: int):
    for n, k, p in GAMMA_CASES:
        _expect(omega1_and_kernel_check(n, k, p), "Omega_1 differs from the central kernel", n=n, k=k, p=p)


def _ct_power_map(seed: int):
    for n, k, p in ((1, 2, 3), (2, 2, 3), (1, 2, 5)):
        _expect(p_power_bijection_check(n, k, p), "p-th power map is not a bijection", n=n, k=k, p=p)


def _ct_bracket(seed: int):
    for n, p in ((1, 3), (1, 5), (2, 3)):
        _expect(bracket_matches_commutator(n, p), "bracket differs from commutators", n=n, p=p)


def _ct_structure(seed: int):
    for n, p in itertools.product((1, 2, 3), (2, 3, 5)):
        _expect(structure_constants_check(n, p), "structure constants", n=n, p=p)


def _ct_jacobi(seed: int):
    for n, p in itertools.product((2, 3), (2, 3, 5)):
        _expect(jacobi_check(n, p, 300, seed), "Jacobi identity fails", n=n, p=p)


def _ct_roots(seed: int):
    for p, k in itertools.product((3, 5), (1, 2, 3)):
        for a in range(p ** k):
            mike_lemma_solve(a, p, k, "odd")
    for variant, k in itertools.product(("square", "fourth"), (1, 2, 3, 4)):
        for a in range(2 ** k):
            mike_lemma_solve(a, 2, k, variant)


def _ct_powerful(seed: int):
    for n, k, p in ((1, 2, 3), (1, 1, 5), (1, 2, 2), (1, 3, 2)):
        _expect(almost_powerfully_embedded_check(n, k, p), "not almost powerfully embedded", n=n, k=k, p=p)


def _congruence_tower(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {
        "CT-01": _ct_order, "CT-02": _ct_closure, "CT-03": _ct_omega, "CT-04": _ct_power_map,
        "CT-05": _ct_bracket, "CT-06": _ct_structure, "CT-07": _ct_jacobi, "CT-08": _ct_roots,
        "CT-09": _ct_powerful,
    }


def _bk_square_zero(seed: int):
    for n, p in itertools.product((1, 2, 3), (2, 3, 5)):
        _expect(bockstein_square_zero(n, p), "beta o beta != 0", n=n, p=p)


def _bk_generic(seed: int):
    for n, p in itertools.product((1, 2, 3), (2, 3, 5)):
        _expect(bockstein_definitions_agree(n, p), "explicit and structure-constant Bocksteins differ", n=n, p=p)


def _bockstein(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {"BK-01": _bk_square_zero, "BK-02": _bk_generic}


# =============================================================================
# 9. WREATH PRODUCTS AND PERMUTATIVE CATEGORIES
# =============================================================================

def _wp_example(seed: int):
    factor = TranslationFactor(Z3)
    swap = Permutation([1, 0])
    product = wreath_mul(WreathElement(swap, ((1,), (2,)), factor), WreathElement(swap, ((0,), (1,)), factor))
    expected = WreathElement(Permutation([0, 1]), ((2,), (2,)), factor)
    _expect(product == expected, "wreath product example",
            computed=(product.sigma.array_form, product.parts), expected=((0, 1), ((2,), (2,))))


def _wp_action(seed: int):
    for factor in (TranslationFactor(Z2), TranslationFactor(Z3), HolFactor(Z2), HolFactor(Z3)):
        _expect(wreath_action_check(2, factor, seed=seed), "product is not composition on G^q",
                factor=type(factor).__name__, group=str(factor.group))


def _wp_embed_i(seed: int):
    for G in (Z2, Z3, Z4):
        _expect(embedding_homomorphism_check(2, AutFactor(G), seed=seed), "embed_i", group=str(G))


def _wp_embed_j(seed: int):
    for G in (Z2, Z3):
        _expect(embedding_homomorphism_check(2, HolFactor(G), seed=seed), "embed_j", group=str(G))


def _wp_image_orders(seed: int):
    j_order = len(embedding_image(2, HolFactor(Z2)))
    i_order = len(embedding_image(2, AutFactor(Z3)))
    _expect((j_order, i_order) == (8, 8), "image orders", embed_j=j_order, embed_i=i_order, expected=(8, 8))


def _wp_pullback(seed: int):
    swap = Permutation([1, 0])
    for gens, G, q in (([swap], Z2, 2), ([swap], Z3, 2), ([], Z3, 2)):
        _expect(wreath_pullback_check(gens, G, q), "pullback description", group=str(G), q=q,
                generators=[g.array_form for g in gens])


def _wp_base(seed: int):
    for G, q in ((Z2, 2), (Z3, 2), (Z3, 4)):
        _expect(base_inclusion_check(q, G), "base inclusion", group=str(G), q=q)


def _wp_double(seed: int):
    _expect(double_wreath_check(2, 2, Z2, seed=seed), "double wreath square does not commute")


def _wp_axioms(seed: int):
    for kind, modulus in itertools.product(CATEGORY_KINDS, (2, 4)):
        category = make_category(kind, modulus)
        for m, n, p in itertools.product(range(3), repeat=3):
            _expect(permutative_axioms_check(category, m, n, p, seed), "permutative axioms",
                    category=kind, modulus=modulus, objects=(m, n, p))


def _wp_matrix_symmetry(seed: int):
    c = make_category("hol-matrix", 2).symmetry(1, 1)
    expected = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    _expect(c.entries == expected and (c @ c).is_identity(), "c(1,1) over Z/2",
            computed=c.entries, expected=expected)


def _wp_hexagon_points(seed: int):
    C = make_category("hol-powers", 3)
    lhs = C.compose(C.tensor(C.symmetry(1, 1), C.identity(1)), C.symmetry(2, 1))
    rhs = C.tensor(C.identity(1), C.symmetry(1, 1))
    bad = [pt for pt in C.object_group(3).elements() if lhs.act(pt) != rhs.act(pt)]
    _expect(not bad and hol_symmetry_acts_as_swap(C, 1, 2), "hexagon on points",
            point=bad[0] if bad else None)


def _wreath_permutative(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {
        "WP-01": _wp_example, "WP-02": _wp_action, "WP-03": _wp_embed_i, "WP-04": _wp_embed_j,
        "WP-05": _wp_image_orders, "WP-06": _wp_pullback, "WP-07": _wp_base, "WP-08": _wp_double,
        "WP-09": _wp_axioms, "WP-10": _wp_matrix_symmetry, "WP-11": _wp_hexagon_points,
    }


# =============================================================================
# 10. NUMBER THEORY
# =============================================================================

def _nt_two_adic(seed: int):
    for m in range(1, 1025):
        expected = 1 if m % 2 else vp(m, 2) + 2
        found = vp(3 ** m - 1, 2)
        _expect(found == expected, "nu_2(3^m - 1)", m=m, computed=found, expected=expected)


def _nt_odd_adic(seed: int):
    for p in (3, 5):
        for r in range(1, 6):
            (s, _), = aut_cyclic_generators(p ** r).items()
            precision = p ** (r + 2)
            for q in range(1, r + 1):
                for k in (k for k in range(1, 5) if k % p):
                    m = (p - 1) * p ** (q - 1) * k
                    found = vp((pow(s, m, precision) - 1) % precision, p)
                    _expect(found == q, "nu_p(s^m - 1)", p=p, r=r, q=q, k=k, s=s, computed=found)


def _nt_three_powers(seed: int):
    for r in range(4, 11):
        found = pow(3, 2 ** (r - 3), 2 ** r)
        _expect(found == 1 + 2 ** (r - 1), "3^{2^{r-3}} mod 2^r", r=r, computed=found, expected=1 + 2 ** (r - 1))


def _nt_two_generators(seed: int):
    for r in range(3, 11):
        m = 2 ** r
        gens = aut_cyclic_generators(m)
        orders = {u: unit_order(u, m) for u in gens}
        expected = {3: 2 ** (r - 2), m - 1: 2}
        _expect(orders == expected, "orders of 3 and -1", r=r, computed=orders, expected=expected)
        _expect(unit_closure(list(gens), m) == frozenset(units(m)), "3 and -1 do not generate", r=r)
        _expect(m - 1 not in unit_closure([3], m), "-1 is a power of 3", r=r)


def _nt_reduction(seed: int):
    for p, r in itertools.product((2, 3, 5), (2, 3, 4)):
        for q in range(1, r):
            image = {u % p ** q for u in units(p ** r)}
            _expect(image == set(units(p ** q)), "unit reduction not onto", p=p, r=r, q=q)


def _nt_wilson(seed: int):
    for p in primerange(2, 98):
        product = 1
        for u in range(1, p):
            product = product * u % p
        _expect(product == p - 1, "Wilson product", p=int(p), computed=product)


def _nt_valuation_table(seed: int):
    for p, r in ((3, 2), (3, 3), (5, 2), (5, 3)):
        for row in unit_valuation_table(p, r):
            ok = (row["vp_power"], row["vp_sum"]) == (row["expected_power"], row["expected_sum"])
            _expect(ok, "valuation table row", p=p, r=r, **row)


def _number_theory(grid: Optional[Grid]) -> Dict[str, CheckFn]:
    return {
        "NT-01": _nt_two_adic, "NT-02": _nt_odd_adic, "NT-03": _nt_three_powers,
        "NT-04": _nt_two_generators, "NT-05": _nt_reduction, "NT-06": _nt_wilson,
        "NT-07": _nt_valuation_table,
    }


# =============================================================================
# RUNNER
# =============================================================================

SUITES: Dict[str, Callable[[Optional[Grid]], Dict[str, CheckFn]]] = {
    "holomorph-basics": _holomorph_basics,
    "resolution-acyclicity": _resolution_acyclicity,
    "homology-tables": _homology_tables,
    "cohomology-ranks": _cohomology_ranks,
    "ring-hilbert": _ring_hilbert,
    "dickson-noncollapse": _dickson_noncollapse,
    "congruence-tower": _congruence_tower,
    "bockstein": _bockstein,
    "wreath-permutative": _wreath_permutative,
    "number-theory-lemmas": _number_theory,
}
GRID_SUITES = ("homology-tables", "cohomology-ranks")

assert tuple(SUITES) == SUITE_NAMES


def _run_check(claim_id: str, check: CheckFn, seed: int) -> CheckResult:
    anchor = CLAIMS[claim_id].anchor
    try:
        check(seed)
    except VerificationFailure as exc:
        witness = {"message": str(exc), **exc.witness}
    except BudgetExceeded as exc:
        run_log.log_budget_exceeded(exc.what, exc.size, exc.budget)
        witness = {"message": str(exc)}
    except HollabError as exc:
        witness = {"message": f"{type(exc).__name__}: {exc}"}
    else:
        return CheckResult(claim_id, anchor, PASS)
    run_log.log_check_failure(claim_id, anchor, witness)
    return CheckResult(claim_id, anchor, FAIL, witness)


def suite_checks(name: str, grid: Optional[Grid] = None) -> List[str]:
    """Claim ids a run of ``name`` would check."""
    return sorted(_build(name, grid))


def _build(name: str, grid: Optional[Grid]) -> Dict[str, CheckFn]:
    if name not in SUITES:
        raise ContractViolation(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    if grid is not None and name not in GRID_SUITES:
        raise ContractViolation(f"suite {name!r} has no parameter grid")
    return SUITES[name](grid)


def run_suite(name: str, seed: Optional[int] = None, grid: Optional[Grid] = None,
              timing: bool = True) -> SuiteReport:
    """Run every check of a suite; ``grid`` replaces the (p, r) -> qmax grid of the table suites."""
    checks = _build(name, grid)
    seed = get_suite_seed(name) if seed is None else seed
    start = time.perf_counter()
    ids = sorted(checks)
    with ThreadPoolExecutor(max_workers=max(1, min(get_thread_cap(), len(ids) or 1))) as pool:
        results = list(pool.map(lambda cid: _run_check(cid, checks[cid], seed), ids))
    elapsed = int((time.perf_counter() - start) * 1000)
    report = SuiteReport(name, REPORT_VERSION, seed, sorted(results, key=lambda c: c.id),
                         elapsed if timing else None)
    run_log.log_suite_run(name, seed, len(results) - len(report.failures), len(report.failures), elapsed)
    logger.debug("suite %s: %d checks, %d failed", name, len(results), len(report.failures))
    return report


def run_all(seed: Optional[int] = None, timing: bool = True) -> List[SuiteReport]:
    return [run_suite(name, seed, timing=timing) for name in SUITE_NAMES]

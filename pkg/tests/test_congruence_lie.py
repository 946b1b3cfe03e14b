import itertools

import pytest

from hollab.exceptions import BudgetExceeded, ContractViolation
from hollab.congruence_lie import (
    GammaElement,
    LiePair,
    almost_powerfully_embedded_check,
    bockstein,
    bockstein_algebra,
    bockstein_definitions_agree,
    bockstein_is_extended,
    bockstein_square_zero,
    bracket,
    bracket_matches_commutator,
    gamma_closure_check,
    gamma_enumerate,
    gamma_order,
    gamma_order_from_gl,
    jacobi_check,
    mike_lemma_solve,
    omega1_and_kernel_check,
    p_power_bijection_check,
    p_power_map,
    structure_constants,
    structure_constants_check,
)
from hollab.graded_invariants import GradedAlgebra, Generator
from hollab.holomorph_core import hol_mul


def test_elements_must_reduce_to_the_identity():
    with pytest.raises(ContractViolation, match="congruent to I"):
        GammaElement(((2,),), (0,), 3, 1)
    with pytest.raises(ContractViolation, match="divisible by p"):
        GammaElement(((1,),), (1,), 3, 1)


def test_product_agrees_with_the_holomorph():
    g = GammaElement.from_lie(((1, 2), (0, 1)), (1, 0), 3, 2)
    h = GammaElement.from_lie(((0, 1), (2, 2)), (2, 1), 3, 2)
    assert (g * h).to_hol() == hol_mul(g.to_hol(), h.to_hol())
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()


def test_mixed_levels_are_rejected():
    with pytest.raises(ContractViolation):
        GammaElement.identity(1, 3, 1) * GammaElement.identity(1, 3, 2)


def test_depth():
    assert GammaElement.identity(2, 3, 2).depth() == 3
    assert GammaElement.from_lie(((1,),), (0,), 3, 2).depth() == 1
    assert GammaElement.from_lie(((1,),), (1,), 3, 2, scale=2).depth() == 2


@pytest.mark.parametrize("n,k,p", [(1, 1, 3), (1, 2, 3), (2, 1, 3), (1, 1, 5), (2, 2, 2), (3, 1, 2)])
def test_order_formula_matches_gl_quotient(n, k, p):
    assert gamma_order(n, k, p) == gamma_order_from_gl(n, k, p) == p ** (k * (n * n + n))


@pytest.mark.parametrize("n,k,p", [(1, 1, 3), (1, 2, 3), (2, 1, 3)])
def test_enumeration_size(n, k, p):
    assert sum(1 for _ in gamma_enumerate(n, k, p)) == gamma_order(n, k, p)


def test_order_arguments():
    with pytest.raises(ContractViolation):
        gamma_order(0, 1, 3)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        next(gamma_enumerate(2, 2, 3, budget=100))


def test_closure():
    assert gamma_closure_check(1, 2, 3, samples=100, seed=7)
    assert gamma_closure_check(2, 1, 3, samples=100, seed=7)


@pytest.mark.parametrize("n,k,p", [(1, 1, 3), (1, 2, 3), (2, 1, 3), (1, 1, 5)])
def test_exponent_p_elements_form_the_central_kernel(n, k, p):
    assert omega1_and_kernel_check(n, k, p)


def test_omega1_needs_odd_prime():
    with pytest.raises(ContractViolation):
        omega1_and_kernel_check(1, 1, 2)


def test_p_power_map():
    assert p_power_bijection_check(1, 2, 3)
    assert p_power_bijection_check(1, 2, 5)
    with pytest.raises(ContractViolation, match="k >= 2"):
        p_power_bijection_check(1, 1, 3)


def test_p_power_map_rejects_elements_of_larger_exponent():
    with pytest.raises(ContractViolation, match="exponent p"):
        p_power_map(GammaElement.from_lie(((1,),), (0,), 3, 2))


def test_bracket_of_elementary_matrices():
    p = 3
    e12 = LiePair.basis_element((1, 2), 2, p)
    e21 = LiePair.basis_element((2, 1), 2, p)
    assert bracket(e12, e21).coordinates() == {(1, 1): 1, (2, 2): 2}
    e2 = LiePair.basis_element((2,), 2, p)
    assert bracket(e12, e2).coordinates() == {(1,): 1}
    assert bracket(e2, e12).coordinates() == {(1,): 2}


def test_bracket_shape_mismatch():
    with pytest.raises(ContractViolation):
        bracket(LiePair.zero(1, 3), LiePair.zero(2, 3))


@pytest.mark.parametrize("n,p", [(1, 3), (1, 5), (2, 3)])
def test_bracket_is_the_commutator_mod_p_cubed(n, p):
    assert bracket_matches_commutator(n, p)


@pytest.mark.parametrize("n,p", list(itertools.product((1, 2, 3), (2, 3, 5))))
def test_structure_constants(n, p):
    assert structure_constants_check(n, p)


def test_structure_constants_range():
    with pytest.raises(ContractViolation):
        structure_constants(5, 3)


def test_jacobi():
    assert jacobi_check(2, 3, samples=100, seed=11)
    assert jacobi_check(3, 2, samples=100, seed=11)


@pytest.mark.parametrize("n,p", [(1, 3), (2, 2), (2, 5)])
def test_bockstein_is_a_differential(n, p):
    assert bockstein_square_zero(n, p)
    assert bockstein_definitions_agree(n, p)


def test_bockstein_on_a_generator():
    B = bockstein_algebra(1, 3)
    # beta(x_1) = -x_11 x_1
    image = bockstein(B.gen("x_1"), 1, 3)
    assert image == (B.gen("x_11") * B.gen("x_1")).scale(-1)


def test_bockstein_needs_its_own_algebra():
    other = GradedAlgebra((Generator("t", 2),), 3)
    with pytest.raises(ContractViolation):
        bockstein(other.gen("t"), 1, 3)


def test_extended_primes():
    assert bockstein_is_extended(2) and bockstein_is_extended(3)
    assert not bockstein_is_extended(5)


@pytest.mark.parametrize("a,p,k,variant,expected", [
    (0, 3, 2, "odd", 0),
    (1, 3, 2, "odd", 1),
    (1, 2, 3, "square", 1),
])
def test_root_search(a, p, k, variant, expected):
    assert mike_lemma_solve(a, p, k, variant) == expected


@pytest.mark.parametrize("variant,k", itertools.product(("square", "fourth"), (1, 2, 3, 4)))
def test_two_adic_roots_always_exist(variant, k):
    for a in range(2 ** k):
        mike_lemma_solve(a, 2, k, variant)


def test_root_search_arguments():
    with pytest.raises(ContractViolation, match="unknown variant"):
        mike_lemma_solve(1, 3, 2, "cube")
    with pytest.raises(ContractViolation, match="needs p = 2"):
        mike_lemma_solve(1, 3, 2, "square")


@pytest.mark.parametrize("n,k,p", [(1, 2, 3), (1, 1, 5), (1, 2, 2), (1, 3, 2)])
def test_almost_powerfully_embedded(n, k, p):
    assert almost_powerfully_embedded_check(n, k, p)


def test_almost_powerful_needs_level_two_for_p_two():
    with pytest.raises(ContractViolation):
        almost_powerfully_embedded_check(1, 1, 2)

import itertools

import pytest
from sympy.combinatorics import Permutation

from hollab.exceptions import BudgetExceeded, ContractViolation
from hollab.holomorph_core import (
    FiniteAbelianGroup,
    abelian_groups_of_order,
    abelian_groups_up_to,
    aut_as_permutation_group,
    build_F2,
    cayley_embed,
    conjugation_check,
    e1_stabilizer,
    group_axioms_check,
    hol_elements,
    hol_identity,
    hol_inv,
    hol_maximal_in_gl,
    hol_mul,
    hol_order,
    hol_to_matrix,
    is_hol_full_symmetric,
    lower_congruence_sylow_check,
    make_hol,
    matrix_image_check,
    matrix_multiplicativity_check,
    matrix_to_hol,
    module_action_check,
    pullback_extension,
    reduction_pair,
    sign_map_is_induced,
    sylow_order_check,
    unitriangular_sylow_check,
)

Z3 = FiniteAbelianGroup.cyclic(3)
Z4 = FiniteAbelianGroup.cyclic(4)
Z2Z2 = FiniteAbelianGroup((2, 2))


def test_trivial_moduli_are_dropped():
    assert FiniteAbelianGroup((1, 4, 1)).moduli == (4,)
    assert str(FiniteAbelianGroup(())) == "0"
    assert str(Z2Z2) == "Z/2 + Z/2"


def test_abelian_groups_of_order():
    assert {g.moduli for g in abelian_groups_of_order(8)} == {(8,), (2, 4), (2, 2, 2)}
    assert len(abelian_groups_of_order(12)) == 2
    assert len(abelian_groups_up_to(9)) == 13


@pytest.mark.parametrize("group,order", [(Z3, 6), (Z4, 8), (Z2Z2, 24),
                                         (FiniteAbelianGroup.cyclic(8), 32)])
def test_hol_order(group, order):
    assert hol_order(group) == order
    assert len(hol_elements(group)) == order


def test_pair_product_follows_the_convention():
    f = ((2,),)
    a = make_hol(Z3, f, (1,))
    b = make_hol(Z3, f, (2,))
    # (f,1)(f,2) = (f o f, f^-1(1) + 2) = (1, 2 + 2)
    assert hol_mul(a, b) == make_hol(Z3, ((1,),), (1,))
    assert hol_mul(a, hol_inv(a)) == hol_identity(Z3)


def test_action_is_a_left_action():
    elements = hol_elements(Z4)
    for a, b in itertools.product(elements, repeat=2):
        for x in Z4.elements():
            assert hol_mul(a, b).act(x) == a.act(b.act(x))


def test_make_hol_rejects_non_automorphisms():
    with pytest.raises(ContractViolation):
        make_hol(Z4, ((2,),), (0,))


def test_mismatched_groups():
    with pytest.raises(ContractViolation, match="mismatched groups"):
        hol_identity(Z3) * hol_identity(Z4)


def test_full_symmetric_holomorphs():
    full = sorted(str(K) for K in abelian_groups_up_to(9) if is_hol_full_symmetric(K))
    assert full == sorted(["0", "Z/2", "Z/3", "Z/2 + Z/2"])


@pytest.mark.parametrize("group", [Z3, Z4, Z2Z2])
def test_group_axioms_and_conjugation(group):
    assert group_axioms_check(group)
    assert conjugation_check(group)
    assert module_action_check(group)


def test_cayley_embedding():
    emb = cayley_embed(Z2Z2)
    assert emb.order() == 24
    assert emb.kernel_is_normal()
    h = hol_elements(Z2Z2)[7]
    g = hol_elements(Z2Z2)[11]
    assert emb.to_permutation(hol_mul(h, g)) == emb.to_permutation(h) * emb.to_permutation(g)


def test_pullback_of_the_tautological_action_is_the_holomorph():
    _, images = aut_as_permutation_group(Z4)
    extension = pullback_extension(Z4, images)
    assert extension.order == 8
    assert not extension.is_abelian()
    for h in images:
        assert extension.recovered_action(h) == extension.action[h]


def test_pullback_with_inconsistent_images():
    swap = Permutation([1, 0])
    with pytest.raises(ContractViolation):
        pullback_extension(Z3, {swap: ((0,),)})


def test_reduction_pair_induces_a_homomorphism():
    F2 = build_F2(reduction_pair(8, 4))
    a, b = hol_elements(FiniteAbelianGroup.cyclic(8))[5], hol_elements(FiniteAbelianGroup.cyclic(8))[13]
    assert F2(hol_mul(a, b)) == hol_mul(F2(a), F2(b))


def test_reduction_pair_needs_divisibility():
    with pytest.raises(ContractViolation):
        reduction_pair(8, 3)


def test_sign_map_is_not_induced():
    assert not sign_map_is_induced()


@pytest.mark.parametrize("form", ["row", "column"])
def test_matrix_forms(form):
    K = FiniteAbelianGroup.homocyclic(2, 3)
    h = make_hol(K, ((1, 1), (0, 2)), (2, 1))
    assert matrix_to_hol(hol_to_matrix(h, form), form) == h
    assert matrix_multiplicativity_check(2, 3, samples=50, form=form)


def test_row_form_fixes_first_basis_vector():
    for h in hol_elements(FiniteAbelianGroup.homocyclic(2, 2)):
        column = [row[0] for row in hol_to_matrix(h).entries]
        assert column == [1, 0, 0]


def test_matrix_form_needs_homocyclic_group():
    with pytest.raises(ContractViolation):
        hol_to_matrix(hol_identity(FiniteAbelianGroup((2, 4))))


def test_unknown_matrix_form():
    with pytest.raises(ContractViolation, match="unknown matrix form"):
        hol_to_matrix(hol_identity(Z3), "diagonal")


@pytest.mark.parametrize("n,m", [(1, 4), (2, 2), (2, 3)])
def test_row_form_image_is_the_stabilizer(n, m):
    assert matrix_image_check(n, m)


def test_stabilizer_size():
    assert len(e1_stabilizer(2, 2)) == 24


def test_holomorph_is_maximal_in_gl3_f2():
    assert hol_maximal_in_gl(2, 2)


@pytest.mark.parametrize("n,p,r", list(itertools.product((1, 2, 3), (2, 3), (1, 2))))
def test_sylow_exponents(n, p, r):
    check = sylow_order_check(n, p, r)
    assert check.claim_holds
    assert check.equal == (r == 1)


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (2, 3)])
def test_unitriangular_sylow(n, p):
    assert unitriangular_sylow_check(n, p)


def test_lower_congruence_sylow():
    assert lower_congruence_sylow_check(2, 2, 2)
    assert lower_congruence_sylow_check(2, 3, 2)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        hol_elements(FiniteAbelianGroup.homocyclic(3, 2), budget=1000)

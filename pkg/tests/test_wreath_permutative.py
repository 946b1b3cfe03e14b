import itertools

import pytest
from sympy.combinatorics import Permutation

from hollab.exceptions import BudgetExceeded, ContractViolation
from hollab.holomorph_core import FiniteAbelianGroup, HolElement
from hollab.wreath_permutative import (
    CATEGORY_KINDS,
    AutFactor,
    AutPowers,
    PermutativeCategory,
    HolFactor,
    TranslationFactor,
    WreathElement,
    WreathFactor,
    base_inclusion_check,
    double_wreath_check,
    embed_i,
    embed_j,
    embedding_homomorphism_check,
    embedding_image,
    flatten_double,
    hol_symmetry_acts_as_swap,
    inverse_symmetry,
    make_category,
    permutative_axioms_check,
    to_permutation,
    wreath_action_check,
    wreath_elements,
    wreath_mul,
    wreath_pullback_check,
)

Z2 = FiniteAbelianGroup.cyclic(2)
Z3 = FiniteAbelianGroup.cyclic(3)
SWAP = Permutation([1, 0])
ID2 = Permutation([0, 1])


def test_product_formula():
    factor = TranslationFactor(Z3)
    a = WreathElement(SWAP, ((1,), (2,)), factor)
    b = WreathElement(SWAP, ((0,), (1,)), factor)
    assert wreath_mul(a, b) == WreathElement(ID2, ((2,), (2,)), factor)


def test_parts_must_match_the_permutation():
    with pytest.raises(ContractViolation):
        WreathElement(SWAP, ((0,),), TranslationFactor(Z3))


def test_products_need_matching_shapes():
    t3 = TranslationFactor(Z3)
    with pytest.raises(ContractViolation, match="points"):
        wreath_mul(WreathElement.identity(2, t3), WreathElement.identity(3, t3))
    with pytest.raises(ContractViolation, match="different factors"):
        wreath_mul(WreathElement.identity(2, t3), WreathElement.identity(2, HolFactor(Z3)))


@pytest.mark.parametrize("factor", [TranslationFactor(Z3), HolFactor(Z2), HolFactor(Z3), AutFactor(Z3)])
def test_product_acts_by_composition(factor):
    assert wreath_action_check(2, factor, samples=60, seed=2)


def test_permutation_representation_is_multiplicative():
    factor = HolFactor(Z2)
    points = FiniteAbelianGroup.homocyclic(2, 2).elements()
    elements = wreath_elements(2, factor)
    for a, b in itertools.product(elements[::5], elements[::7]):
        assert to_permutation(wreath_mul(a, b), points) == to_permutation(a, points) * to_permutation(b, points)


def test_wreath_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        wreath_elements(3, HolFactor(Z3), budget=1000)


def test_embed_i_of_the_swap_is_a_permutation_matrix():
    factor = AutFactor(Z2)
    w = WreathElement(SWAP, (Z2.identity_aut, Z2.identity_aut), factor)
    assert embed_i(w) == ((0, 1), (1, 0))


def test_embeddings_check_their_factor():
    with pytest.raises(ContractViolation):
        embed_i(WreathElement.identity(2, HolFactor(Z2)))
    with pytest.raises(ContractViolation):
        embed_j(WreathElement.identity(2, AutFactor(Z2)))


@pytest.mark.parametrize("factor", [AutFactor(Z2), AutFactor(Z3), HolFactor(Z2), HolFactor(Z3)])
def test_embeddings_are_injective_homomorphisms(factor):
    assert embedding_homomorphism_check(2, factor, samples=80, seed=4)


def test_embedding_image_orders():
    assert len(embedding_image(2, HolFactor(Z2))) == 8
    assert len(embedding_image(2, AutFactor(Z3))) == 8


def test_translations_embed_as_translations():
    w = WreathElement(ID2, ((1,), (2,)), TranslationFactor(Z3))
    target = FiniteAbelianGroup.homocyclic(2, 3)
    assert embed_j(w) == HolElement(target, target.identity_aut, (1, 2))


@pytest.mark.parametrize("group,q", [(Z2, 2), (Z3, 2), (Z3, 4)])
def test_base_inclusion(group, q):
    assert base_inclusion_check(q, group)


def test_base_inclusion_budget():
    with pytest.raises(BudgetExceeded):
        base_inclusion_check(5, Z3)


@pytest.mark.parametrize("gens,group", [([SWAP], Z2), ([SWAP], Z3), ([], Z3)])
def test_pullback_description(gens, group):
    assert wreath_pullback_check(gens, group, 2)


def test_double_wreath():
    assert double_wreath_check(2, 2, Z2, samples=40, seed=9)


def test_flatten_needs_nested_wreath():
    with pytest.raises(ContractViolation):
        flatten_double(WreathElement.identity(2, HolFactor(Z2)))


def test_flatten_of_identity():
    outer = WreathFactor(2, HolFactor(Z2))
    w = WreathElement.identity(2, outer)
    assert flatten_double(w) == WreathElement.identity(4, HolFactor(Z2))


@pytest.mark.parametrize("kind,modulus", list(itertools.product(CATEGORY_KINDS, (2, 3))))
@pytest.mark.parametrize("objects", [(0, 1, 1), (1, 1, 1), (2, 1, 0)])
def test_permutative_axioms(kind, modulus, objects):
    assert permutative_axioms_check(make_category(kind, modulus), *objects, seed=5)


def test_object_range():
    with pytest.raises(ContractViolation):
        permutative_axioms_check(make_category("aut-powers", 2), 4, 0, 0)


@pytest.mark.parametrize("kind", CATEGORY_KINDS)
def test_symmetry_inverse_is_the_reverse_symmetry(kind):
    C = make_category(kind, 3)
    for m, n in [(1, 1), (1, 2), (2, 1)]:
        assert inverse_symmetry(C, m, n) == C.symmetry(n, m)


def test_matrix_symmetry_over_z2():
    c = make_category("hol-matrix", 2).symmetry(1, 1)
    assert c.entries == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert (c @ c).is_identity()


def test_hol_symmetry_swaps_points():
    C = make_category("hol-powers", 3)
    assert hol_symmetry_acts_as_swap(C, 1, 2)
    assert hol_symmetry_acts_as_swap(C, 2, 1)


def test_category_arguments():
    with pytest.raises(ContractViolation, match="unknown category"):
        make_category("groupoid", 2)
    with pytest.raises(ContractViolation, match="<= 4"):
        make_category("aut-powers", 5)
    with pytest.raises(ContractViolation, match="cyclic ring"):
        make_category("hol-matrix", group=FiniteAbelianGroup((2, 2)))
    with pytest.raises(ContractViolation, match="homocyclic"):
        AutPowers(FiniteAbelianGroup((2, 3)))


def test_category_base_is_abstract():
    class Partial(PermutativeCategory):
        def hom_size(self, n):
            return 1

    with pytest.raises(TypeError, match="abstract"):
        PermutativeCategory(FiniteAbelianGroup.cyclic(2))
    with pytest.raises(TypeError, match="symmetry"):
        Partial(FiniteAbelianGroup.cyclic(2))
    assert all(isinstance(make_category(kind), PermutativeCategory) for kind in CATEGORY_KINDS)

import pytest

from hollab.exceptions import ContractViolation, UnsupportedCase, VerificationFailure
from hollab.holomorph_core import FiniteAbelianGroup, hol_elements, hol_mul
from hollab.homology_engine import AbelianInvariants, homology
from hollab.group_ring_resolution import (
    GroupRingElement,
    L_element,
    MetabelianPresentation,
    augment,
    augmentation_agrees,
    build_resolution,
    hol_cyclic_presentation,
    monomial_to_hol,
    norm_z,
    normalize,
    relator_check,
    summand_rows,
    verify_square_zero,
    wall_plane_identities,
)

HOL8 = MetabelianPresentation(8, 2, 2, 3, 7)


def test_presentation_parameters_are_validated():
    with pytest.raises(ContractViolation, match="t1\\^s1"):
        MetabelianPresentation(8, 2, 2, 2, 7)
    with pytest.raises(ContractViolation):
        MetabelianPresentation(0, 2, 2, 3, 7)


def test_holomorph_presentations():
    assert hol_cyclic_presentation(2, 3) == HOL8
    assert hol_cyclic_presentation(2, 4) == MetabelianPresentation(16, 4, 2, 3, 15)
    P = hol_cyclic_presentation(3, 2)
    assert (P.q, P.s1, P.s2, P.t2) == (9, 6, 1, 1)
    assert P.order == 54


def test_small_two_power_holomorphs_have_no_presentation():
    with pytest.raises(UnsupportedCase):
        hol_cyclic_presentation(2, 2)


@pytest.mark.parametrize("p,r", [(2, 3), (2, 4), (3, 1), (3, 2), (5, 1)])
def test_relators_hold(p, r):
    assert relator_check(hol_cyclic_presentation(p, r))


def test_normal_form_moves_z_past_x():
    assert normalize("zx", HOL8) == normalize("xzzz", HOL8)
    assert normalize("xX", HOL8) == (0, 0, 0)
    with pytest.raises(ContractViolation, match="unknown generator"):
        normalize("w", HOL8)


def test_monomials_map_isomorphically_onto_the_holomorph():
    images = {monomial_to_hol(HOL8, u) for u in HOL8.monomials()}
    assert images == set(hol_elements(FiniteAbelianGroup.cyclic(8)))
    monomials = HOL8.monomials()
    for u in monomials[::3]:
        for v in monomials[::5]:
            assert monomial_to_hol(HOL8, HOL8.multiply(u, v)) == hol_mul(
                monomial_to_hol(HOL8, u), monomial_to_hol(HOL8, v))


def test_group_ring_arithmetic():
    z = GroupRingElement.word(HOL8, "z")
    one = GroupRingElement.one(HOL8)
    assert (norm_z(HOL8) * (z - one)).is_zero()
    assert norm_z(HOL8).augmentation() == 8
    assert L_element(HOL8, 3).augmentation() == 3
    assert (z ** 8) == one
    assert (2 * z).augmentation() == 2


def test_build_resolution_arguments():
    with pytest.raises(ContractViolation):
        build_resolution(HOL8, 1)
    with pytest.raises(ContractViolation, match="x_plane_exponent"):
        build_resolution(HOL8, 4, "s3")


@pytest.mark.parametrize("P", [HOL8, MetabelianPresentation(16, 4, 2, 3, 15), hol_cyclic_presentation(3, 2)])
def test_square_zero(P):
    res = build_resolution(P, 8)
    verify_square_zero(res)
    assert augmentation_agrees(res, samples=20, seed=3)


def test_plane_identities():
    wall_plane_identities(build_resolution(HOL8, 6))


def test_x_plane_with_the_other_exponent_breaks_integrality():
    # s1 != s2 for Hol(Z/16), so t1^(m s2) - 1 is not divisible by q
    with pytest.raises(VerificationFailure, match="integrality"):
        build_resolution(MetabelianPresentation(16, 4, 2, 3, 15), 4, "s2")


def test_summand_rows():
    assert summand_rows(0) == (0,)
    assert summand_rows(3) == (5, 6)


def test_bottom_summand_is_the_quotient_homology():
    res = build_resolution(HOL8, 4)
    bottom = augment(res, 0)
    assert homology(bottom, 0) == AbelianInvariants(1)
    assert homology(bottom, 1) == AbelianInvariants(0, (2, 2))
    with pytest.raises(ContractViolation):
        augment(res, -1)

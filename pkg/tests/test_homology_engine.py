import pytest

from hollab.chain_complex import ChainComplex
from hollab.exceptions import ContractViolation, UnsupportedCase, VerificationFailure
from hollab.group_ring_resolution import hol_cyclic_presentation
from hollab.holomorph_core import FiniteAbelianGroup, hol_elements, hol_identity, hol_mul
from hollab.homology_engine import (
    AbelianInvariants,
    abelianization,
    check_uct_ranks,
    closed_form_homology,
    compare_homology,
    computed_homology,
    coefficient_reduction_check,
    cyclic_complex_homology,
    homology,
    mod_p_cohomology_ranks,
    summand_homology,
    uct_ranks,
)
from hollab.modular_linalg import IntegerMatrix

from oracles import bar_homology


def _complex(ranks, diffs):
    return ChainComplex(ranks, {q: IntegerMatrix.from_rows(rows, ranks[q]) for q, rows in diffs.items()})


def test_invariants_split_into_prime_powers():
    six = AbelianInvariants.from_factors(0, [6, 1, 4])
    assert six.torsion == (2, 3, 4)
    assert six.order == 24
    assert str(six) == "Z/2 + Z/3 + Z/4"
    assert str(AbelianInvariants()) == "0"
    assert str(AbelianInvariants(2, (2,))) == "Z^2 + Z/2"
    assert AbelianInvariants(1).order is None


def test_invariants_reject_trivial_torsion():
    with pytest.raises(ContractViolation):
        AbelianInvariants(0, (1,))


def test_homology_of_multiplication_by_two():
    C = _complex({0: 1, 1: 1}, {1: [[2]]})
    assert homology(C, 0) == AbelianInvariants(0, (2,))
    assert homology(C, 1) == AbelianInvariants()


def test_homology_of_a_circle():
    C = _complex({0: 1, 1: 1}, {1: [[0]]})
    assert homology(C, 0) == AbelianInvariants(1)
    assert homology(C, 1) == AbelianInvariants(1)


def test_homology_rejects_non_complexes():
    C = _complex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})
    with pytest.raises(ContractViolation, match="not a chain complex"):
        homology(C, 1)


def test_chain_complex_shape_is_checked():
    with pytest.raises(ContractViolation, match="shape"):
        ChainComplex({0: 1, 1: 2}, {1: IntegerMatrix.from_rows([[1]], 1)})


@pytest.mark.parametrize("q,expected", [
    (0, "Z"),
    (1, "Z/2"),
    (2, "0"),
    (3, "Z/2 + Z/3"),
    (4, "0"),
    (5, "Z/2"),
    (7, "Z/2 + Z/3"),
])
def test_symmetric_group_closed_form(q, expected):
    assert str(closed_form_homology(3, 1, q)) == expected


@pytest.mark.parametrize("q,expected", [
    (1, "Z/2 + Z/2 + Z/2"),
    (2, "Z/2 + Z/2"),
    (3, "Z/2 + Z/2 + Z/2 + Z/2 + Z/8"),
])
def test_hol_z8_closed_form(q, expected):
    assert str(closed_form_homology(2, 3, q)) == expected


@pytest.mark.parametrize("p,r", [(2, 2), (2, 1), (4, 1), (1, 3)])
def test_closed_form_unsupported(p, r):
    with pytest.raises(UnsupportedCase, match="no closed formula"):
        closed_form_homology(p, r, 1)


def test_negative_degree():
    with pytest.raises(ContractViolation):
        closed_form_homology(3, 1, -1)


@pytest.mark.parametrize("p,r,qmax", [(2, 3, 6), (2, 4, 5), (3, 1, 6), (3, 2, 5), (5, 1, 5)])
def test_computed_matches_closed_form(p, r, qmax):
    table = compare_homology(p, r, qmax)
    assert sorted(table) == list(range(qmax + 1))
    assert table[0] == AbelianInvariants(1)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_symmetric_group_against_bar_resolution(q):
    K = FiniteAbelianGroup.cyclic(3)
    oracle = bar_homology(hol_elements(K), hol_mul, hol_identity(K), q)
    assert oracle == computed_homology(3, 1, q)[q] == closed_form_homology(3, 1, q)


@pytest.mark.parametrize("q,expected", [(1, AbelianInvariants(0, (2, 2))), (2, AbelianInvariants(0, (2,)))])
def test_dihedral_group_of_order_eight(q, expected):
    K = FiniteAbelianGroup.cyclic(4)
    assert bar_homology(hol_elements(K), hol_mul, hol_identity(K), q) == expected


def test_bar_oracle_refuses_large_groups():
    K = FiniteAbelianGroup.cyclic(8)
    with pytest.raises(ValueError):
        bar_homology(hol_elements(K), hol_mul, hol_identity(K), 3)


@pytest.mark.parametrize("p,r", [(2, 3), (2, 4), (3, 1), (3, 2)])
def test_first_homology_is_the_abelianization(p, r):
    assert computed_homology(p, r, 1)[1] == abelianization(hol_cyclic_presentation(p, r))


def test_summand_degree_range():
    with pytest.raises(ContractViolation):
        summand_homology(hol_cyclic_presentation(3, 1), 13)


def test_two_primary_ranks():
    assert [mod_p_cohomology_ranks(2, 3, q) for q in range(8)] == [1, 3, 5, 7, 10, 14, 18, 22]
    assert mod_p_cohomology_ranks(2, 5, 6) == mod_p_cohomology_ranks(2, 3, 6)


def test_odd_primary_ranks():
    assert [mod_p_cohomology_ranks(3, 3, q) for q in range(13)] == \
        [1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 3]


@pytest.mark.parametrize("p,r", [(3, 2), (2, 2), (3, 1)])
def test_ranks_unsupported(p, r):
    with pytest.raises(UnsupportedCase):
        mod_p_cohomology_ranks(p, r, 2)


def test_uct_ranks_from_a_table():
    table = {0: AbelianInvariants(1), 1: AbelianInvariants(0, (2, 4)), 2: AbelianInvariants(0, (3,))}
    assert uct_ranks(table, 2) == {0: 1, 1: 2, 2: 2}
    assert uct_ranks(table, 3) == {0: 1, 1: 0, 2: 1}


def test_uct_agrees_with_rank_formula():
    assert check_uct_ranks(2, 3, 5) == {q: mod_p_cohomology_ranks(2, 3, q) for q in range(6)}
    check_uct_ranks(3, 3, 4)


def test_uct_disagreement_is_a_verification_failure():
    table = {0: AbelianInvariants(1), 1: AbelianInvariants()}
    with pytest.raises(VerificationFailure, match="UCT rank"):
        check_uct_ranks(2, 3, 1, table)


def test_cyclic_complex_homology():
    assert cyclic_complex_homology(8, [2, 4, 2]) == [2, 1, 1, 2]
    with pytest.raises(ContractViolation):
        cyclic_complex_homology(8, [2, 2])


def test_homology_depends_only_on_valuations():
    assert coefficient_reduction_check(27, (3, 9, 3), seed=5)
    assert coefficient_reduction_check(16, (4, 4, 4), seed=5)
    with pytest.raises(UnsupportedCase):
        coefficient_reduction_check(12, (2, 6))

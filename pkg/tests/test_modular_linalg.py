import pytest

from hollab.exceptions import BudgetExceeded, ContractViolation, UnsupportedCase
from hollab.modular_linalg import (
    IntegerMatrix,
    Residue,
    ResidueMatrix,
    aut_cyclic_generators,
    det_int,
    enumerate_gl,
    gl_order,
    inverse_rows_mod,
    local_invariant_valuations,
    prime_power,
    rank_mod_p,
    smith_decomposition,
    smith_normal_form,
    unit_closure,
    unit_order,
    unit_valuation_table,
    units,
    vp,
)


def test_residue_arithmetic():
    a = Residue(5, 8)
    assert a + 4 == Residue(1, 8)
    assert a * a == Residue(1, 8)
    assert a.inverse() == Residue(5, 8)
    assert (-a).value == 3
    assert a ** -1 == a.inverse()


def test_residue_mixed_moduli_rejected():
    with pytest.raises(ContractViolation, match="mixed moduli"):
        Residue(1, 4) + Residue(1, 8)


def test_residue_non_unit_has_no_inverse():
    with pytest.raises(ContractViolation):
        Residue(2, 4).inverse()


def test_residue_matrix_inverse_and_identity():
    M = ResidueMatrix(((1, 2), (3, 4)), 5)
    assert (M @ M.inverse()).is_identity()
    assert M.det == (4 - 6) % 5


def test_residue_matrix_shape_mismatch():
    with pytest.raises(ContractViolation, match="shape mismatch"):
        ResidueMatrix(((1, 0),), 3) @ ResidueMatrix(((1, 0),), 3)


def test_non_invertible_matrix():
    with pytest.raises(ContractViolation):
        inverse_rows_mod(((2, 0), (0, 1)), 4)


def test_det_int():
    assert det_int(((2, 1), (7, 4))) == 1
    assert det_int(((0, 1), (1, 0))) == -1
    assert det_int(((1, 2, 3), (4, 5, 6), (7, 8, 9))) == 0
    assert det_int(()) == 1


@pytest.mark.parametrize("n,p,e", [(48, 2, 4), (81, 3, 4), (7, 2, 0), (-12, 2, 2)])
def test_vp(n, p, e):
    assert vp(n, p) == e


def test_vp_of_zero_is_a_contract_violation():
    with pytest.raises(ContractViolation):
        vp(0, 2)


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(2) == (2, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


@pytest.mark.parametrize("rows,expected", [
    (((2, 4), (6, 8)), (2, 4)),
    (((1, 0), (0, 1)), (1, 1)),
    (((0, 0, 0), (0, 0, 0)), (0, 0)),
    (((2, 0), (0, 3)), (1, 6)),
])
def test_smith_normal_form(rows, expected):
    assert smith_normal_form(IntegerMatrix.from_rows(rows)) == expected


def test_smith_transforms_reproduce_diagonal():
    M = IntegerMatrix.from_rows([(3, 6, 9), (2, 4, 5), (1, 1, 1)])
    S = smith_decomposition(M)
    assert S.left @ M @ S.right == S.diagonal
    d = [abs(x) for x in S.invariants if x]
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_smith_empty_shapes():
    assert smith_normal_form(IntegerMatrix.zeros(0, 3)) == ()
    assert smith_decomposition(IntegerMatrix.zeros(3, 0)).rank == 0


def test_rank_mod_p():
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[2, 0], [0, 2]], 2) == 0
    assert rank_mod_p([[2, 0], [0, 2]], 3) == 2
    assert rank_mod_p([], 5) == 0


def test_local_invariant_valuations():
    assert local_invariant_valuations([[4, 0], [0, 2]], 2, 3) == [1, 2]
    assert local_invariant_valuations([[8]], 2, 3) == []


def test_unit_groups():
    assert units(8) == [1, 3, 5, 7]
    assert unit_order(3, 16) == 4
    assert unit_closure([3, 15], 16) == frozenset(units(16))
    assert 15 not in unit_closure([3], 16)


@pytest.mark.parametrize("r", range(3, 11))
def test_aut_cyclic_two_power_generators(r):
    m = 2 ** r
    gens = aut_cyclic_generators(m)
    assert gens == {3: 2 ** (r - 2), m - 1: 2}
    assert all(unit_order(u, m) == order for u, order in gens.items())


def test_aut_cyclic_odd_prime_power():
    (s, order), = aut_cyclic_generators(9).items()
    assert order == 6
    assert unit_order(s, 9) == 6


@pytest.mark.parametrize("m", [4, 12])
def test_aut_cyclic_unsupported(m):
    with pytest.raises(UnsupportedCase):
        aut_cyclic_generators(m)


def test_gl_order_and_enumeration():
    assert gl_order(2, 2, 1) == 6
    assert gl_order(3, 2, 1) == 168
    assert gl_order(2, 2, 2) == 96
    assert sum(1 for _ in enumerate_gl(2, 4)) == 96
    assert sum(1 for _ in enumerate_gl(2, 3)) == 48


def test_enumerate_gl_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_gl(3, 5, budget=1000))


@pytest.mark.parametrize("p,r", [(3, 2), (3, 3), (5, 2)])
def test_unit_valuation_table_matches_case_split(p, r):
    table = unit_valuation_table(p, r)
    assert table
    for row in table:
        assert row["vp_power"] == row["expected_power"], row
        assert row["vp_sum"] == row["expected_sum"], row


def test_unit_valuation_table_needs_odd_prime():
    with pytest.raises(UnsupportedCase):
        unit_valuation_table(2, 3)

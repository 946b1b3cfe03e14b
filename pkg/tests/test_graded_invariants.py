import pytest

from hollab.exceptions import BudgetExceeded, ContractViolation
from hollab.graded_invariants import (
    GradedAlgebra,
    GradedElement,
    GradedPresentation,
    Generator,
    apply_d2,
    check_gl_invariance,
    continuous_limit_cohomology,
    dickson_coefficient,
    hilbert_series,
    hol_odd_cohomology,
    hol_two_cohomology,
    noncollapse_bidegree,
    series_coefficients,
    spectral_algebra,
)
from hollab.homology_engine import mod_p_cohomology_ranks


@pytest.fixture
def exterior_pair():
    return GradedAlgebra((Generator("a", 1, exterior=True), Generator("b", 1, exterior=True),
                          Generator("z", 2)), 3)


def test_generator_names_must_be_unique():
    with pytest.raises(ContractViolation, match="duplicate"):
        GradedAlgebra((Generator("a", 1), Generator("a", 2)), 2)


def test_odd_polynomial_generators_need_characteristic_two():
    with pytest.raises(ContractViolation, match="p = 2"):
        GradedAlgebra((Generator("a", 1),), 3)


def test_exterior_generators_anticommute(exterior_pair):
    a, b = exterior_pair.gen("a"), exterior_pair.gen("b")
    assert (a * a).is_zero()
    assert b * a == (a * b).scale(-1)
    z = exterior_pair.gen("z")
    assert a * z == z * a


def test_parse_and_coefficients(exterior_pair):
    f = exterior_pair.parse("a*b + 2*z^2 + z")
    assert f.coefficient("a*b") == 1
    assert f.coefficient("z^2") == 2
    assert f.degrees() == [2, 4]
    with pytest.raises(ContractViolation, match="not homogeneous"):
        f.degree


def test_parse_rejects_garbage(exterior_pair):
    with pytest.raises(ContractViolation, match="cannot parse"):
        exterior_pair.parse("a&b")


def test_relations_must_be_homogeneous(exterior_pair):
    with pytest.raises(ContractViolation):
        GradedPresentation.from_strings("bad", exterior_pair, ["a = z"])


def test_series_coefficients():
    assert series_coefficients([1], [1, -1], 4) == [1, 1, 1, 1, 1]
    assert series_coefficients([1, 2, 1], [1, -1], 5) == [1, 3, 4, 4, 4, 4]
    with pytest.raises(ContractViolation):
        series_coefficients([1], [2, 1], 3)


def test_continuous_limit_series():
    assert hilbert_series(continuous_limit_cohomology(2), 6) == [1, 3, 4, 4, 4, 4, 4]
    assert hilbert_series(continuous_limit_cohomology(5), 3) == [1, 1, 0, 0]


@pytest.mark.parametrize("r", [3, 4])
def test_two_primary_ring_matches_rank_formula(r):
    series = hilbert_series(hol_two_cohomology(r), 9)
    assert series == [mod_p_cohomology_ranks(2, r, q) for q in range(10)]


def test_two_primary_ring_needs_the_restored_terms():
    bare = GradedPresentation.from_strings("bare", hol_two_cohomology(4).algebra, [
        "a^2 = a*x + a*y", "a*z = 0", "a*b = b*y", "b^2 = a*c*x + b*x*z + a*c*y"])
    series = hilbert_series(bare, 5)
    assert series[:5] == [mod_p_cohomology_ranks(2, 4, q) for q in range(5)] == [1, 3, 5, 7, 10]
    # a*(a*b) = (a^2)*b forces b*x*y into the ideal
    assert series[5] < mod_p_cohomology_ranks(2, 4, 5) == 14


def test_odd_primary_ring_matches_rank_formula():
    series = hilbert_series(hol_odd_cohomology(3), 13)
    assert series == [mod_p_cohomology_ranks(3, 3, q) for q in range(14)]


def test_named_presentation_arguments():
    with pytest.raises(ContractViolation):
        hol_two_cohomology(2)
    with pytest.raises(ContractViolation):
        hol_odd_cohomology(2)


@pytest.mark.parametrize("n,p,expected", [
    (1, 2, "v1"),
    (1, 3, "2*v1^2"),
])
def test_dickson_coefficient_small_cases(n, p, expected):
    assert str(dickson_coefficient(n, p)) == expected


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (2, 3)])
def test_dickson_coefficient_is_invariant(n, p):
    f = dickson_coefficient(n, p)
    assert f.degree == 2 * (p ** n - 1)
    assert check_gl_invariance(f, n, p)


def test_single_variable_is_not_invariant():
    A = spectral_algebra(2, 2, "r>3")
    assert not check_gl_invariance(A.gen("v1"), 2, 2)


def test_dickson_arguments():
    with pytest.raises(ContractViolation):
        dickson_coefficient(0, 2)
    with pytest.raises(BudgetExceeded):
        dickson_coefficient(2, 5, budget=10)


def test_mode_must_match_characteristic():
    with pytest.raises(ContractViolation, match="does not apply"):
        spectral_algebra(1, 2, "odd")
    with pytest.raises(ContractViolation, match="unknown d2 mode"):
        apply_d2(dickson_coefficient(1, 3), "bogus")


def test_mode_must_match_the_algebra():
    with pytest.raises(ContractViolation, match="mode 'r3' E2 algebra"):
        apply_d2(dickson_coefficient(2, 2), "r3")
    with pytest.raises(ContractViolation, match="mode 'r>3' E2 algebra"):
        apply_d2(dickson_coefficient(2, 2, "r3"), "r>3")


def test_d2_on_a_generator():
    A = spectral_algebra(1, 2, "r>3")
    assert apply_d2(A.gen("v1")) == A.gen("u1") * A.gen("z1")
    A3 = spectral_algebra(1, 2, "r3")
    assert apply_d2(A3.gen("v1"), "r3") == A3.gen("u1") * A3.gen("x1") ** 2


def _random_element(A, degree, rng, terms=3):
    monos = A.monomials(degree)
    picked = rng.sample(monos, min(terms, len(monos)))
    return GradedElement.from_dict(A, {m: rng.randrange(1, A.p) for m in picked})


D2_CASES = [(2, 2, "r>3"), (2, 2, "r3"), (2, 3, "odd")]


@pytest.mark.parametrize("n,p,mode", D2_CASES)
def test_d2_is_linear(rng, n, p, mode):
    A = spectral_algebra(n, p, mode)
    for _ in range(50):
        f = _random_element(A, rng.randint(1, 6), rng)
        g = _random_element(A, rng.randint(1, 6), rng)
        s, t = rng.randrange(p), rng.randrange(p)
        combined = apply_d2(f.scale(s) + g.scale(t), mode)
        assert combined == apply_d2(f, mode).scale(s) + apply_d2(g, mode).scale(t)


@pytest.mark.parametrize("n,p,mode", D2_CASES)
def test_d2_obeys_the_signed_leibniz_rule(rng, n, p, mode):
    A = spectral_algebra(n, p, mode)
    for _ in range(50):
        f = _random_element(A, rng.randint(1, 4), rng)
        g = _random_element(A, rng.randint(1, 4), rng)
        sign = -1 if f.degree % 2 else 1
        expected = apply_d2(f, mode) * g + (f * apply_d2(g, mode)).scale(sign)
        assert apply_d2(f * g, mode) == expected


@pytest.mark.parametrize("n,p,mode", D2_CASES)
def test_d2_squares_to_zero(rng, n, p, mode):
    A = spectral_algebra(n, p, mode)
    for _ in range(200):
        f = _random_element(A, rng.randint(1, 7), rng)
        assert apply_d2(apply_d2(f, mode), mode).is_zero()


def test_d2_of_a_square_in_characteristic_two():
    A = spectral_algebra(1, 2, "r>3")
    v = A.gen("v1")
    assert apply_d2(v ** 2).is_zero()
    assert apply_d2(v ** 3) == A.parse("u1*v1^2*z1")
    B = spectral_algebra(1, 3, "odd")
    assert apply_d2(B.gen("v1") ** 2) == B.parse("2*u1*v1*z1")


@pytest.mark.parametrize("n,p,mode", [(1, 2, "r>3"), (2, 2, "r3"), (2, 2, "r>3"), (3, 2, "r>3"), (2, 3, "odd")])
def test_d2_of_dickson_coefficient_is_nonzero(n, p, mode):
    image = apply_d2(dickson_coefficient(n, p, mode), mode)
    assert not image.is_zero()
    assert noncollapse_bidegree(n, p, mode) == (2, 2 * p ** n - 3)

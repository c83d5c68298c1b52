import random

import pytest

from oracles import jt_product
from stablechar.partitions import EMPTY, Partition, partitions_of, partitions_through, subpartitions
from stablechar.schur import (
    BasisMismatchError,
    FormalSum,
    dual_jacobi_trudi,
    lr_coefficient,
    omega,
    schur_multiply,
    skew_expand,
)


def s(*parts):
    return FormalSum.single("schur", Partition(parts))


def test_lr_classic_multiplicity_two():
    lam, mu, nu = Partition((3, 2, 1)), Partition((2, 1)), Partition((2, 1))
    assert lr_coefficient(lam, mu, nu) == 2
    assert jt_product(mu, nu).get(lam.parts) == 2


def test_lr_unit_law():
    for lam in partitions_through(6):
        assert lr_coefficient(lam, EMPTY, lam) == 1
        assert lr_coefficient(lam, lam, EMPTY) == 1


def test_lr_vanishing():
    assert lr_coefficient(Partition((2, 2)), Partition((2,)), Partition((1, 1))) == 0
    # size mismatch and non-containment
    assert lr_coefficient(Partition((3,)), Partition((1,)), Partition((1,))) == 0
    assert lr_coefficient(Partition((2, 2)), Partition((3,)), Partition((1,))) == 0


def test_schur_multiply_pieri_examples():
    assert schur_multiply(s(1), s(1)) == s(2) + s(1, 1)
    assert schur_multiply(s(2), s(1, 1)) == s(3, 1) + s(2, 1, 1)
    a = s(3, 1) + s(2).scaled(5)
    assert schur_multiply(s(), a) == a


def test_schur_multiply_matches_determinant_oracle():
    shapes = list(partitions_through(4))
    for mu in shapes:
        for nu in shapes:
            got = schur_multiply(
                FormalSum.single("schur", mu), FormalSum.single("schur", nu)
            )
            expected = jt_product(mu, nu)
            assert {lam.parts: c for lam, c in got.terms.items()} == expected, (mu, nu)


def test_schur_multiply_oracle_spot_checks_size_five():
    pairs = [((3, 2), (2, 2, 1)), ((4, 1), (3, 2)), ((2, 2, 1), (2, 2, 1))]
    for mp, np_ in pairs:
        mu, nu = Partition(mp), Partition(np_)
        got = schur_multiply(
            FormalSum.single("schur", mu), FormalSum.single("schur", nu)
        )
        assert {lam.parts: c for lam, c in got.terms.items()} == jt_product(mu, nu)


def test_skew_expand_examples():
    assert skew_expand(Partition((3, 2, 2)), Partition((1, 1))) == s(3, 1, 1) + s(2, 2, 1)
    assert skew_expand(Partition((3, 2, 2)), Partition((2, 2))) == s(3) + s(2, 1)
    lam = Partition((3, 1))
    assert skew_expand(lam, lam) == s()
    assert skew_expand(Partition((2,)), Partition((1, 1))).is_zero


def test_skew_product_adjointness_exhaustive():
    # <s_{lam/mu}, s_nu> equals the coefficient of s_lam in s_mu s_nu.
    for lam in partitions_through(8):
        for mu in subpartitions(lam):
            expansion = skew_expand(lam, mu)
            for nu in partitions_of(lam.size - mu.size):
                prod = schur_multiply(
                    FormalSum.single("schur", mu), FormalSum.single("schur", nu)
                )
                assert expansion.coefficient(nu) == prod.coefficient(lam)


def test_lr_symmetry_and_conjugation():
    for lam in partitions_through(8):
        lam_t = lam.transpose()
        for mu in subpartitions(lam):
            left = skew_expand(lam, mu)
            right = skew_expand(lam_t, mu.transpose())
            assert omega(left) == right
            for nu, c in left.terms.items():
                assert lr_coefficient(lam, nu, mu) == c


def test_multiply_commutative_associative_random():
    rng = random.Random(99)
    pool = list(partitions_through(5))
    for _ in range(20):
        a, b, c = (FormalSum.single("schur", rng.choice(pool)) for _ in range(3))
        ab = schur_multiply(a, b)
        assert ab == schur_multiply(b, a)
        assert schur_multiply(ab, c) == schur_multiply(a, schur_multiply(b, c))


def test_omega_examples_and_automorphism():
    assert omega(s(3)) == s(1, 1, 1)
    assert omega(s(2, 1)) == s(2, 1)
    rng = random.Random(5)
    pool = list(partitions_through(5))
    for _ in range(15):
        a = FormalSum.single("schur", rng.choice(pool))
        b = FormalSum.single("schur", rng.choice(pool))
        assert omega(omega(a)) == a
        assert omega(schur_multiply(a, b)) == schur_multiply(omega(a), omega(b))


def column_gen(n):
    if n < 0:
        return FormalSum.zero("schur")
    return FormalSum.single("schur", Partition([1] * n))


def test_dual_jacobi_trudi_reproduces_schur_basis():
    for lam in partitions_through(8):
        got = dual_jacobi_trudi(lam, column_gen, schur_multiply)
        assert got == FormalSum.single("schur", lam), lam


def test_dual_jacobi_trudi_single_column_is_generator():
    for k in range(5):
        lam = Partition([1] * k)
        assert dual_jacobi_trudi(lam, column_gen, schur_multiply) == column_gen(k)


def test_dual_jacobi_trudi_row_example():
    # det [[e1, e2], [1, e1]] = s_2
    assert dual_jacobi_trudi(Partition((2,)), column_gen, schur_multiply) == s(2)


def test_formal_sum_arithmetic_and_validation():
    a = s(2) + s(1, 1)
    assert a - s(1, 1) == s(2)
    assert (a - a).is_zero
    assert a.scaled(0).is_zero
    assert a.coefficient(Partition((3,))) == 0
    with pytest.raises(BasisMismatchError):
        schur_multiply(a, FormalSum.single("sp", Partition((1,))))
    with pytest.raises(BasisMismatchError):
        a + FormalSum.single("sp", Partition((1,)))
    with pytest.raises(ValueError):
        FormalSum("nope")


def test_formal_sum_rendering():
    assert str(s(2) + s(1, 1)) == "s[2] + s[1,1]"
    assert str(FormalSum.zero("schur")) == "0"
    assert str(FormalSum.unit("sp")) == "sp[]"
    assert str(s(2) - s(1, 1)) == "s[2] - s[1,1]"
    assert str(s(2, 1).scaled(-3)) == "-3*s[2,1]"
    mixed = s(3) + s(2, 1).scaled(-1) + s(1, 1, 1).scaled(2)
    assert str(mixed) == "s[3] - s[2,1] + 2*s[1,1,1]"


def test_formal_sum_graded_and_restricted():
    a = s(2) + s(1) + s(3, 1)
    grades = a.graded()
    assert set(grades) == {1, 2, 4}
    assert a.restricted(min_degree=2) == s(2) + s(3, 1)
    assert a.restricted(max_degree=2) == s(2) + s(1)

import itertools
import random

import pytest

from stablechar.bcd import bcd_multiply, newell_littlewood
from stablechar.partitions import EMPTY, Partition, partitions_through
from stablechar.schur import BasisMismatchError, FormalSum, schur_multiply


def sp(*parts):
    return FormalSum.single("sp", Partition(parts))


def test_examples():
    one = Partition((1,))
    assert newell_littlewood(EMPTY, one, one) == 1
    assert newell_littlewood(Partition((2,)), one, one) == 1
    # parity violation: |lam| and |mu|+|nu| differ by an odd number
    assert newell_littlewood(Partition((3, 1)), Partition((2, 1)), Partition((2,))) == 0


def test_product_of_single_boxes():
    assert bcd_multiply(sp(1), sp(1)) == sp(2) + sp(1, 1) + sp()


def test_unit_law():
    a = sp(3, 1) + sp(2).scaled(7)
    assert bcd_multiply(FormalSum.unit("sp"), a) == a
    assert bcd_multiply(a, FormalSum.unit("sp")) == a


def test_same_constants_for_o_basis():
    a = bcd_multiply(sp(2, 1), sp(1, 1))
    b = bcd_multiply(
        FormalSum.single("o", Partition((2, 1))), FormalSum.single("o", Partition((1, 1)))
    )
    assert b.basis == "o"
    assert a.terms == b.terms


def test_basis_validation():
    with pytest.raises(BasisMismatchError):
        bcd_multiply(sp(1), FormalSum.single("o", Partition((1,))))
    with pytest.raises(BasisMismatchError):
        bcd_multiply(
            FormalSum.single("schur", Partition((1,))),
            FormalSum.single("schur", Partition((1,))),
        )


def test_top_degree_matches_littlewood_richardson():
    shapes = list(partitions_through(8))
    for mu in shapes:
        for nu in shapes:
            if mu.size + nu.size > 8 or mu.parts > nu.parts:
                continue
            full = bcd_multiply(
                FormalSum.single("sp", mu), FormalSum.single("sp", nu)
            )
            top = full.restricted(min_degree=mu.size + nu.size)
            expected = schur_multiply(
                FormalSum.single("schur", mu), FormalSum.single("schur", nu)
            )
            assert top.terms == expected.terms, (mu, nu)


def test_degree_drop_is_even():
    shapes = list(partitions_through(5))
    for mu in shapes:
        for nu in shapes:
            full = bcd_multiply(FormalSum.single("sp", mu), FormalSum.single("sp", nu))
            for lam, c in full.terms.items():
                drop = mu.size + nu.size - lam.size
                assert drop >= 0 and drop % 2 == 0
                assert c > 0


def test_full_symmetry_sizes_through_five():
    shapes = list(partitions_through(5))
    for lam, mu, nu in itertools.combinations_with_replacement(shapes, 3):
        reference = newell_littlewood(lam, mu, nu)
        for a, b, c in itertools.permutations((lam, mu, nu)):
            assert newell_littlewood(a, b, c) == reference


def test_unit_coefficient_rule():
    shapes = list(partitions_through(5))
    for mu in shapes:
        for nu in shapes:
            expected = 1 if mu == nu else 0
            assert newell_littlewood(EMPTY, mu, nu) == expected


def test_direct_constants_match_product_route():
    shapes = list(partitions_through(4))
    for mu in shapes:
        for nu in shapes:
            full = bcd_multiply(FormalSum.single("sp", mu), FormalSum.single("sp", nu))
            for lam in partitions_through(mu.size + nu.size):
                assert full.coefficient(lam) == newell_littlewood(lam, mu, nu)


def test_associativity_seeded_random():
    rng = random.Random(4242)
    pool = list(partitions_through(4))
    for _ in range(30):
        a, b, c = (FormalSum.single("sp", rng.choice(pool)) for _ in range(3))
        assert bcd_multiply(bcd_multiply(a, b), c) == bcd_multiply(a, bcd_multiply(b, c))


def test_min_degree_filter():
    full = bcd_multiply(sp(2, 1), sp(2, 1))
    filtered = bcd_multiply(sp(2, 1), sp(2, 1), min_degree=6)
    assert filtered == full.restricted(min_degree=6)
    assert any(lam.size < 6 for lam in full.terms)

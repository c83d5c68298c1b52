import pytest
from hypothesis import given, strategies as st

from oracles import partition_count
from stablechar.partitions import (
    EMPTY,
    Partition,
    all_even_columns,
    all_even_rows,
    canonical_key,
    contains,
    leq_extended,
    partitions_of,
    partitions_through,
    subpartitions,
)

partition_strategy = st.lists(st.integers(1, 6), max_size=6).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


def test_construction_strips_trailing_zeros():
    assert Partition((3, 2, 0, 0)) == Partition((3, 2))
    assert Partition(()) == EMPTY
    assert len(EMPTY) == 0 and EMPTY.size == 0


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Partition((2, 0, 1))


def test_transpose_examples():
    assert Partition((3, 2, 2)).transpose() == Partition((3, 3, 1))
    assert EMPTY.transpose() == EMPTY
    assert Partition((5,)).transpose() == Partition((1, 1, 1, 1, 1))


def test_transpose_involution_exhaustive():
    for lam in partitions_through(12):
        assert lam.transpose().transpose() == lam


def test_leq_extended_examples():
    assert leq_extended(Partition((2,)), Partition((3, 1)))
    assert not leq_extended(Partition((2, 2)), Partition((3,)))
    assert leq_extended(Partition((1, 1, 1)), Partition((2, 1)))


def test_leq_extended_reflexive_transitive():
    shapes = list(partitions_through(8))
    rel = {
        (a, b): leq_extended(a, b) for a in shapes for b in shapes
    }
    for a in shapes:
        assert rel[(a, a)]
    for (a, b), ab in rel.items():
        if not ab:
            continue
        for c in shapes:
            if rel[(b, c)]:
                assert rel[(a, c)], (a, b, c)


def test_contains_examples():
    assert contains(Partition((3, 2, 2)), Partition((2, 2)))
    assert not contains(Partition((2,)), Partition((1, 1)))
    assert contains(Partition((4, 1)), EMPTY)


def test_contains_implies_leq_extended():
    shapes = list(partitions_through(8))
    for lam in shapes:
        for mu in subpartitions(lam):
            assert leq_extended(mu, lam)


def test_partitions_of_basics():
    assert partitions_of(0) == [EMPTY]
    assert [p.parts for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(partitions_of(8)) == 22


def test_partitions_of_matches_pentagonal_recurrence():
    for n in range(13):
        shapes = partitions_of(n)
        assert len(shapes) == partition_count(n)
        assert len(set(shapes)) == len(shapes)
        keys = [canonical_key(p) for p in shapes]
        assert keys == sorted(keys)


def test_even_columns_rows():
    assert all_even_columns(Partition((2, 2))) and all_even_rows(Partition((2, 2)))
    assert all_even_columns(Partition((1, 1))) and not all_even_rows(Partition((1, 1)))
    assert not all_even_columns(Partition((3, 1))) and not all_even_rows(
        Partition((3, 1))
    )
    for lam in partitions_through(10):
        assert all_even_columns(lam) == all_even_rows(lam.transpose())


def test_subpartitions_count_for_box():
    # shapes inside a 2x2 box: -, 1, 1,1, 2, 2,1, 2,2
    assert len(subpartitions(Partition((2, 2)))) == 6


def test_text_forms():
    assert Partition((3, 2, 2)).to_text() == "3,2,2"
    assert EMPTY.to_text() == "-"
    assert Partition.from_text("3,2,2") == Partition((3, 2, 2))
    assert Partition.from_text("-") == EMPTY
    with pytest.raises(ValueError):
        Partition.from_text("2,3")


def test_json_forms():
    assert Partition((3, 1)).to_json() == [3, 1]
    assert Partition.from_json([]) == EMPTY


@given(partition_strategy)
def test_text_round_trip(lam):
    assert Partition.from_text(lam.to_text()) == lam
    assert Partition.from_json(lam.to_json()) == lam


@given(partition_strategy)
def test_transpose_involution_random(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size == lam.size

"""Partition enumeration against a Bell-triangle oracle."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revderiv.partitions import SetPartition, enumerate_partitions, index_select


def bell_numbers(upto):
    """Oracle: Bell numbers B_0..B_upto via the Bell triangle recurrence."""
    bells = [1]
    row = [1]
    for _ in range(upto):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
        bells.append(row[0])
    return bells


def test_counts_match_bell_numbers():
    bells = bell_numbers(6)
    for n in range(1, 7):
        assert len(enumerate_partitions(n)) == bells[n]


def test_small_cases():
    assert [str(p) for p in enumerate_partitions(1)] == ["{1}"]
    assert [str(p) for p in enumerate_partitions(2)] == ["{1}|{2}", "{1,2}"]
    assert len(enumerate_partitions(4)) == 15


def test_zero_is_empty_by_convention():
    assert enumerate_partitions(0) == []
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


@given(st.integers(1, 7))
def test_canonical_invariants(n):
    parts = enumerate_partitions(n)
    seen = set()
    for p in parts:
        flat = [i for block in p.blocks for i in block]
        assert sorted(flat) == list(range(1, n + 1))
        mins = [block[0] for block in p.blocks]
        assert mins == sorted(mins)
        assert p.blocks[0][0] == 1  # 1 is always in the first block
        key = frozenset(frozenset(b) for b in p.blocks)
        assert key not in seen  # no duplicates
        seen.add(key)


def test_set_partition_validation():
    SetPartition(((1, 3), (2,)))
    with pytest.raises(ValueError):
        SetPartition(((2,), (1,)))  # not ordered by minimum
    with pytest.raises(ValueError):
        SetPartition(((1, 2), (2, 3)))  # overlap
    with pytest.raises(ValueError):
        SetPartition(((1,), ()))  # empty block
    with pytest.raises(ValueError):
        SetPartition(((1,), (3,)))  # gap


def test_index_select():
    args = ("a", "b", "c")
    assert index_select(args, [1, 2, 3]) == ("a", "b", "c")
    assert index_select(args, [2]) == ("b",)
    assert index_select(args, [3, 1]) == ("a", "c")  # increasing index order
    with pytest.raises(IndexError):
        index_select(args, [4])


def test_block_sizes_and_ground_size():
    p = SetPartition(((1, 4), (2, 3), (5,)))
    assert p.block_sizes() == (2, 2, 1)
    assert p.ground_size == 5
    assert str(p) == "{1,4}|{2,3}|{5}"

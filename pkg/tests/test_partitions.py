from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partnorm.partitions import (
    ALL, DISTINCT, EMPTY, EVEN_PARTS, GOLLNITZ_GORDON, NUCLEAR, ODD_PARTS, PRIME_PARTS,
    ROGERS_RAMANUJAN, SCHUR, Partition, allowed_parts, class_from_name, delete_part, divisors,
    enumerate_partitions, factorize, from_parts, is_prime, iter_part_tuples, largest_part, length,
    norm, nuclear_partitions_with_norm, rank, sigma, size, subpartitions,
)
from partnorm.series import pentagonal_p

CLASSES = [ALL, DISTINCT, ODD_PARTS, EVEN_PARTS, PRIME_PARTS, NUCLEAR, ROGERS_RAMANUJAN,
           GOLLNITZ_GORDON, SCHUR, allowed_parts({2, 3, 5})]


def naive_partitions(n, largest=None):
    """Plain recursive generator, lexicographically decreasing."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in naive_partitions(n - first, first):
            yield (first, *rest)


parts_lists = st.lists(st.integers(1, 12), max_size=10)


def test_from_parts_examples():
    assert from_parts([]) == EMPTY and size(EMPTY) == 0 and length(EMPTY) == 0
    lam = from_parts([3, 1, 3, 4])
    assert lam.freq == ((1, 1), (3, 2), (4, 1))
    assert (lam.size, lam.length) == (11, 4)
    assert str(lam) == "<1 3^2 4>"
    assert from_parts([2, 2]).freq == ((2, 2),) and from_parts([2, 2]).size == 4
    with pytest.raises(ValueError):
        from_parts([3, 0])
    with pytest.raises(ValueError):
        from_parts([-1])


def test_norm_examples():
    assert norm(EMPTY) == 1
    assert norm(from_parts([4, 3, 3, 1])) == 36
    assert norm(Partition([(1, 5), (2, 3), (7, 1)])) == 56


def test_statistics():
    lam = from_parts([4, 3, 3, 1])
    assert (size(lam), length(lam), largest_part(lam), rank(lam)) == (11, 4, 4, 0)
    assert (largest_part(EMPTY), rank(EMPTY)) == (0, 0)
    assert rank(from_parts([5])) == 4


def test_delete_part():
    assert delete_part(from_parts([4, 3, 3, 1]), 3) == from_parts([4, 3, 1])
    assert delete_part(from_parts([2]), 2) == EMPTY
    with pytest.raises(ValueError):
        delete_part(from_parts([4, 3, 3, 1]), 5)


def test_invalid_freq_rejected():
    for bad in ([(2, 1), (2, 1)], [(0, 1)], [(3, -1)]):
        with pytest.raises(ValueError):
            Partition(bad)
    # zero multiplicities are simply not stored
    assert Partition([(2, 0), (3, 1)]).freq == ((3, 1),)


def test_enumerate_examples():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in enumerate_partitions(7, ROGERS_RAMANUJAN)] == [(7,), (6, 1), (5, 2)]
    assert list(enumerate_partitions(0, DISTINCT)) == [EMPTY]


@pytest.mark.parametrize("n", [0, 1, 5, 17, 30, 45, 60])
def test_count_matches_pentagonal(n):
    assert sum(1 for _ in iter_part_tuples(n)) == pentagonal_p(n)


@pytest.mark.parametrize("cls", CLASSES, ids=lambda c: c.name)
def test_classes_against_filtered_oracle(cls):
    for n in range(0, 26):
        got = list(iter_part_tuples(n, cls))
        want = [t for t in naive_partitions(n) if from_parts(t) in cls]
        assert got == want, (cls.name, n)


def test_class_membership_definitions():
    assert from_parts([6, 3, 1]) in GOLLNITZ_GORDON
    assert from_parts([7, 5, 1]) in GOLLNITZ_GORDON
    assert from_parts([6, 4, 1]) not in GOLLNITZ_GORDON
    assert from_parts([5, 4]) not in GOLLNITZ_GORDON
    assert from_parts([7, 4, 1]) in SCHUR
    assert from_parts([9, 6]) not in SCHUR
    assert from_parts([7, 3]) in SCHUR
    assert from_parts([2, 3]) in NUCLEAR and from_parts([2, 1]) not in NUCLEAR
    assert EMPTY in SCHUR and EMPTY in PRIME_PARTS


def test_class_names():
    assert class_from_name("rr") is ROGERS_RAMANUJAN
    assert class_from_name("parts:2,3,5").contains(from_parts([5, 2, 2]))
    with pytest.raises(ValueError):
        class_from_name("nosuch")


@pytest.mark.parametrize("cls", [ALL, DISTINCT, ROGERS_RAMANUJAN], ids=lambda c: c.name)
def test_split_by_largest_part(cls):
    n = 22
    pieces = [t for k in range(n, 0, -1) for t in iter_part_tuples(n, cls, largest=k)]
    assert pieces == list(iter_part_tuples(n, cls))


def test_subpartitions_examples():
    assert set(subpartitions(from_parts([2, 2]))) == {EMPTY, from_parts([2]), from_parts([2, 2])}
    assert len(list(subpartitions(from_parts([3, 1])))) == 4
    assert list(subpartitions(EMPTY)) == [EMPTY]


def test_number_theory():
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(1) == []
    assert sigma(6) == 12 and sigma(1) == 1
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@given(parts_lists)
def test_size_from_reciprocal_norms(parts):
    lam = from_parts(parts)
    if not parts:
        return
    N = lam.norm
    assert lam.size == N * sum(Fraction(1, N // p) for p in lam.parts)


@given(parts_lists)
def test_subpartition_count(parts):
    lam = from_parts(parts)
    subs = list(subpartitions(lam))
    expected = 1
    for _, m in lam.freq:
        expected *= m + 1
    assert len(subs) == len(set(subs)) == expected


@given(parts_lists, st.integers(1, 12))
def test_delete_part_norm(parts, p):
    lam = from_parts(parts)
    if lam.multiplicity(p) == 0:
        with pytest.raises(ValueError):
            delete_part(lam, p)
    else:
        assert delete_part(lam, p).norm * p == lam.norm


@given(parts_lists, parts_lists)
def test_norm_multiplicative(a, b):
    assert from_parts(a + b).norm == from_parts(a).norm * from_parts(b).norm


@given(parts_lists)
def test_frequency_invariants(parts):
    lam = from_parts(parts)
    ps = [p for p, _ in lam.freq]
    assert ps == sorted(set(ps)) and all(m >= 1 for _, m in lam.freq)
    assert lam.size == sum(parts) and lam.length == len(parts)
    assert lam.parts == tuple(sorted(parts, reverse=True))
    assert lam.rank == (max(parts) if parts else 0) - len(parts)
    assert Partition(lam.freq) == lam and hash(Partition(lam.freq)) == hash(lam)


@given(st.integers(1, 400))
def test_nuclear_partitions_with_norm(nu):
    got = list(nuclear_partitions_with_norm(nu))
    assert len(got) == len(set(got))
    assert all(lam.norm == nu and lam in NUCLEAR for lam in got)

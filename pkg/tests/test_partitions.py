import pytest

from lltpaths.errors import BoundExceeded, SizeMismatch
from lltpaths.partitions import (
    conjugate,
    dominates,
    kostka,
    partitions_of,
    weak_compositions,
)


def test_partitions_of_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(5)) == 7


def test_partitions_of_bound():
    with pytest.raises(BoundExceeded):
        partitions_of(13)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((1, 1, 1)) == (3,)
    for n in range(0, 9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_kostka_examples():
    # two tableaux: 12/3 and 13/2
    assert kostka((2, 1), (1, 1, 1)) == 2
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1
    assert kostka((1, 1, 1), (3,)) == 0
    with pytest.raises(SizeMismatch):
        kostka((2, 1), (2, 2))


def test_kostka_dominance_vanishing():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                if not dominates(mu, lam):
                    assert kostka(mu, lam) == 0, (mu, lam)


def test_weak_compositions():
    assert weak_compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert weak_compositions(4, 1) == [(4,)]
    assert len(weak_compositions(3, 3)) == 10
    assert weak_compositions(0, 0) == [()]
    assert weak_compositions(1, 0) == []

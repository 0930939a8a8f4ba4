from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdual.typea import (
    Composition,
    NotDominated,
    SizeMismatch,
    TooLarge,
    TypeAError,
    WeylShape,
    dominance_leq,
    ham_weyl,
    kostka,
    leaf_interval,
    namikawa_weyl,
    namikawa_weyl_from_transpose,
    partition,
    partitions_of,
    pieri_multiplicity,
    s3_dual_check,
    s3_fixture_pairs,
    transpose,
)

partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def brute_kostka(lam, mu):
    """Try every filling of the cells and keep the semistandard ones."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    k = len(mu)
    total = 0
    for fill in product(range(k), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if any(fill.count(i) != mu[i] for i in range(k)):
            continue
        rows_ok = all(t[i, j] <= t[i, j + 1] for i, j in cells if (i, j + 1) in t)
        cols_ok = all(t[i, j] < t[i + 1, j] for i, j in cells if (i + 1, j) in t)
        total += rows_ok and cols_ok
    return total


class TestBasics:
    def test_partition_validation(self):
        assert partition([3, 1, 0]) == (3, 1)
        with pytest.raises(TypeAError):
            partition([1, 3])
        with pytest.raises(TypeAError):
            partition([2, -1])

    def test_transpose(self):
        assert transpose((3, 1)) == (2, 1, 1)
        assert transpose(()) == ()
        assert transpose((5, 4, 3)) == (3, 3, 3, 2, 1)

    def test_dominance(self):
        assert dominance_leq((2, 2), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))
        assert dominance_leq((2, 1, 1), (2, 1, 1))
        assert dominance_leq((1, 1, 1, 1), (4,))

    def test_partition_counts(self):
        assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_composition(self):
        c = Composition(-1, (2, 0, 1))
        assert c.total == 3 and c.bar() == (2, 1)
        r = c.reversed()
        assert r.offset == -1 and r.parts == (1, 0, 2)
        assert r.reversed() == c
        with pytest.raises(TypeAError):
            Composition(0, (1, -1))


@settings(max_examples=80, deadline=None)
@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_transpose_reverses_dominance(pair):
    lam, mu = pair
    assert dominance_leq(lam, mu) == dominance_leq(transpose(mu), transpose(lam))


class TestWeyl:
    def test_namikawa(self):
        assert namikawa_weyl_from_transpose((4,)) == WeylShape([4])
        assert namikawa_weyl_from_transpose((1, 1, 1, 1)) == WeylShape()
        assert namikawa_weyl_from_transpose((5, 4, 3)) == WeylShape([3])
        assert str(WeylShape([3])) == "S3"
        assert str(WeylShape()) == "trivial"

    def test_namikawa_of_composition(self):
        # equal parts of mu give the symmetric factors
        assert namikawa_weyl(Composition.of([2, 0, 2, 1])) == WeylShape([2])
        assert namikawa_weyl([1, 1, 1]) == WeylShape([3])

    @pytest.mark.parametrize(
        "mu_t, shape, kinds",
        [
            ((5, 4, 3), "S2×S2", [1, 2]),
            ((5, 3, 3, 1), "S2×S2", [2, 2]),
            ((5, 3, 2, 2), "S2", [2, 3]),
        ],
    )
    def test_ham(self, mu_t, shape, kinds):
        w, blocks = ham_weyl(mu_t, (4, 4, 2, 2))
        assert str(w) == shape
        assert [b.kind for b in blocks] == kinds
        assert [b.size for b in blocks] == [2, 2]

    def test_ham_errors(self):
        with pytest.raises(SizeMismatch):
            ham_weyl((3,), (1, 1))
        with pytest.raises(NotDominated):
            ham_weyl((2, 2), (3, 1))

    def test_submultiset(self):
        assert WeylShape([2]).is_submultiset_of(WeylShape([3, 2]))
        assert not WeylShape([2, 2]).is_submultiset_of(WeylShape([2]))


class TestLeafInterval:
    def test_full(self):
        li = leaf_interval((1, 1, 1, 1), (4,))
        assert len(li.elements) == 5

    def test_point(self):
        assert leaf_interval((2, 1), (2, 1)).elements == [(2, 1)]

    def test_small(self):
        assert set(leaf_interval((2, 2), (4,)).elements) == {(2, 2), (3, 1), (4,)}

    def test_errors(self):
        with pytest.raises(NotDominated):
            leaf_interval((3, 1), (2, 2))
        with pytest.raises(SizeMismatch):
            leaf_interval((1,), (2,))


class TestS3:
    def test_tp1(self):
        rep = s3_dual_check((1, 1), (1, 1))
        assert rep.ok, rep.text()
        assert rep.info["leaves"] == 2

    def test_not_dominated(self):
        with pytest.raises(NotDominated):
            s3_dual_check((2,), (2,))

    def test_flag_variety_weyl(self):
        # full flags of SL3 against the nilpotent cone
        rep = s3_dual_check((1, 1, 1), (1, 1, 1))
        assert rep.ok
        assert rep.info["parabolic_namikawa_weyl"] == "S3"

    def test_all_small_pairs(self):
        pairs = s3_fixture_pairs(5)
        assert all(s3_dual_check(m, n).ok for m, n in pairs)


class TestKostkaPieri:
    def test_examples(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((3, 2), (3, 2)) == 1
        assert kostka((2, 2), (2, 1, 1)) == 1
        assert pieri_multiplicity((1, 1, 1), (1, 1, 1)) == 1
        assert pieri_multiplicity((2, 1), (2, 1)) == 1
        assert pieri_multiplicity((4,), (1, 1, 1, 1)) == 1

    def test_content_is_a_composition(self):
        assert kostka((2, 1), (1, 2)) == kostka((2, 1), (2, 1))
        assert kostka((2,), (0, 2)) == 1

    def test_cap(self):
        with pytest.raises(TooLarge):
            kostka((13,), (13,))
        with pytest.raises(TooLarge):
            pieri_multiplicity((13,), (13,))

    def test_brute_force(self):
        for n in range(1, 6):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    assert kostka(lam, mu) == brute_kostka(lam, mu)

    def test_unequal_size(self):
        with pytest.raises(SizeMismatch):
            kostka((2,), (1,))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_skew_howe(pair):
    lam, mu = pair
    assert kostka(transpose(lam), mu) == pieri_multiplicity(lam, mu)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdual.arrangement import (
    DegenerateObjective,
    HasColoop,
    InvalidArrangement,
    NonSimple,
    NotAFlat,
    PolarizedArrangement,
    TuttePolynomial,
    VectorMatroid,
    parse_signs,
)
from symdual.exactlin import row_space_equal
from symdual.fixtures import random_arrangement
from symdual.poset import reversal_witness

from .oracles import brute_fixed_points, tutte_by_subsets

P = parse_signs


class TestTutte:
    def test_parallel_pair(self, rp):
        assert rp.tutte() == TuttePolynomial({(1, 0): 1, (0, 1): 1})
        assert str(rp.tutte()) == "x + y"

    def test_coloop(self, single):
        assert str(single.tutte()) == "x"

    def test_u23(self, u23):
        assert str(u23.tutte()) == "x^2 + x + y"
        assert u23.tutte()(1, 1) == 3

    def test_loop(self):
        assert VectorMatroid([(0,)]).tutte() == TuttePolynomial({(0, 1): 1})

    def test_against_subset_expansion(self, fixtures):
        for arr in fixtures[:15]:
            vecs = arr.normals.columns()
            assert arr.tutte() == tutte_by_subsets(vecs)

    def test_table_and_eval(self):
        t = TuttePolynomial({(2, 0): 1, (1, 0): 1, (0, 1): 1})
        assert t.table() == [[0, 1], [1, 0], [1, 0]]
        assert t(2, 3) == 9


class TestFlats:
    def test_parallel_pair(self, rp):
        assert rp.coloop_free_flats() == [frozenset(), frozenset({0, 1})]
        assert not rp.matroid.is_flat({0})

    def test_coloop(self, single):
        assert single.coloop_free_flats() == [frozenset()]

    def test_u23(self, u23):
        assert u23.coloop_free_flats() == [frozenset(), frozenset({0, 1, 2})]

    def test_order_is_linear_extension_of_inclusion(self, fixtures):
        for arr in fixtures[:20]:
            fl = arr.coloop_free_flats()
            assert frozenset() in fl
            for i, f in enumerate(fl):
                assert all(not (g < f) for g in fl[i + 1:])


class TestValidation:
    def test_degenerate_objective(self):
        with pytest.raises(DegenerateObjective):
            PolarizedArrangement([[1, -1]], [0, 1], [0])

    def test_non_simple(self):
        with pytest.raises(NonSimple):
            PolarizedArrangement([[1, 0, 1], [0, 1, 1]], [0, 0, 0], [1, 3])

    def test_not_unimodular(self):
        with pytest.raises(InvalidArrangement):
            PolarizedArrangement([[2, 1]], [0, 1], [1])

    def test_zero_normal(self):
        with pytest.raises(InvalidArrangement):
            PolarizedArrangement([[1, 0]], [0, 1], [1])

    def test_rank_deficient(self):
        with pytest.raises(InvalidArrangement):
            PolarizedArrangement([[1, 1], [1, 1]], [0, 1], [1, 2])

    def test_shapes(self):
        with pytest.raises(InvalidArrangement):
            PolarizedArrangement([[1, -1]], [0], [1])
        with pytest.raises(InvalidArrangement):
            PolarizedArrangement([[1, -1]], [0, 1], [1, 2])


class TestFeasibleBounded:
    def test_rp(self, rp):
        assert rp.feasible(P("++")) and rp.bounded(P("++"))
        assert rp.feasible(P("+-")) and not rp.bounded(P("+-"))
        assert not rp.feasible(P("--"))

    def test_bad_sign_vector(self, rp):
        with pytest.raises(ValueError):
            rp.feasible((1,))


class TestFixedPoints:
    def test_rp(self, rp):
        pts = rp.fixed_points()
        assert [(p.name, p.vertex, sorted(p.basis)) for p in pts] == [("-+", (0,), [0]), ("++", (1,), [1])]

    def test_single(self, single):
        pts = single.fixed_points()
        assert [(p.name, p.vertex, sorted(p.basis)) for p in pts] == [("-", (0,), [0])]

    def test_u23(self, u23):
        assert len(u23.fixed_points()) == 3

    def test_against_brute_force(self, fixtures):
        for arr in fixtures[:20]:
            brute = brute_fixed_points(arr)
            got = {p.signs: (p.vertex, p.basis) for p in arr.fixed_points()}
            assert got == brute

    def test_bases_biject(self, fixtures):
        for arr in fixtures:
            bases = [p.basis for p in arr.fixed_points()]
            assert sorted(map(sorted, bases)) == sorted(map(sorted, arr.matroid.bases()))
            assert len(bases) == arr.tutte()(1, 1)


class TestClosureOrder:
    def test_rp(self, rp):
        co = rp.closure_order
        assert co.lt(P("-+"), P("++"))
        assert not co.leq(P("++"), P("-+"))

    def test_single(self, single):
        assert single.closure_order.pairs() == []

    def test_antisymmetric(self, fixtures, u23):
        for arr in fixtures + [u23]:
            assert arr.closure_order.is_antisymmetric()

    def test_u23_chain(self, u23):
        co = u23.closure_order
        assert len(co.pairs()) == 3  # a chain of length 3


class TestLeafFlat:
    def test_rp(self, rp):
        assert rp.leaf_flat(P("++")) == frozenset({0, 1})
        assert rp.leaf_flat(P("-+")) == frozenset()

    def test_single(self, single):
        assert single.leaf_flat(P("-")) == frozenset()

    def test_per_flat_tutte(self, fixtures):
        for arr in fixtures:
            counts = {}
            for p in arr.fixed_points():
                f = arr.leaf_flat(p.signs)
                counts[f] = counts.get(f, 0) + 1
            for f in arr.coloop_free_flats():
                assert counts.get(f, 0) == arr.restriction(f).tutte()(1, 0) * arr.localization(f).tutte()(0, 1)


class TestRestrictionLocalization:
    def test_rp_extremes(self, rp):
        full = frozenset({0, 1})
        loc = rp.localization(full)
        assert loc.tutte() == rp.tutte()
        res = rp.restriction(full)
        assert (res.d, res.n) == (0, 0)
        assert rp.localization(frozenset()).n == 0
        assert rp.restriction(frozenset()).tutte() == rp.tutte()

    def test_u23_full(self, u23):
        full = frozenset({0, 1, 2})
        assert u23.localization(full).tutte() == u23.tutte()
        assert u23.restriction(full).n == 0

    def test_not_a_flat(self, rp):
        with pytest.raises(NotAFlat):
            rp.restriction({0})
        with pytest.raises(NotAFlat):
            rp.localization({0})

    def test_minors(self, fixtures):
        # restriction realizes contraction, localization realizes restriction of matroids
        for arr in fixtures[:25]:
            m = arr.matroid
            for f in arr.matroid.flats():
                res = arr.restriction(f)
                loc = arr.localization(f)
                rest = [j for j in range(arr.n) if j not in f]
                for k, j in enumerate(rest):
                    for k2, j2 in enumerate(rest):
                        assert res.matroid.rank({k, k2}) == m.rank(f | {j, j2}) - m.rank(f)
                assert loc.d == m.rank(f)
                assert loc.matroid.rank() == m.rank(f)


class TestGaleDual:
    def test_rp(self, rp):
        g = rp.gale_dual()
        assert g.arrangement.normals.to_lists() == [[1, 1]]
        pts = {p.signs: p for p in g.arrangement.fixed_points()}
        assert len(pts) == 2
        for p in rp.fixed_points():
            assert pts[g.dual_point(p.signs)].basis == frozenset({0, 1}) - p.basis
        assert reversal_witness(rp.closure_order, g.arrangement.closure_order, g.dual_point) is None

    def test_u23(self, u23):
        g = u23.gale_dual()
        assert g.arrangement.normals.to_lists() == [[1, 1, 1]]
        assert len(g.arrangement.fixed_points()) == 3

    def test_coloop_rejected(self, single):
        with pytest.raises(HasColoop):
            single.gale_dual()

    def test_fixture_properties(self, fixtures):
        for arr in fixtures:
            g = arr.gale_dual()
            dual = g.arrangement
            n = frozenset(range(arr.n))
            assert dual.tutte() == arr.tutte().swap()
            dpts = {p.signs: p for p in dual.fixed_points()}
            for p in arr.fixed_points():
                q = dpts[g.dual_point(p.signs)]
                assert q.basis == n - p.basis
                assert dual.leaf_flat(q.signs) == n - arr.leaf_flat(p.signs)
            assert reversal_witness(arr.closure_order, dual.closure_order, g.dual_point) is None
            assert {n - f for f in arr.coloop_free_flats()} == set(dual.coloop_free_flats())

    def test_double_dual(self, fixtures):
        for arr in fixtures[:20]:
            dd = arr.gale_dual().arrangement.gale_dual().arrangement
            assert row_space_equal(dd.normals, arr.normals)
            assert [p.signs for p in dd.fixed_points()] == [p.signs for p in arr.fixed_points()]
            assert dd.closure_order.pairs() == arr.closure_order.pairs()


class TestShufflingTwisting:
    def test_rp(self, rp):
        assert rp.shuffling_arrangement() == {(1,)}

    def test_u23(self, u23):
        # lines spanned by each normal, recorded by their normal vectors
        assert u23.shuffling_arrangement() == {(0, 1), (1, 0), (1, -1)}

    def test_exchange(self, fixtures):
        from symdual.audit import twisting_in_objective_space

        for arr in fixtures:
            dual = arr.gale_dual().arrangement
            assert twisting_in_objective_space(arr, dual) == arr.shuffling_arrangement()

    def test_twisting_lives_in_constants_space(self, u23):
        assert all(len(v) == 3 for v in u23.twisting_arrangement())


class TestWeylShapes:
    def test_parallel(self, rp):
        # the parallel pair is self-dual, so both groups are S2
        assert rp.namikawa_weyl() == [2]
        assert rp.hamiltonian_weyl() == [2]

    def test_u23(self, u23):
        assert u23.namikawa_weyl() == []
        assert u23.hamiltonian_weyl() == [3]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(0, 3))
def test_random_fixed_point_count(seed, d, extra):
    import random

    arr = random_arrangement(random.Random(seed), d, d + 1 + extra)
    assert len(arr.fixed_points()) == arr.tutte()(1, 1)
    assert arr.gale_dual().arrangement.tutte() == arr.tutte().swap()

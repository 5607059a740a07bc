import pytest

from tiletopo import Address, TileParams, WrongRegime, point_eval
from tiletopo.errors import LengthMismatch
from tiletopo.linalg import mat_vec
from tiletopo.neighbors import (
    adjacent_singleton_point,
    certified_series_bound,
    neighbor_set_formula,
    neighbor_set_search,
    reflect_neighbor_set,
    subdivision_diff,
    subdivision_intersects,
)


class TestFormula:
    def test_4_5_paper_set(self):
        s = neighbor_set_formula(TileParams(4, 5))
        assert s.j == 2
        expected = {(1, 0), (3, 1), (2, 1), (4, 1), (6, 2)}
        expected |= {(-x, -y) for (x, y) in expected}
        assert s.members == expected

    def test_2_2(self):
        s = neighbor_set_formula(TileParams(2, 2))
        assert s.j == 1
        assert s.members == {(1, 0), (-1, 0), (1, 1), (-1, -1), (2, 1), (-2, -1)}

    def test_5_5_cardinality(self):
        s = neighbor_set_formula(TileParams(5, 5))
        assert s.j == 4 and len(s) == 18

    def test_symmetry_and_count_on_grid(self):
        for b in range(2, 13):
            for a in range(1, b + 1):
                s = neighbor_set_formula(TileParams(a, b))
                assert len(s) == 2 + 4 * s.j
                assert all((-x, -y) in s.members for (x, y) in s.members)

    def test_a_zero_formula_diverges_from_truth(self):
        # the closed form is only used for A >= 1; at A=0 the true set (from
        # the certified search) has the four corner translations as well
        p = TileParams(0, 2)
        f = neighbor_set_formula(p)
        s = neighbor_set_search(p)
        assert len(f) == 6
        assert s.members == f.members | {(1, 1), (-1, -1)}


class TestSearch:
    @pytest.mark.parametrize("a,b", [(4, 5), (2, 2), (5, 5), (1, 2), (6, 9), (12, 12)])
    def test_matches_formula(self, a, b):
        p = TileParams(a, b)
        assert neighbor_set_search(p).members == neighbor_set_formula(p).members

    def test_zero_excluded(self):
        assert (0, 0) not in neighbor_set_search(TileParams(4, 5)).members

    def test_certified_bound_dominates_members(self):
        # every neighbor must satisfy the certified norm bound
        for a, b in [(4, 5), (5, 5), (12, 12)]:
            p = TileParams(a, b)
            w_inv, bound = certified_series_bound(p)
            for s in neighbor_set_formula(p).members:
                t = mat_vec(w_inv, s)
                assert max(abs(t[0]), abs(t[1])) <= bound

    def test_reflection(self):
        s = neighbor_set_formula(TileParams(4, 5))
        r = reflect_neighbor_set(s)
        assert r.members == {(x, -y) for (x, y) in s.members}


class TestSubdivision:
    def test_equal_words(self):
        assert subdivision_diff((2, 3), (2, 3), TileParams(4, 5)) == (0, 0)

    def test_depth2_example(self):
        assert subdivision_diff((2, 2), (1, 0), TileParams(4, 5)) == (2, 1)

    def test_depth1_example(self):
        assert subdivision_diff((2,), (1,), TileParams(4, 5)) == (1, 0)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            subdivision_diff((1,), (1, 2), TileParams(4, 5))

    def test_intersects_examples(self):
        p = TileParams(4, 5)
        assert subdivision_intersects((2,), (1,), p)
        assert not subdivision_intersects((3,), (1,), p)
        assert subdivision_intersects((2, 2), (1, 0), p)

    def test_depth_monotonicity(self):
        # non-neighbors map only to non-neighbors under s -> Ms + (d, 0)
        from tiletopo.neighbors import _candidate_ball

        for a, b in [(4, 5), (5, 5), (2, 2)]:
            p = TileParams(a, b)
            ball = _candidate_ball(p)
            good = neighbor_set_formula(p).members | {(0, 0)}
            m = p.matrix
            for s in ball:
                if s in good:
                    continue
                ms = mat_vec(m, s)
                for d in range(-(b - 1), b):
                    t = (ms[0] + d, ms[1])
                    if t in ball:
                        assert t not in good, (s, t)


class TestAdjacentSingleton:
    def test_example_120_001(self):
        p = TileParams(4, 5)
        pair = adjacent_singleton_point((1, 2, 0), (0, 0, 1), p)
        assert pair is not None
        left, right = pair
        assert left == Address((), (1, 2, 0), (0, 4))
        assert right == Address((), (0, 0, 1), (4, 0))
        assert point_eval(left, p) == point_eval(right, p)

    def test_example_220_101(self):
        p = TileParams(4, 5)
        pair = adjacent_singleton_point((2, 2, 0), (1, 0, 1), p)
        assert pair is not None
        assert point_eval(pair[0], p) == point_eval(pair[1], p)

    def test_equal_words_give_nothing(self):
        assert adjacent_singleton_point((1, 2, 0), (1, 2, 0), TileParams(4, 5)) is None

    def test_wrong_regime(self):
        with pytest.raises(WrongRegime):
            adjacent_singleton_point((1, 2, 0), (0, 0, 1), TileParams(5, 5))


class TestSubdivisionLemmaReplay:
    """Exhaustive replay of the depth <= 4 intersection table for 2A-B=3."""

    @pytest.mark.parametrize("a,b", [(4, 5), (5, 7), (6, 9)])
    def test_depth1(self, a, b):
        p = TileParams(a, b)
        for a1 in range(b):
            for a1p in range(b):
                if a1 == a1p:
                    continue
                assert subdivision_intersects((a1,), (a1p,), p) == (abs(a1 - a1p) == 1)

    @pytest.mark.parametrize("a,b", [(4, 5), (5, 7), (6, 9)])
    def test_depth2(self, a, b):
        p = TileParams(a, b)
        for a1 in range(1, b):
            a1p = a1 - 1
            for a2 in range(b):
                for a2p in range(b):
                    got = subdivision_intersects((a1, a2), (a1p, a2p), p)
                    assert got == (a2 - a2p in {a, a - 1, a - 2})

    @pytest.mark.parametrize("a,b", [(4, 5), (5, 7), (6, 9)])
    def test_depth4_diff_a(self, a, b):
        p = TileParams(a, b)
        for a2 in range(a, b):  # a2 - a2' = A
            a2p = a2 - a
            for a3 in range(b):
                for a3p in range(b):
                    for a4 in range(b):
                        for a4p in range(b):
                            got = subdivision_intersects(
                                (1, a2, a3, a4), (0, a2p, a3p, a4p), p
                            )
                            want = (
                                a3 == b - 1
                                and a3p == 0
                                and a4 - a4p in {-a, -a + 1, -a + 2}
                            )
                            assert got == want

    @pytest.mark.parametrize("a,b", [(4, 5), (5, 7), (6, 9)])
    def test_depth4_diff_a_minus_1(self, a, b):
        p = TileParams(a, b)
        for a2 in range(a - 1, b):  # a2 - a2' = A-1
            a2p = a2 - (a - 1)
            for a3 in range(b):
                for a3p in range(b):
                    for a4 in range(b):
                        for a4p in range(b):
                            got = subdivision_intersects(
                                (1, a2, a3, a4), (0, a2p, a3p, a4p), p
                            )
                            d3, d4 = a3 - a3p, a4 - a4p
                            want = (
                                (d3 == b - a and a4 == 0 and a4p == b - 1)
                                or (d3 == b - a + 1 and d4 in {a - b, a - b - 1, a - b - 2})
                                or (d3 == b - a + 2 and d4 == 1)
                            )
                            assert got == want

    @pytest.mark.parametrize("a,b", [(4, 5), (5, 7), (6, 9)])
    def test_depth3_diff_a_minus_2_and_singleton(self, a, b):
        p = TileParams(a, b)
        for a2 in range(a - 2, b):  # a2 - a2' = A-2
            a2p = a2 - (a - 2)
            for a3 in range(b):
                for a3p in range(b):
                    got = subdivision_intersects((1, a2, a3), (0, a2p, a3p), p)
                    assert got == (a3 - a3p == -1)
                    if got:
                        pair = adjacent_singleton_point((1, a2, a3), (0, a2p, a3p), p)
                        assert pair is not None
                        assert point_eval(pair[0], p) == point_eval(pair[1], p)


class TestSingletonProofCases:
    """Depth-2 case analysis used to pin the cut point for 2A-B >= 5."""

    def grid(self):
        return [
            (a, b)
            for b in range(2, 13)
            for a in range(1, b + 1)
            if 2 * a - b >= 5
        ]

    def test_far_pairs_empty(self):
        for a, b in self.grid():
            p = TileParams(a, b)
            for j in range(b):
                for k in range(b):
                    # (A-4)j against (A-2)k and mirrored: never intersect
                    assert not subdivision_intersects((a - 2, k), (a - 4, j), p)
                    for kk in range(0, b - a + 3):
                        assert not subdivision_intersects((a - 3, kk), (a - 4, j), p)
            for j in range(b - a + 2, b):
                for k in range(b):
                    assert not subdivision_intersects((a - 2, k), (a - 3, j), p)

    def test_tight_pairs_exactly_three(self):
        for a, b in self.grid():
            p = TileParams(a, b)
            hits = set()
            for j in range(b - a + 2, b):
                for k in range(0, b - a + 3):
                    if subdivision_intersects((a - 3, j), (a - 3, k), p):
                        hits.add((j, k))
            expect = {
                (b - a + 2, b - a + 2),
                (b - a + 3, b - a + 2),
                (b - a + 2, b - a + 1),
            }
            assert hits == expect

import itertools

import pytest

from aqlam import (
    GoodParityParameter,
    HalfInt,
    RangeLabel,
    Relation,
    Segment,
    intersection_size,
    lambda_values,
    neighbors,
    range_classify,
    relation,
    segment_from_component,
)
from aqlam.errors import InputError

from conftest import parameter_family, seg


def entries(s: Segment) -> set:
    return set(s.entries())


class TestSegment:
    def test_basic(self):
        s = seg(7, 3)
        assert s.b == 7 and s.e == 5
        assert s.m == 3 and s.a == 12
        assert [str(x) for x in s.entries()] == ["7", "6", "5"]

    def test_half_integer_grid(self):
        s = Segment(HalfInt(7), HalfInt(3))
        assert s.m == 3 and s.a == 5
        assert [str(x) for x in s.entries()] == ["7/2", "5/2", "3/2"]

    def test_rejects_increasing(self):
        with pytest.raises(InputError):
            Segment(HalfInt.of(2), HalfInt.of(5))

    def test_rejects_mixed_grid_endpoints(self):
        with pytest.raises(InputError):
            Segment(HalfInt(7), HalfInt.of(1))

    def test_from_component(self):
        # (a, m) = (12, 3) -> [7, 5]
        assert segment_from_component(12, 3) == seg(7, 3)
        assert segment_from_component(7, 6) == seg(6, 6)
        # odd a with even m lands on the half grid
        s = segment_from_component(5, 2)
        assert s.b == HalfInt.of(3) and s.e == HalfInt.of(2)

    def test_singleton(self):
        s = seg(0, 1)
        assert s.m == 1 and s.a == 0


class TestRelation:
    def test_precedes(self):
        psi = GoodParityParameter((seg(7, 5), seg(6, 6)))
        assert relation(psi, 1, 2) is Relation.PRECEDES
        assert relation(psi, 2, 1) is Relation.PRECEDED_BY

    def test_containment(self):
        psi = GoodParityParameter((seg(7, 3), seg(7, 5)))
        assert relation(psi, 1, 2) is Relation.CONTAINED
        assert relation(psi, 2, 1) is Relation.CONTAINS

    def test_equal_segments_tie_break(self):
        # duplicates: the earlier index is the container
        psi = GoodParityParameter((seg(4, 2), seg(4, 2)))
        assert relation(psi, 1, 2) is Relation.CONTAINS
        assert relation(psi, 2, 1) is Relation.CONTAINED

    def test_exhaustive_against_definition(self):
        for psi in parameter_family(range(1, 5), 3, (2,)):
            s, t = psi.seg(1), psi.seg(2)
            rel = relation(psi, 1, 2)
            if s.b > t.b and s.e > t.e:
                assert rel is Relation.PRECEDES
            elif t.b > s.b and t.e > s.e:
                assert rel is Relation.PRECEDED_BY
            else:
                # one segment contains the other
                assert rel.is_containment
                outer, inner = (s, t) if rel is Relation.CONTAINS else (t, s)
                assert entries(inner) <= entries(outer)


class TestIntersection:
    def test_fixture_values(self, psi_A, psi_B):
        assert intersection_size(psi_A.seg(1), psi_A.seg(2)) == 3
        assert intersection_size(psi_A.seg(2), psi_A.seg(3)) == 4
        assert intersection_size(psi_B.seg(2), psi_B.seg(3)) == 5

    def test_disjoint(self):
        assert intersection_size(seg(7, 2), seg(2, 2)) == 0

    def test_matches_set_intersection(self):
        grid = [seg(b, m) for b in range(1, 6) for m in range(1, 5)]
        for s, t in itertools.product(grid, repeat=2):
            assert intersection_size(s, t) == len(entries(s) & entries(t))


class TestParameter:
    def test_rejects_inadmissible_reference(self):
        # [6,6] is preceded by [7,5]; listing it first is inadmissible
        with pytest.raises(InputError):
            GoodParityParameter((seg(6, 6), seg(7, 5)))

    def test_rejects_mixed_grids(self):
        with pytest.raises(InputError, match="grid"):
            GoodParityParameter((seg(7, 3), seg(HalfInt(7), 2)))

    def test_strict_parity(self, psi_C):
        # n = 7 odd, integer beginnings: parity holds
        GoodParityParameter(psi_C.segments, strict_parity=True)
        # n = 14: the fixture-A data violates it
        with pytest.raises(InputError):
            GoodParityParameter.from_components(
                [(12, 3), (10, 5), (7, 6)], strict_parity=True
            )

    def test_n(self, psi_A):
        assert psi_A.n == 14
        assert psi_A.r == 3


def test_neighbors(psi_A):
    assert neighbors(psi_A, 1, 2)  # containment pair, nothing between
    assert neighbors(psi_A, 2, 3)  # precedence pair
    # [7,5] > [6,1] with no chain through [7,3] (which [7,5] does not precede)
    assert neighbors(psi_A, 1, 3)


def test_neighbors_blocked():
    # 1 > 2 > 3 in a chain: (1,3) are not neighbors
    psi = GoodParityParameter((seg(8, 2), seg(6, 2), seg(4, 2)))
    assert neighbors(psi, 1, 2) and neighbors(psi, 2, 3)
    assert not neighbors(psi, 1, 3)


def test_lambda_values(psi_A):
    assert lambda_values(psi_A) == (HalfInt(1), HalfInt(7), HalfInt(15))


def test_lambda_integral_under_strict_parity():
    for psi in parameter_family(range(1, 5), 3, (1, 2, 3), strict_parity=True):
        assert all(x.is_integer for x in lambda_values(psi))


class TestRangeClassify:
    def test_labels_are_cumulative(self, psi_A):
        order = {
            RangeLabel.GOOD: 0,
            RangeLabel.NICE: 1,
            RangeLabel.WEAKLY_FAIR: 2,
            RangeLabel.MEDIOCRE: 3,
        }
        for psi in parameter_family(range(1, 5), 3, (2, 3)):
            labels = range_classify(psi, tuple(range(1, psi.r + 1)))
            ranks = sorted(order[x] for x in labels)
            # every admissible arrangement is at least mediocre, and a
            # stronger label implies all weaker ones
            assert RangeLabel.MEDIOCRE in labels
            assert ranks == list(range(min(ranks), 4))

    def test_fixture(self, psi_A):
        labels = range_classify(psi_A, (1, 2, 3))
        assert RangeLabel.WEAKLY_FAIR in labels  # centers 12 >= 10 >= 7
        assert RangeLabel.NICE not in labels  # [7,5] does not precede [7,3]

    def test_good(self):
        # widely separated segments: e_h > b_{h+1} everywhere
        psi = GoodParityParameter((seg(9, 2), seg(5, 2), seg(1, 2)))
        assert range_classify(psi, (1, 2, 3)) == {
            RangeLabel.GOOD,
            RangeLabel.NICE,
            RangeLabel.WEAKLY_FAIR,
            RangeLabel.MEDIOCRE,
        }

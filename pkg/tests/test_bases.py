import itertools

import pytest

from incidence_scrolls.bases import (
    EmptyIncidenceError,
    IncidenceBase,
    canonicalize,
    conditions_count,
    enumerate_bases,
    format_base,
    is_nondegenerate,
    join,
    parse_base,
    restrict_to_span,
    satisfies_is,
    separate,
)


def B(ambient, *dims):
    return IncidenceBase(ambient, dims)


def brute_force_bases(n):
    """Independent exhaustion: every multiset of dims in [0, n-2] imposing
    exactly 2n-3 conditions."""
    found = set()
    max_size = 2 * n - 3  # each space imposes at least one condition
    for size in range(1, max_size + 1):
        for dims in itertools.combinations_with_replacement(range(n - 1), size):
            if sum(n - 1 - d for d in dims) == 2 * n - 3:
                found.add(IncidenceBase(n, dims))
    return found


class TestConditionsCount:
    def test_three_lines(self):
        assert conditions_count(B(3, 1, 1, 1)) == 3

    def test_plane_family(self):
        assert conditions_count(B(5, 2, 3, 3, 3, 3, 3)) == 7

    def test_empty(self):
        assert conditions_count(IncidenceBase(7, ())) == 0


class TestSatisfiesIs:
    def test_seven_solids(self):
        assert satisfies_is(B(5, 3, 3, 3, 3, 3, 3, 3))

    def test_too_few_conditions(self):
        assert not satisfies_is(B(5, 2, 3))

    def test_line_and_planes(self):
        assert satisfies_is(B(4, 1, 2, 2, 2))


class TestNondegeneracy:
    def test_two_lines_and_plane(self):
        assert not is_nondegenerate(B(4, 1, 1, 2))

    def test_two_planes_in_p6(self):
        assert not is_nondegenerate(B(6, 2, 2, 3, 4))

    def test_table_row(self):
        assert is_nondegenerate(B(6, 2, 3, 3, 4, 4))


class TestEnumeration:
    def test_p3(self):
        assert enumerate_bases(3, nondegenerate_only=True) == [B(3, 1, 1, 1)]

    def test_p4(self):
        assert enumerate_bases(4, nondegenerate_only=True) == \
            [B(4, 1, 2, 2, 2), B(4, 2, 2, 2, 2, 2)]

    def test_p5(self):
        assert enumerate_bases(5, nondegenerate_only=True) == [
            B(5, 1, 3, 3, 3, 3),
            B(5, 2, 2, 2, 3),
            B(5, 2, 2, 3, 3, 3),
            B(5, 2, 3, 3, 3, 3, 3),
            B(5, 3, 3, 3, 3, 3, 3, 3),
        ]

    @pytest.mark.parametrize("n", range(3, 8))
    def test_complete_against_brute_force(self, n):
        assert set(enumerate_bases(n)) == brute_force_bases(n)

    def test_contains_dim_filter(self):
        bases = enumerate_bases(5, nondegenerate_only=True, contains_dim=2)
        assert all(2 in b.dims for b in bases)
        assert len(bases) == 3

    def test_every_enumerated_base_is_is(self):
        for n in range(3, 8):
            for base in enumerate_bases(n):
                assert satisfies_is(base)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            enumerate_bases(2)


class TestJoin:
    def test_seven_solids(self):
        result = join(B(5, 3, 3, 3, 3, 3, 3, 3), 0, 1)
        assert result.m == 2
        assert result.dot == B(5, 2, 3, 3, 3, 3, 3)
        assert result.ddot == B(4, 2, 2, 2, 2, 2)

    def test_five_planes(self):
        result = join(B(4, 2, 2, 2, 2, 2), 0, 1)
        assert result.m == 1
        assert result.dot == B(4, 1, 2, 2, 2)
        assert result.ddot == B(3, 1, 1, 1)

    def test_m_zero(self):
        base = B(7, 2, 4, 4, 4, 5)
        result = join(base, 0, 1)
        assert result.m == 0
        assert result.dot == B(7, 0, 4, 4, 5)
        assert result.ddot == B(6, 2, 3, 3, 4, 4)

    def test_no_specialization(self):
        with pytest.raises(ValueError):
            join(B(6, 2, 2, 3, 4), 0, 1)  # 2+2-6+1 < 0

    def test_children_satisfy_is(self):
        for n in range(3, 7):
            for base in enumerate_bases(n, nondegenerate_only=True):
                for i, j in itertools.combinations(range(len(base.dims)), 2):
                    if base.dims[i] + base.dims[j] - n + 1 < 0:
                        continue
                    result = join(base, i, j)
                    assert satisfies_is(result.dot)
                    assert satisfies_is(result.ddot)


class TestSeparate:
    def test_plane_family_lift(self):
        base = B(6, 2, 3, 3, 4, 4)
        lifted = separate(base, 0, 3)  # the plane and a P^4
        assert lifted == B(7, 2, 4, 4, 4, 5)

    def test_round_trip(self):
        for n in range(3, 7):
            for base in enumerate_bases(n, nondegenerate_only=True):
                for i, j in itertools.combinations(range(len(base.dims)), 2):
                    if base.dims[i] + base.dims[j] != n:
                        continue
                    lifted = separate(base, i, j)
                    di, dj = base.dims[i], base.dims[j]
                    li = lifted.dims.index(di)
                    lj = lifted.dims.index(dj) if dj != di else li + 1
                    back = join(lifted, li, lj)
                    assert back.m == 0
                    assert back.ddot == base

    def test_wrong_sum(self):
        with pytest.raises(ValueError):
            separate(B(3, 1, 1, 1), 0, 1)


class TestRestrictToSpan:
    def test_plane_and_two_lines(self):
        assert restrict_to_span(B(4, 1, 1, 2)) == B(3, 1, 1, 1)

    def test_two_planes_in_p6(self):
        assert restrict_to_span(B(6, 2, 2, 3, 4)) == B(5, 2, 2, 2, 3)

    def test_idempotent_on_nondegenerate(self):
        for n in range(3, 7):
            for base in enumerate_bases(n, nondegenerate_only=True):
                assert restrict_to_span(base) == base

    def test_preserves_is(self):
        for n in range(3, 8):
            for base in enumerate_bases(n):
                try:
                    restricted = restrict_to_span(base)
                except EmptyIncidenceError:
                    continue
                assert satisfies_is(restricted)
                assert is_nondegenerate(restricted)


class TestCanonicalize:
    def test_drops_hyperplanes(self):
        assert canonicalize(B(5, 2, 3, 4)) == B(5, 2, 3)

    def test_sorts(self):
        assert IncidenceBase(6, (4, 2, 3)).dims == (2, 3, 4)

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            IncidenceBase(5, (5,))


class TestTextFormat:
    def test_format(self):
        assert format_base(B(6, 2, 3, 3, 4, 4)) == "n=6 dims=2,3,3,4,4"

    def test_parse(self):
        assert parse_base("n=6 dims=2,3,3,4,4") == B(6, 2, 3, 3, 4, 4)

    def test_round_trip(self):
        for base in enumerate_bases(5):
            assert parse_base(format_base(base)) == base

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_base("dims=1,2")

import pytest
from hypothesis import given, strategies as st

from crankmex.partitions import (
    ClassTag,
    Partition,
    PartitionClassId,
    PartitionError,
    beta,
    count_classes,
    crank,
    durfee,
    enumerate_partitions,
    fixed_point,
    format_partition,
    has_j_fixed_point,
    make_partition,
    member,
    mex,
    mu,
    omega,
    parse_partition,
    partitions_of,
)

P = make_partition
ONES8 = P([1] * 8)

partitions_st = st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=12).map(Partition)


def euler_p(n):
    """Partition numbers from the pentagonal recurrence (independent of enumeration)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


class TestMakePartition:
    def test_sorts(self):
        assert tuple(P([2, 3, 1, 2])) == (3, 2, 2, 1)

    def test_single(self):
        assert tuple(P([8])) == (8,)
        assert P([8]).n == 8

    def test_all_ones(self):
        assert format_partition(ONES8) == "1^8"

    def test_empty_rejected(self):
        with pytest.raises(PartitionError, match="empty partition rejected"):
            P([])

    @pytest.mark.parametrize("bad", [[3, 0], [2, -1], [1.5]])
    def test_invalid_part(self, bad):
        with pytest.raises(PartitionError, match="invalid part"):
            P(bad)

    def test_parse_both_notations(self):
        assert parse_partition("2^2 1^4") == parse_partition("2 2 1 1 1 1") == P([2, 2, 1, 1, 1, 1])
        assert parse_partition(["3", "2^3"]) == P([3, 2, 2, 2])

    @given(partitions_st)
    def test_format_parse_round_trip(self, lam):
        assert parse_partition(format_partition(lam)) == lam


class TestStatistics:
    @pytest.mark.parametrize("parts, expected", [((5, 1, 1), 2), ((8,), 0), ((1,) * 8, 8)])
    def test_omega(self, parts, expected):
        assert omega(P(parts)) == expected

    @pytest.mark.parametrize("parts, expected", [((5, 1, 1), 1), ((8,), 1), ((1,) * 8, 0)])
    def test_mu(self, parts, expected):
        assert mu(P(parts)) == expected

    @pytest.mark.parametrize(
        "parts, expected",
        [((5, 1, 1), -1), ((3, 2, 1, 1), -1), ((4, 2, 1), 1), ((3, 3, 1), 1), ((8,), 8), ((1,) * 8, -8)],
    )
    def test_crank(self, parts, expected):
        assert crank(P(parts)) == expected

    @pytest.mark.parametrize("parts, expected", [((3, 3, 2, 1), 4), ((8,), 1), ((1,) * 8, 2)])
    def test_mex(self, parts, expected):
        assert mex(P(parts)) == expected

    @pytest.mark.parametrize("parts, expected", [((3, 2, 1, 1), 2), ((5, 1, 1), 1), ((1,) * 8, 0)])
    def test_beta(self, parts, expected):
        assert beta(P(parts)) == expected

    @pytest.mark.parametrize("parts, j, expected", [((3, 3, 2, 1), 0, 2), ((5, 2), 1, 1), ((1,) * 8, 1, 0)])
    def test_durfee(self, parts, j, expected):
        assert durfee(P(parts), j) == expected

    @pytest.mark.parametrize("parts, expected", [((4, 2, 2), 2), ((6, 1, 1), None), ((1,) * 8, 1)])
    def test_fixed_point(self, parts, expected):
        assert fixed_point(P(parts)) == expected

    @pytest.mark.parametrize("parts, j, expected", [((4, 3), 1, True), ((5, 2), 1, False), ((3, 3, 2, 1), 0, False)])
    def test_j_fixed_point(self, parts, j, expected):
        assert has_j_fixed_point(P(parts), j) is expected

    @given(partitions_st)
    def test_beta_is_length_minus_omega(self, lam):
        assert beta(lam) == len(lam) - omega(lam)

    @given(partitions_st, st.integers(0, 5))
    def test_durfee_matches_scan(self, lam, j):
        scan = max([i for i in range(1, len(lam) + 1) if lam[i - 1] >= i + j], default=0)
        assert durfee(lam, j) == scan

    @given(partitions_st)
    def test_mex_is_smallest_missing(self, lam):
        m = mex(lam)
        assert m not in lam and all(i in lam for i in range(1, m))

    @given(partitions_st)
    def test_crank_definition(self, lam):
        w = lam.count(1)
        expected = max(lam) if w == 0 else sum(p > w for p in lam) - w
        assert crank(lam) == expected


class TestEnumeration:
    def test_n5_count(self):
        assert len(list(enumerate_partitions(5))) == 7

    def test_n1(self):
        assert list(enumerate_partitions(1)) == [P([1])]

    def test_membership_once(self):
        assert list(enumerate_partitions(8)).count(P([3, 2, 2, 1])) == 1

    @pytest.mark.parametrize("bad", [0, -3])
    def test_invalid_n(self, bad):
        with pytest.raises(PartitionError, match="invalid n"):
            list(enumerate_partitions(bad))

    @pytest.mark.parametrize("n", [1, 2, 7, 15, 28, 40])
    def test_counts_match_pentagonal_recurrence(self, n):
        assert len(partitions_of(n)) == euler_p(n)

    @pytest.mark.parametrize("n", [6, 12, 20])
    def test_order_and_uniqueness(self, n):
        parts = [tuple(p) for p in enumerate_partitions(n)]
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)
        assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in parts)


class TestClasses:
    def test_two_to_the_four_in_fstar(self):
        lam = P([2, 2, 2, 2])
        assert beta(lam) == 4
        assert member(lam, PartitionClassId(ClassTag.Fstar, 4))

    def test_611_negative_crank(self):
        assert member(P([6, 1, 1]), PartitionClassId(ClassTag.M_neg, 1))

    def test_ones_fstar_row(self):
        assert member(ONES8, PartitionClassId(ClassTag.Fstar, 1))
        assert not member(ONES8, PartitionClassId(ClassTag.Fstar, 0))
        assert member(ONES8, PartitionClassId(ClassTag.F, 0))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_fstar_equals_f_for_k_at_least_two(self, k):
        for lam in partitions_of(10):
            assert member(lam, PartitionClassId("Fstar", k)) == member(lam, PartitionClassId("F", k))

    def test_counts_n8(self):
        t = count_classes(8)
        assert [t.get("X_e", k) for k in range(4)] == [1, 5, 3, 1]
        assert [t.get("M_pos", k + 1) for k in range(4)] == [1, 5, 3, 1]

    def test_counts_n9(self):
        t = count_classes(9, ["X_e"])
        assert [t.get("X_e", k) for k in range(4)] == [1, 6, 5, 2]

    @pytest.mark.parametrize("n", range(1, 16))
    def test_count_table_matches_filtering(self, n):
        t = count_classes(n)
        for tag in ClassTag:
            for k in range(n + 1):
                direct = sum(1 for lam in partitions_of(n) if member(lam, PartitionClassId(tag, k)))
                assert t.get(tag, k) == direct

import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crankmex.series import (
    INF,
    BivariateSeries,
    LaurentPoly,
    TrivariateCrankSeries,
    WindowError,
    geom_inverse,
    inverse_pochhammer,
    laurent_pochhammer,
    pochhammer,
    qbinom,
)

S = BivariateSeries


def subset_qbinom(a, b):
    """Gaussian binomial by enumerating b-subsets of {1..a}: q^(sum - b(b+1)/2)."""
    coeffs = {}
    for sub in itertools.combinations(range(1, a + 1), b):
        e = sum(sub) - b * (b + 1) // 2
        coeffs[e] = coeffs.get(e, 0) + 1
    return LaurentPoly(coeffs)


def brute_product(x, y, qmax, zmax):
    out = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            if a1 + a2 <= qmax and b1 + b2 <= zmax:
                out[(a1 + a2, b1 + b2)] = out.get((a1 + a2, b1 + b2), 0) + c1 * c2
    return out


class TestBivariate:
    def test_one_plus_q_times_one_minus_q(self):
        a = S.from_terms(4, 0, {(0, 0): 1, (1, 0): 1})
        b = S.from_terms(4, 0, {(0, 0): 1, (1, 0): -1})
        assert a * b == S.from_terms(4, 0, {(0, 0): 1, (2, 0): -1})

    def test_zero_product(self):
        a = S.from_terms(5, 2, {(1, 1): 3})
        assert (a * S.zero(5, 2)).is_zero()

    def test_window_mismatch(self):
        with pytest.raises(WindowError):
            S.one(3, 1) + S.one(4, 1)
        with pytest.raises(WindowError):
            S.one(3, 1) * S.one(3, 2)

    def test_geom_q(self):
        s = geom_inverse(1, 0, 10, 2)
        assert list(s.z_coefficient(0)) == [1] * 11
        assert not s.z_coefficient(1).any()

    def test_geom_zq2(self):
        s = geom_inverse(2, 1, 10, 3)
        expected = {(2 * b, b): 1 for b in range(4)}
        assert s == S.from_terms(10, 3, expected)

    def test_geom_degenerate(self):
        with pytest.raises(ZeroDivisionError, match="non-invertible grading"):
            geom_inverse(0, 0, 5, 5)

    def test_geom_z_only(self):
        s = geom_inverse(0, 1, 3, 4)
        assert list(s.coeff[0]) == [1] * 5 and not s.coeff[1:].any()

    @pytest.mark.parametrize("bq, bz", [(1, 0), (2, 1), (3, 0), (0, 1), (5, 1)])
    def test_div_then_mul_is_identity(self, bq, bz):
        s = S.from_terms(12, 4, {(0, 0): 2, (3, 1): -1, (5, 2): 7})
        assert s.div_factor(bq, bz).mul_factor(bq, bz) == s

    def test_pochhammer_empty(self):
        assert pochhammer(1, 0, 0, 6, 2) == S.one(6, 2)

    def test_pochhammer_zq2_inf(self):
        assert pochhammer(2, 1, INF, 10, 3)[2, 1] == -1

    def test_pochhammer_q2_two(self):
        expected = S.from_terms(10, 0, {(0, 0): 1, (2, 0): -1, (3, 0): -1, (5, 0): 1})
        assert pochhammer(2, 0, 2, 10, 0) == expected

    def test_pochhammer_negative_count(self):
        with pytest.raises(ValueError, match="undefined Pochhammer subscript"):
            pochhammer(1, 0, -1, 5, 0)

    def test_inverse_pochhammer_q_inf_counts_partitions(self):
        s = inverse_pochhammer(1, 0, INF, 20, 0)
        assert list(s.z_coefficient(0)[:11]) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_inverse_pochhammer_times_pochhammer(self):
        a = pochhammer(2, 1, INF, 25, 6)
        b = inverse_pochhammer(2, 1, INF, 25, 6)
        assert a * b == S.one(25, 6)

    def test_overflow_is_raised(self):
        big = S.from_terms(2, 0, {(0, 0): 2**40})
        with pytest.raises(OverflowError):
            big * big

    def test_json_round_trip(self):
        s = inverse_pochhammer(2, 1, INF, 8, 3)
        d = json.loads(s.to_json())
        assert set(d) == {"qmax", "zmax", "coeffs"}
        assert len(d["coeffs"]) == 9 * 4
        assert d["coeffs"][2 * 4 + 1] == s[2, 1]
        assert S.from_json(s.to_json()) == s

    @settings(max_examples=60, deadline=None)
    @given(
        st.dictionaries(st.tuples(st.integers(0, 9), st.integers(0, 4)), st.integers(-50, 50), max_size=12),
        st.dictionaries(st.tuples(st.integers(0, 9), st.integers(0, 4)), st.integers(-50, 50), max_size=12),
    )
    def test_window_soundness(self, x, y):
        qmax, zmax = 9, 4
        got = S.from_terms(qmax, zmax, x) * S.from_terms(qmax, zmax, y)
        assert got == S.from_terms(qmax, zmax, brute_product(x, y, qmax, zmax))


class TestLaurent:
    def test_inverse_monomials(self):
        assert LaurentPoly.monomial(-1) * LaurentPoly.monomial(1) == LaurentPoly({0: 1})

    def test_normalized(self):
        p = LaurentPoly({0: 1, 3: 2}) - LaurentPoly({3: 2})
        assert p.coeffs == {0: 1}

    def test_exact_div(self):
        num = laurent_pochhammer(1, 4)
        den = laurent_pochhammer(1, 2)
        assert num.exact_div(den) * den == num
        with pytest.raises(ValueError, match="inexact"):
            LaurentPoly({0: 1, 1: 1}).exact_div(LaurentPoly({0: 1, 2: 1}))

    def test_negative_shift_pochhammer_value(self):
        # (q^-2; q)_1 = 1 - q^-2
        assert laurent_pochhammer(-2, 1) == LaurentPoly({0: 1, -2: -1})

    def test_evaluate(self):
        assert LaurentPoly({-1: 2, 1: 1}).evaluate(Fraction(2)) == Fraction(3)


class TestQBinomial:
    def test_two_one(self):
        assert qbinom(2, 1).value == LaurentPoly({0: 1, 1: 1})

    def test_five_zero(self):
        assert qbinom(5, 0).value == LaurentPoly({0: 1})

    def test_out_of_range(self):
        assert qbinom(3, 5).value.is_zero()
        assert qbinom(3, -1).value.is_zero()

    @pytest.mark.parametrize("a", range(0, 10))
    def test_against_subset_oracle(self, a):
        for b in range(a + 1):
            q = qbinom(a, b)
            assert q.value == subset_qbinom(a, b)
            assert q.at_one() == math.comb(a, b)
            assert q.value == qbinom(a, a - b).value
            assert all(c > 0 for c in q.value.coeffs.values())


class TestTrivariate:
    def test_column_and_row(self):
        t = TrivariateCrankSeries(3)
        t.add_column(-1, np.array([0, 1, 0, 2]))
        t.add_column(2, np.array([0, 0, 1, 0]))
        assert t[1, -1] == 1 and t[3, -1] == 2 and t[2, 2] == 1
        assert t.row(3) == {-1: 2}
        assert TrivariateCrankSeries.from_dict(t.to_dict()) == t

    def test_out_of_window_exponent(self):
        t = TrivariateCrankSeries(2)
        with pytest.raises(WindowError):
            t.add_column(5, np.array([0, 0, 1]))

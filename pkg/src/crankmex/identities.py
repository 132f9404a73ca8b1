"""Generating functions for the refined classes and exact checks of the identities linking them.

Every generating function here is expanded directly from its defining
sum, never from another one, so equalities between them are genuine
checks.  ``z`` tracks parts greater than one throughout.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Optional

import numpy as np

from .partitions import ClassTag, PartitionClassId, count_classes
from .series import (
    INF,
    BivariateSeries,
    LaurentPoly,
    TrivariateCrankSeries,
    inverse_pochhammer,
    laurent_pochhammer,
    pochhammer,
    qbinom,
)

DEFAULT_QMAX = 30
DEFAULT_ZMAX = 10

Corruption = Optional[tuple[int, int]]


def _tri(n: int) -> int:
    return n * (n + 1) // 2


def _inverse_pochhammers(a_q: int, a_z: int, upto: int, qmax: int, zmax: int) -> list[BivariateSeries]:
    """``[1/(z^a_z q^a_q;q)_0, ..., 1/(z^a_z q^a_q;q)_upto]``, built incrementally."""
    out = [BivariateSeries.one(qmax, zmax)]
    for i in range(upto):
        out.append(out[-1].div_factor(a_q + i, a_z))
    return out


def _corrupt(s: BivariateSeries, at: Corruption) -> BivariateSeries:
    if at is None:
        return s
    s = s.copy()
    s.coeff[at] += 1
    return s


# ---------------------------------------------------------------------------
# the common generating function

def alternating_triangular_sum(qmax: int, zmax: int, z_shift: int = 0) -> BivariateSeries:
    """``sum_{n>=1} (-1)^(n-1) z^(n-1+z_shift) q^(n(n+1)/2)``."""
    s = BivariateSeries(qmax, zmax)
    n = 1
    while _tri(n) <= qmax:
        b = n - 1 + z_shift
        if b <= zmax:
            s.coeff[_tri(n), b] += (-1) ** (n - 1)
        n += 1
    return s


def e_series(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX) -> BivariateSeries:
    """``E(z,q) = 1/((1-q)(zq^2;q)_inf) * sum_{n>=1} (-1)^(n-1) z^(n-1) q^C(n+1,2)``."""
    s = alternating_triangular_sum(qmax, zmax).div_factor(1, 0)
    return s * inverse_pochhammer(2, 1, INF, qmax, zmax)


def gf_even_mex_direct(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX) -> BivariateSeries:
    """Even mex ``2n``: parts ``1..2n-1`` forced, part ``2n`` forbidden, the rest free."""
    total = BivariateSeries(qmax, zmax)
    n = 1
    while comb(2 * n, 2) <= qmax:
        term = BivariateSeries.monomial(qmax, zmax, comb(2 * n, 2), 2 * n - 2)
        if not term.is_zero():
            term = term.div_factor(1, 0)
            for j in range(2, qmax + 1):
                if j != 2 * n:
                    term = term.div_factor(j, 1)
            total = total + term
        n += 1
    return total


def gf_fixed_point_direct(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX) -> BivariateSeries:
    """``sum_{n>=1} z^n q^(n^2) / ((q;q)_{n-1} (1-q) (zq^2;q)_{n-1})``."""
    total = BivariateSeries(qmax, zmax)
    n = 1
    while n * n <= qmax and n <= zmax:
        term = BivariateSeries.monomial(qmax, zmax, n * n, n).div_factor(1, 0)
        term = term * inverse_pochhammer(1, 0, n - 1, qmax, zmax)
        term = term * inverse_pochhammer(2, 1, n - 1, qmax, zmax)
        total = total + term
        n += 1
    return total


def gf_neg_crank_direct(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX) -> BivariateSeries:
    """``sum_{n>=1} q^n/(zq^2;q)_{n-1} sum_{m=0}^{n-1} z^m q^(m(n+1)) / (q;q)_m``.

    The sum starts at ``n = 1``; the ``n = 0`` term is an empty inner sum.
    """
    inv_zq2 = _inverse_pochhammers(2, 1, qmax, qmax, zmax)
    inv_q = _inverse_pochhammers(1, 0, qmax, qmax, zmax)
    total = BivariateSeries(qmax, zmax)
    for n in range(1, qmax + 1):
        inner = BivariateSeries(qmax, zmax)
        for m in range(0, min(n - 1, zmax) + 1):
            e = n + m * (n + 1)
            if e > qmax:
                break
            inner = inner + inv_q[m].shift(e, m)
        if not inner.is_zero():
            total = total + inner * inv_zq2[n - 1]
    return total


def gf_pos_crank_direct(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX) -> BivariateSeries:
    """``zq + sum_{n>=2} zq^n/(zq^2;q)_{n-1}
    + sum_{n>=1} q^n/(zq^2;q)_{n-1} sum_{m>=n+1} z^m q^(m(n+1))/(q;q)_m``."""
    inv_zq2 = _inverse_pochhammers(2, 1, qmax, qmax, zmax)
    inv_q = _inverse_pochhammers(1, 0, qmax, qmax, zmax)
    total = BivariateSeries.monomial(qmax, zmax, 1, 1)
    for n in range(2, qmax + 1):
        total = total + inv_zq2[n - 1].shift(n, 1)
    for n in range(1, qmax + 1):
        inner = BivariateSeries(qmax, zmax)
        m = n + 1
        while m <= zmax and n + m * (n + 1) <= qmax:
            inner = inner + inv_q[m].shift(n + m * (n + 1), m)
            m += 1
        if not inner.is_zero():
            total = total + inner * inv_zq2[n - 1]
    return total


GF_BY_CLASS: dict[ClassTag, Callable[[int, int], BivariateSeries]] = {
    ClassTag.X_e: gf_even_mex_direct,
    ClassTag.Fstar: gf_fixed_point_direct,
    ClassTag.M_neg: gf_neg_crank_direct,
    ClassTag.M_pos: gf_pos_crank_direct,
}


# ---------------------------------------------------------------------------
# crank generating function in q and y

def gf_crank_trivariate(qmax: int = DEFAULT_QMAX) -> TrivariateCrankSeries:
    """``(1-q) + sum_{n>=1} q^n y^n/(q^2;q)_{n-1}
    + sum_{n>=1} q^n y^(-n)/(q^2;q)_{n-1} sum_{m>=0} q^(m(n+1)) y^m/(q;q)_m``."""
    out = TrivariateCrankSeries(qmax)
    base = np.zeros(qmax + 1, dtype=np.int64)
    base[0] = 1
    if qmax >= 1:
        base[1] = -1
    out.add_column(0, base)
    inv_q2 = _inverse_pochhammers(2, 0, qmax, qmax, 0)
    inv_q = _inverse_pochhammers(1, 0, qmax, qmax, 0)
    for n in range(1, qmax + 1):
        out.add_column(n, inv_q2[n - 1].shift(n).z_coefficient(0))
        m = 0
        while n + m * (n + 1) <= qmax:
            term = (inv_q2[n - 1] * inv_q[m]).shift(n + m * (n + 1))
            out.add_column(m - n, term.z_coefficient(0))
            m += 1
    return out


# ---------------------------------------------------------------------------
# finite-window identities

def aux_zero_series(qmax: int, zmax: int) -> BivariateSeries:
    """``zq + sum_{n>=2} zq^n/(zq^2;q)_{n-1} - (1-zq) sum_{m>=1} z^m q^m/(q;q)_m``."""
    inv_zq2 = _inverse_pochhammers(2, 1, qmax, qmax, zmax)
    s = BivariateSeries.monomial(qmax, zmax, 1, 1)
    for n in range(2, qmax + 1):
        s = s + inv_zq2[n - 1].shift(n, 1)
    euler = BivariateSeries(qmax, zmax)
    inv_q = _inverse_pochhammers(1, 0, min(qmax, zmax), qmax, zmax)
    for m in range(1, min(qmax, zmax) + 1):
        euler = euler + inv_q[m].shift(m, m)
    return s - euler.mul_factor(1, 1)


def aux_zero_identity_check(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX, corrupt: Corruption = None) -> bool:
    return _corrupt(aux_zero_series(qmax, zmax), corrupt).is_zero()


def dgoal_sides(qmax: int, zmax: int, lhs_start: int = 1) -> tuple[BivariateSeries, BivariateSeries]:
    """Both sides of the rewritten positive-crank goal.

    LHS ``(1-zq) sum_{n>=0} sum_{m>=n+1} z^m q^(mn+m+n) / ((zq;q)_n (q;q)_m)``;
    RHS ``z E(z,q)`` in its closed form.  ``lhs_start`` moves the base of the
    ``(zq;q)_n`` factor to ``q^lhs_start`` (1 is the true identity).
    """
    inv_zq = _inverse_pochhammers(lhs_start, 1, qmax, qmax, zmax)
    inv_q = _inverse_pochhammers(1, 0, zmax, qmax, zmax)
    lhs = BivariateSeries(qmax, zmax)
    for n in range(0, min(zmax, qmax + 1)):
        inner = BivariateSeries(qmax, zmax)
        m = n + 1
        while m <= zmax and m * n + m + n <= qmax:
            inner = inner + inv_q[m].shift(m * n + m + n, m)
            m += 1
        if not inner.is_zero():
            lhs = lhs + inner * inv_zq[n]
    lhs = lhs.mul_factor(1, 1)
    rhs = alternating_triangular_sum(qmax, zmax, z_shift=1).div_factor(1, 0)
    rhs = rhs * inverse_pochhammer(2, 1, INF, qmax, zmax)
    return lhs, rhs


def dgoal_rewritten_check(qmax: int = DEFAULT_QMAX, zmax: int = DEFAULT_ZMAX, lhs_start: int = 1,
                          corrupt: Corruption = None) -> bool:
    lhs, rhs = dgoal_sides(qmax, zmax, lhs_start)
    return _corrupt(lhs, corrupt) == rhs


def coeff_zN_sides(N: int, qmax: int) -> tuple[np.ndarray, np.ndarray]:
    """The ``z^N`` coefficient of
    ``sum_{n>=0} sum_{m>=n+1} z^m q^(mn+m+n)/(q;q)_m * (zq^(n+1);q)_inf``
    and the closed form ``(-1)^(N-1) q^C(N+1,2) / (1-q)``, both as q-arrays."""
    if N < 1:
        raise ValueError("N must be positive")
    zmax = N
    inv_q = _inverse_pochhammers(1, 0, N, qmax, zmax)
    total = BivariateSeries(qmax, zmax)
    for n in range(0, N):
        inner = BivariateSeries(qmax, zmax)
        for m in range(n + 1, N + 1):
            e = m * n + m + n
            if e > qmax:
                break
            inner = inner + inv_q[m].shift(e, m)
        if inner.is_zero():
            continue
        total = total + inner * pochhammer(n + 1, 1, INF, qmax, zmax)
    got = total.z_coefficient(N)
    expected = np.zeros(qmax + 1, dtype=np.int64)
    expected[_tri(N):] = (-1) ** (N - 1)
    return got, expected


def coeff_zN_identity_check(N: int, qmax: int = DEFAULT_QMAX, corrupt: Optional[int] = None) -> bool:
    got, expected = coeff_zN_sides(N, qmax)
    if corrupt is not None:
        got = got.copy()
        got[corrupt] += 1
    return bool(np.array_equal(got, expected))


def lemma3_sides(N: int, M: int) -> tuple[LaurentPoly, LaurentPoly]:
    """``sum_{m=0}^M [N m] (-1)^m q^C(m,2)`` and ``(-1)^M q^C(M+1,2) [N-1 M]``."""
    if N < 1 or not 0 <= M <= N - 1:
        raise ValueError(f"out-of-range M={M} for N={N}")
    lhs = LaurentPoly()
    for m in range(M + 1):
        lhs = lhs + qbinom(N, m).value * LaurentPoly.monomial(comb(m, 2), (-1) ** m)
    rhs = qbinom(N - 1, M).value * LaurentPoly.monomial(_tri(M), (-1) ** M)
    return lhs, rhs


def lemma3_check(N: int, M: int, corrupt: Optional[int] = None) -> bool:
    lhs, rhs = lemma3_sides(N, M)
    if corrupt is not None:
        lhs = lhs + LaurentPoly.monomial(corrupt)
    return lhs == rhs


def qbt_sides(N: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three equal expressions for ``(q^-N; q)_{N-1}``: the q-binomial sum,
    the product itself, and ``(-1)^(N-1) q^(-N(N-1)+C(N-1,2)) (q^2;q)_{N-1}``."""
    if N < 1:
        raise ValueError("N must be positive")
    total = LaurentPoly()
    for n in range(N):
        total = total + qbinom(N - 1, n).value * LaurentPoly.monomial(comb(n, 2) - n * N, (-1) ** n)
    product = laurent_pochhammer(-N, N - 1)
    closed = laurent_pochhammer(2, N - 1) * LaurentPoly.monomial(-N * (N - 1) + comb(N - 1, 2), (-1) ** (N - 1))
    return total, product, closed


def qbt_check(N: int, corrupt: Optional[int] = None) -> bool:
    total, product, closed = qbt_sides(N)
    if corrupt is not None:
        total = total + LaurentPoly.monomial(corrupt)
    return total == product and product == closed


# ---------------------------------------------------------------------------
# generating functions against enumeration

@dataclass
class CheckReport:
    check: str
    window: dict
    status: str
    mismatches: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def gf_vs_enumeration(cls: PartitionClassId | ClassTag | str, qmax: int = 28, zmax: int = DEFAULT_ZMAX,
                      series: Optional[BivariateSeries] = None) -> CheckReport:
    """Compare a class's direct generating function with enumerated counts for ``1 <= n <= qmax``.

    Mismatches are ``(n, k, expected, got)`` with ``expected`` the enumerated
    count.  The positive-crank series' ``z q`` term at ``n = 1`` is reported
    under ``anomalies``: ``(1)`` has crank -1.
    """
    tag = cls.tag if isinstance(cls, PartitionClassId) else ClassTag(cls)
    if tag not in GF_BY_CLASS:
        raise ValueError(f"no direct generating function for class {tag}")
    if series is None:
        series = GF_BY_CLASS[tag](qmax, zmax)
    mismatches, anomalies = [], []
    for n in range(1, qmax + 1):
        table = count_classes(n, [tag])
        for k in range(zmax + 1):
            expected = table.get(tag, k)
            got = series[n, k]
            if expected != got:
                row = (n, k, expected, got)
                if tag is ClassTag.M_pos and n == 1:
                    anomalies.append(row)
                else:
                    mismatches.append(row)
    status = "pass" if not mismatches else "fail"
    return CheckReport(f"gf_vs_enumeration[{tag}]", {"qmax": qmax, "zmax": zmax}, status, mismatches, anomalies)


def series_report(name: str, lhs: BivariateSeries, rhs: BivariateSeries) -> CheckReport:
    diffs = lhs.differences(rhs)
    return CheckReport(name, {"qmax": lhs.qmax, "zmax": lhs.zmax}, "pass" if not diffs else "fail", diffs)

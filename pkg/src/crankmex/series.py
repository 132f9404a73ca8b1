"""Exact truncated series in q (and z), Laurent polynomials, Gaussian binomials.

All series are dense ``int64`` tables on a fixed window; every operation
checks a magnitude bound first and raises :class:`OverflowError` instead
of wrapping.  Coefficients at the q-series scales used here (q^60) stay
many orders of magnitude below the bound.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

import numpy as np

LIMIT = 2**62

Count = Union[int, float]  # float only for math.inf
INF = math.inf


class WindowError(ValueError):
    """Operands were truncated on different windows."""


def _bound_ok(value: float) -> None:
    if value >= LIMIT:
        raise OverflowError("series coefficient bound exceeds int64 range")


def _maxabs(arr: np.ndarray) -> float:
    return float(np.abs(arr).max()) if arr.size else 0.0


class BivariateSeries:
    """Truncated power series ``sum c[a, b] q^a z^b`` for ``a <= qmax``, ``b <= zmax``.

    A univariate q-series is the special case ``zmax = 0``.
    """

    __slots__ = ("qmax", "zmax", "coeff")

    def __init__(self, qmax: int, zmax: int, coeff: Optional[np.ndarray] = None):
        if qmax < 0 or zmax < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.qmax = qmax
        self.zmax = zmax
        shape = (qmax + 1, zmax + 1)
        if coeff is None:
            self.coeff = np.zeros(shape, dtype=np.int64)
        else:
            coeff = np.asarray(coeff)
            if coeff.shape != shape:
                raise WindowError(f"coefficient table has shape {coeff.shape}, expected {shape}")
            if coeff.dtype != np.int64:
                if coeff.size and np.abs(coeff).max() >= LIMIT:
                    raise OverflowError("coefficient exceeds int64 range")
                coeff = coeff.astype(np.int64)
            self.coeff = coeff

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, qmax: int, zmax: int) -> "BivariateSeries":
        return cls(qmax, zmax)

    @classmethod
    def monomial(cls, qmax: int, zmax: int, a: int = 0, b: int = 0, c: int = 1) -> "BivariateSeries":
        s = cls(qmax, zmax)
        if a < 0 or b < 0:
            raise ValueError("negative exponent in a power series")
        if a <= qmax and b <= zmax:
            s.coeff[a, b] = c
        return s

    @classmethod
    def one(cls, qmax: int, zmax: int) -> "BivariateSeries":
        return cls.monomial(qmax, zmax)

    @classmethod
    def from_terms(cls, qmax: int, zmax: int, terms: Mapping[tuple[int, int], int]) -> "BivariateSeries":
        s = cls(qmax, zmax)
        for (a, b), c in terms.items():
            if a <= qmax and b <= zmax:
                s.coeff[a, b] += c
        return s

    def copy(self) -> "BivariateSeries":
        return BivariateSeries(self.qmax, self.zmax, self.coeff.copy())

    def like(self) -> "BivariateSeries":
        return BivariateSeries(self.qmax, self.zmax)

    # arithmetic -------------------------------------------------------

    def _check_window(self, other: "BivariateSeries") -> None:
        if not isinstance(other, BivariateSeries):
            raise TypeError(f"expected BivariateSeries, got {type(other).__name__}")
        if (self.qmax, self.zmax) != (other.qmax, other.zmax):
            raise WindowError(
                f"window mismatch: ({self.qmax}, {self.zmax}) vs ({other.qmax}, {other.zmax})"
            )

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check_window(other)
        _bound_ok(_maxabs(self.coeff) + _maxabs(other.coeff))
        return BivariateSeries(self.qmax, self.zmax, self.coeff + other.coeff)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check_window(other)
        _bound_ok(_maxabs(self.coeff) + _maxabs(other.coeff))
        return BivariateSeries(self.qmax, self.zmax, self.coeff - other.coeff)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.qmax, self.zmax, -self.coeff)

    def scale(self, c: int) -> "BivariateSeries":
        _bound_ok(_maxabs(self.coeff) * abs(c))
        return BivariateSeries(self.qmax, self.zmax, self.coeff * c)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check_window(other)
        _bound_ok(float(np.abs(self.coeff).astype(float).sum()) * _maxabs(other.coeff))
        out = np.zeros_like(self.coeff)
        Q, Z = self.qmax + 1, self.zmax + 1
        for a, b in zip(*np.nonzero(self.coeff)):
            out[a:, b:] += self.coeff[a, b] * other.coeff[: Q - a, : Z - b]
        return BivariateSeries(self.qmax, self.zmax, out)

    __rmul__ = __mul__

    def shift(self, a: int, b: int = 0) -> "BivariateSeries":
        """Multiply by ``q^a z^b``."""
        if a < 0 or b < 0:
            raise ValueError("negative shift")
        out = np.zeros_like(self.coeff)
        Q, Z = self.qmax + 1, self.zmax + 1
        if a < Q and b < Z:
            out[a:, b:] = self.coeff[: Q - a, : Z - b]
        return BivariateSeries(self.qmax, self.zmax, out)

    def mul_factor(self, bq: int, bz: int = 0) -> "BivariateSeries":
        """Multiply by ``1 - z^bz q^bq``."""
        return self - self.shift(bq, bz)

    def div_factor(self, bq: int, bz: int = 0) -> "BivariateSeries":
        """Divide by ``1 - z^bz q^bq`` via the recurrence ``out = in + q^bq z^bz out``."""
        if bq < 0 or bz < 0:
            raise ValueError("negative exponent in factor")
        if bq == 0 and bz == 0:
            raise ZeroDivisionError("non-invertible grading: factor 1 - 1 is zero")
        out = self.coeff.copy()
        Z = self.zmax + 1
        if bq == 0:
            if bz < Z:
                for b in range(bz, Z):
                    _bound_ok(_maxabs(out[:, b]) + _maxabs(out[:, b - bz]))
                    out[:, b] += out[:, b - bz]
        elif bz < Z:
            for a in range(bq, self.qmax + 1):
                _bound_ok(_maxabs(out[a]) + _maxabs(out[a - bq]))
                out[a, bz:] += out[a - bq, : Z - bz]
        return BivariateSeries(self.qmax, self.zmax, out)

    # inspection -------------------------------------------------------

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        if 0 <= a <= self.qmax and 0 <= b <= self.zmax:
            return int(self.coeff[a, b])
        raise IndexError(f"({a}, {b}) outside window ({self.qmax}, {self.zmax})")

    def coefficient(self, a: int, b: int = 0) -> int:
        return self[a, b]

    def z_coefficient(self, b: int) -> np.ndarray:
        """The q-series multiplying ``z^b``, as an int array of length ``qmax+1``."""
        return self.coeff[:, b].copy()

    def is_zero(self) -> bool:
        return not self.coeff.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (self.qmax, self.zmax) == (other.qmax, other.zmax) and bool(
            np.array_equal(self.coeff, other.coeff)
        )

    __hash__ = None

    def differences(self, other: "BivariateSeries") -> list[tuple[int, int, int, int]]:
        """``(a, b, self[a,b], other[a,b])`` for every disagreeing coefficient."""
        self._check_window(other)
        return [
            (int(a), int(b), int(self.coeff[a, b]), int(other.coeff[a, b]))
            for a, b in zip(*np.nonzero(self.coeff != other.coeff))
        ]

    def __repr__(self) -> str:
        terms = []
        for a, b in zip(*np.nonzero(self.coeff)):
            terms.append(f"{int(self.coeff[a, b])}*q^{a}*z^{b}")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"BivariateSeries(qmax={self.qmax}, zmax={self.zmax}: {body})"

    # serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        """``{qmax, zmax, coeffs}`` with coeffs a flat row-major list (rows are q-exponents)."""
        return {"qmax": self.qmax, "zmax": self.zmax, "coeffs": [int(c) for c in self.coeff.ravel()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: Mapping) -> "BivariateSeries":
        qmax, zmax = int(d["qmax"]), int(d["zmax"])
        coeffs = np.array(d["coeffs"], dtype=object)
        if coeffs.size != (qmax + 1) * (zmax + 1):
            raise WindowError("coefficient list length does not match the window")
        return cls(qmax, zmax, coeffs.reshape(qmax + 1, zmax + 1))

    @classmethod
    def from_json(cls, text: str) -> "BivariateSeries":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# building blocks

def geom_inverse(b_q: int, b_z: int, qmax: int, zmax: int) -> BivariateSeries:
    """``1 / (1 - z^b_z q^b_q)`` on the window."""
    if b_z not in (0, 1):
        raise ValueError("b_z must be 0 or 1")
    return BivariateSeries.one(qmax, zmax).div_factor(b_q, b_z)


def _factor_exponents(a_q: int, count: Count, qmax: int):
    if isinstance(count, float) and count != INF:
        raise ValueError("count must be an integer or math.inf")
    if count < 0:
        raise ValueError("undefined Pochhammer subscript: negative count")
    i = 0
    while i < count:
        e = a_q + i
        if count == INF and e > qmax:
            return
        yield e
        i += 1


def pochhammer(a_q: int, a_z: int, count: Count, qmax: int, zmax: int) -> BivariateSeries:
    """``(z^a_z q^a_q; q)_count`` truncated; ``count`` may be ``math.inf``."""
    if a_q < 0:
        raise ValueError("negative q-exponent: use laurent_pochhammer")
    if a_z not in (0, 1):
        raise ValueError("a_z must be 0 or 1")
    if count == INF and a_z == 0 and a_q == 0:
        raise ZeroDivisionError("(1;q)_inf vanishes")
    s = BivariateSeries.one(qmax, zmax)
    for e in _factor_exponents(a_q, count, qmax):
        if e <= qmax:
            s = s.mul_factor(e, a_z)
    return s


def inverse_pochhammer(a_q: int, a_z: int, count: Count, qmax: int, zmax: int) -> BivariateSeries:
    """``1 / (z^a_z q^a_q; q)_count`` truncated."""
    if a_q < 0:
        raise ValueError("negative q-exponent")
    if a_z not in (0, 1):
        raise ValueError("a_z must be 0 or 1")
    s = BivariateSeries.one(qmax, zmax)
    for e in _factor_exponents(a_q, count, qmax):
        if e <= qmax:
            s = s.div_factor(e, a_z)
    return s


# ---------------------------------------------------------------------------
# Laurent polynomials

class LaurentPoly:
    """Exact integer Laurent polynomial in q, stored sparse and normalized."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> Optional[int]:
        return min(self._c) if self._c else None

    def max_exp(self) -> Optional[int]:
        return max(self._c) if self._c else None

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power")
        out = LaurentPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def evaluate(self, q):
        """Value at ``q`` (int, Fraction, ...); negative powers need ``q`` invertible."""
        return sum(c * q**e for e, c in self._c.items())

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division; raises ValueError if there is a remainder."""
        other = _as_laurent(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        e0 = other.min_exp()
        c0 = other[e0]
        top = self.max_exp() - other.max_exp()
        rem = self
        quot: dict[int, int] = {}
        while not rem.is_zero() and rem.min_exp() - e0 <= top:
            er = rem.min_exp()
            cr = rem[er]
            if cr % c0:
                raise ValueError("inexact division")
            term = LaurentPoly({er - e0: cr // c0})
            quot[er - e0] = cr // c0
            rem = rem - term * other
        if not rem.is_zero():
            raise ValueError("inexact division")
        return LaurentPoly(quot)

    def __repr__(self) -> str:
        if not self._c:
            return "LaurentPoly(0)"
        terms = " + ".join(f"{c}*q^{e}" for e, c in sorted(self._c.items()))
        return f"LaurentPoly({terms})"


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, np.integer)):
        return LaurentPoly({0: int(x)})
    raise TypeError(f"cannot treat {type(x).__name__} as a Laurent polynomial")


def laurent_pochhammer(a_q: int, count: int) -> LaurentPoly:
    """``(q^a_q; q)_count`` exactly, for any integer ``a_q`` (may be negative)."""
    if count < 0:
        raise ValueError("undefined Pochhammer subscript: negative count")
    out = LaurentPoly({0: 1})
    for i in range(count):
        out = out * LaurentPoly({0: 1, a_q + i: -1})
    return out


@dataclass(frozen=True, eq=False)
class QBinomial:
    a: int
    b: int
    value: LaurentPoly

    def at_one(self) -> int:
        return self.value.evaluate(1)


def qbinom(a: int, b: int) -> QBinomial:
    """Gaussian binomial ``(q;q)_a / ((q;q)_b (q;q)_{a-b})``; zero outside ``0 <= b <= a``."""
    if a < 0:
        raise ValueError("qbinom needs a >= 0")
    if not 0 <= b <= a:
        return QBinomial(a, b, LaurentPoly())
    num = laurent_pochhammer(1, a)
    den = laurent_pochhammer(1, b) * laurent_pochhammer(1, a - b)
    return QBinomial(a, b, num.exact_div(den))


# ---------------------------------------------------------------------------
# crank series in q and y

class TrivariateCrankSeries:
    """Truncated series ``sum c[a, y] q^a y^c`` with ``-qmax <= c <= qmax``.

    Named for the crank generating function it holds; ``coeff[a, c + qmax]``
    stores the coefficient of ``q^a y^c``.
    """

    __slots__ = ("qmax", "coeff")

    def __init__(self, qmax: int, coeff: Optional[np.ndarray] = None):
        self.qmax = qmax
        shape = (qmax + 1, 2 * qmax + 1)
        self.coeff = np.zeros(shape, dtype=np.int64) if coeff is None else np.asarray(coeff, dtype=np.int64)
        if self.coeff.shape != shape:
            raise WindowError(f"coefficient table has shape {self.coeff.shape}, expected {shape}")

    def add_column(self, c: int, qseries: np.ndarray) -> None:
        """Add the univariate ``qseries`` times ``y^c`` in place."""
        if abs(c) > self.qmax:
            if np.any(qseries):
                raise WindowError(f"y-exponent {c} outside window with nonzero coefficients")
            return
        col = self.coeff[:, c + self.qmax]
        _bound_ok(_maxabs(col) + _maxabs(qseries))
        col += qseries

    def __getitem__(self, ac: tuple[int, int]) -> int:
        a, c = ac
        if abs(c) > self.qmax:
            return 0
        return int(self.coeff[a, c + self.qmax])

    def __add__(self, other: "TrivariateCrankSeries") -> "TrivariateCrankSeries":
        if other.qmax != self.qmax:
            raise WindowError("window mismatch")
        _bound_ok(_maxabs(self.coeff) + _maxabs(other.coeff))
        return TrivariateCrankSeries(self.qmax, self.coeff + other.coeff)

    def __sub__(self, other: "TrivariateCrankSeries") -> "TrivariateCrankSeries":
        if other.qmax != self.qmax:
            raise WindowError("window mismatch")
        _bound_ok(_maxabs(self.coeff) + _maxabs(other.coeff))
        return TrivariateCrankSeries(self.qmax, self.coeff - other.coeff)

    def row(self, a: int) -> dict[int, int]:
        """Nonzero ``{crank: coefficient}`` at ``q^a``."""
        return {
            int(c) - self.qmax: int(self.coeff[a, c])
            for c in np.nonzero(self.coeff[a])[0]
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrivariateCrankSeries):
            return NotImplemented
        return self.qmax == other.qmax and bool(np.array_equal(self.coeff, other.coeff))

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "qmax": self.qmax,
            "ymin": -self.qmax,
            "ymax": self.qmax,
            "coeffs": [int(c) for c in self.coeff.ravel()],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "TrivariateCrankSeries":
        qmax = int(d["qmax"])
        return cls(qmax, np.array(d["coeffs"], dtype=np.int64).reshape(qmax + 1, 2 * qmax + 1))

"""Integer partitions, their statistics, and the refined partition classes.

A :class:`Partition` is an immutable, canonical (nonincreasing) tuple of
positive parts.  Every statistic is a plain function so it can be mapped
over :func:`enumerate_partitions` without ceremony.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional


class PartitionError(ValueError):
    """Raised for malformed partition input."""


class Partition(tuple):
    """Nonincreasing tuple of positive integers.

    Construction canonicalizes any ordering, so ``Partition([2, 3, 1, 2])``
    equals ``Partition([3, 2, 2, 1])``.  The empty partition is rejected.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        if not parts:
            raise PartitionError("empty partition rejected")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise PartitionError(f"invalid part: {p!r}")
        return tuple.__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees a nonempty, nonincreasing list of positive ints
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part access; indices past the end read as 0."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def format_partition(parts: Iterable[int]) -> str:
    """Exponent notation, e.g. ``(2, 2, 1, 1, 1, 1)`` -> ``"2^2 1^4"``.

    An empty sequence renders as ``"()"``; intermediate bijection states can
    be empty even though partitions cannot.
    """
    parts = list(parts)
    if not parts:
        return "()"
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        count = j - i
        out.append(str(parts[i]) if count == 1 else f"{parts[i]}^{count}")
        i = j
    return " ".join(out)


def parse_partition(tokens: Iterable[str] | str) -> Partition:
    """Parse ``"2^2 1^4"``, ``"2 2 1 1 1 1"`` or a token list of either."""
    if isinstance(tokens, str):
        tokens = tokens.replace(",", " ").split()
    parts = []
    for tok in tokens:
        for piece in tok.replace(",", " ").split():
            base, _, exp = piece.partition("^")
            try:
                value = int(base)
                count = int(exp) if exp else 1
            except ValueError:
                raise PartitionError(f"cannot parse part {piece!r}") from None
            if count < 1:
                raise PartitionError(f"invalid repetition in {piece!r}")
            parts.extend([value] * count)
    return Partition(parts)


# ---------------------------------------------------------------------------
# statistics

def omega(lam: Partition) -> int:
    """Number of parts equal to 1."""
    return lam.count(1)


def mu(lam: Partition) -> int:
    """Number of parts strictly greater than ``omega(lam)``."""
    w = omega(lam)
    return sum(1 for p in lam if p > w)


def crank(lam: Partition) -> int:
    w = omega(lam)
    if w == 0:
        return lam[0]
    return mu(lam) - w


def mex(lam: Partition) -> int:
    """Smallest positive integer that is not a part."""
    present = set(lam)
    m = 1
    while m in present:
        m += 1
    return m


def beta(lam: Partition) -> int:
    """Number of parts greater than one."""
    return len(lam) - omega(lam)


def durfee(lam: Iterable[int], j: int = 0) -> int:
    """Greatest 1-based index ``i`` with ``lam_i >= i + j``, or 0.

    ``durfee(lam, 0)`` is the side of the Durfee square.  Accepts any
    nonincreasing sequence, including the empty one.
    """
    d = 0
    for i, p in enumerate(lam, start=1):
        if p >= i + j:
            d = i
        else:
            break
    return d


def j_fixed_point(lam: Iterable[int], j: int) -> Optional[int]:
    """Index ``i`` with ``lam_i == i + j``, if any (at most one exists)."""
    for i, p in enumerate(lam, start=1):
        if p == i + j:
            return i
        if p < i + j:
            return None
    return None


def has_j_fixed_point(lam: Iterable[int], j: int) -> bool:
    return j_fixed_point(lam, j) is not None


def fixed_point(lam: Partition) -> Optional[int]:
    return j_fixed_point(lam, 0)


def is_all_ones(lam: Partition) -> bool:
    return lam[0] == 1


# ---------------------------------------------------------------------------
# enumeration

def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in decreasing lexicographic order.

    >>> [tuple(p) for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise PartitionError(f"invalid n: {n!r}")
    # iterative: a is the current partition, walk to the lexicographic successor
    a = [n]
    while True:
        yield Partition._trusted(a)
        # strip trailing ones, collect them with the last non-one part
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        last = a.pop() - 1
        rem = ones + 1
        a.append(last)
        while rem > last:
            a.append(last)
            rem -= last
        if rem:
            a.append(rem)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Cached tuple of :func:`enumerate_partitions` output."""
    return tuple(enumerate_partitions(n))


# ---------------------------------------------------------------------------
# classes

class ClassTag(str, enum.Enum):
    X_e = "X_e"
    X_o = "X_o"
    F = "F"
    Fstar = "Fstar"
    G = "G"
    G1 = "G1"
    M_neg = "M_neg"
    M_pos = "M_pos"
    M_nonneg = "M_nonneg"
    M_nonpos = "M_nonpos"
    M_zero = "M_zero"
    P = "P"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PartitionClassId:
    tag: ClassTag
    beta_filter: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "tag", ClassTag(self.tag))
        if self.beta_filter is not None and self.beta_filter < 0:
            raise ValueError("beta_filter must be nonnegative")


def fstar_beta(lam: Partition) -> int:
    """The refinement index under which ``lam`` is filed in F*.

    ``1^n`` is filed at 1 rather than 0; everything else at ``beta``.
    """
    return 1 if is_all_ones(lam) else beta(lam)


_PREDICATES = {
    ClassTag.X_e: lambda lam: mex(lam) % 2 == 0,
    ClassTag.X_o: lambda lam: mex(lam) % 2 == 1,
    ClassTag.F: lambda lam: fixed_point(lam) is not None,
    ClassTag.Fstar: lambda lam: fixed_point(lam) is not None,
    ClassTag.G: lambda lam: fixed_point(lam) is None,
    ClassTag.G1: lambda lam: not has_j_fixed_point(lam, 1),
    ClassTag.M_neg: lambda lam: crank(lam) < 0,
    ClassTag.M_pos: lambda lam: crank(lam) > 0,
    ClassTag.M_nonneg: lambda lam: crank(lam) >= 0,
    ClassTag.M_nonpos: lambda lam: crank(lam) <= 0,
    ClassTag.M_zero: lambda lam: crank(lam) == 0,
    ClassTag.P: lambda lam: True,
}


def class_beta(lam: Partition, tag: ClassTag) -> int:
    """The ``k`` under which ``lam`` is counted for class ``tag``."""
    return fstar_beta(lam) if tag is ClassTag.Fstar else beta(lam)


def member(lam: Partition, c: PartitionClassId | ClassTag | str) -> bool:
    if not isinstance(c, PartitionClassId):
        c = PartitionClassId(ClassTag(c))
    if not _PREDICATES[c.tag](lam):
        return False
    return c.beta_filter is None or class_beta(lam, c.tag) == c.beta_filter


def members(n: int, c: PartitionClassId | ClassTag | str) -> list[Partition]:
    """All partitions of ``n`` in class ``c``, in enumeration order."""
    return [lam for lam in partitions_of(n) if member(lam, c)]


@dataclass
class CountTable:
    n: int
    rows: dict[tuple[ClassTag, int], int] = field(default_factory=dict)

    def get(self, tag: ClassTag | str, k: Optional[int] = None) -> int:
        tag = ClassTag(tag)
        if k is None:
            return sum(v for (t, _), v in self.rows.items() if t is tag)
        return self.rows.get((tag, k), 0)

    def by_k(self, tag: ClassTag | str) -> dict[int, int]:
        tag = ClassTag(tag)
        return {k: v for (t, k), v in sorted(self.rows.items()) if t is tag}


def count_classes(n: int, classes: Iterable[ClassTag | str | PartitionClassId] = tuple(ClassTag)) -> CountTable:
    """Exact class sizes refined by ``k``, from one pass over the partitions of ``n``."""
    tags = []
    for c in classes:
        tag = c.tag if isinstance(c, PartitionClassId) else ClassTag(c)
        if tag not in tags:
            tags.append(tag)
    counts: Counter = Counter()
    for lam in partitions_of(n):
        for tag in tags:
            if _PREDICATES[tag](lam):
                counts[(tag, class_beta(lam, tag))] += 1
    return CountTable(n, dict(counts))

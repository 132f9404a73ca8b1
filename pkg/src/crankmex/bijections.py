"""The three bijections behind the refined even-mex / fixed-point / crank theorem.

* even mex  ->  fixed point      (Konan's iterative map, then the G1 insertion)
* fixed point  <->  negative crank
* negative crank  <->  positive crank

Each forward map shifts ``beta`` (parts greater than one) exactly as the
count identity ``x_e(n,k) = f*(n,k+1) = m_<0(n,k) = m_>0(n,k+1)`` demands.
The all-ones partition is the special row of the F* convention and is
handled by explicit branches.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .partitions import (
    Partition,
    beta,
    crank,
    durfee,
    fixed_point,
    format_partition,
    is_all_ones,
    j_fixed_point,
    mex,
    mu,
    omega,
    partitions_of,
)


class DomainError(ValueError):
    """Input partition lies outside the map's domain class."""


class InternalError(RuntimeError):
    """A guaranteed property failed; always a bug."""


RULE_LABELS = (
    "split",
    "rule-i",
    "rule-ii",
    "insert",
    "fp-to-ones",
    "ones-to-part",
    "crank-neg-to-pos",
    "crank-pos-to-neg",
)

Kappa = tuple  # nonincreasing tuple of positive ints, possibly empty


@dataclass(frozen=True)
class TraceStep:
    """One state of a bijection trace.

    Konan states carry the staircase parameter ``j`` and the remainder
    ``kappa``; the staircase itself is ``(2j+1, 2j, ..., 1)``.  Other maps
    record a bare partition and leave ``j`` as None.
    """

    rule: str
    state: Kappa
    j: Optional[int] = None

    def staircase(self) -> Kappa:
        if self.j is None:
            return ()
        return tuple(range(2 * self.j + 1, 0, -1))

    def size(self) -> int:
        return sum(self.staircase()) + sum(self.state)

    def full_beta(self) -> int:
        """Parts greater than one across staircase and state."""
        return sum(1 for p in self.staircase() + tuple(self.state) if p > 1)

    def render(self) -> str:
        if self.j is None:
            return format_partition(self.state)
        return f"({format_partition(self.staircase())}, {format_partition(self.state)})"

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "state": list(self.state)}
        if self.j is not None:
            d["j"] = self.j
        return d


@dataclass
class BijectionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def add(self, rule: str, state, j: Optional[int] = None) -> None:
        assert rule in RULE_LABELS, rule
        self.steps.append(TraceStep(rule, tuple(state), j))

    def extend(self, other: "BijectionTrace") -> None:
        self.steps.extend(other.steps)

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def konan_rules(self) -> list[str]:
        """The ``(i)``/``(ii)`` labels applied, in order."""
        return [{"rule-i": "i", "rule-ii": "ii"}[s.rule] for s in self.steps if s.rule in ("rule-i", "rule-ii")]

    def konan_steps(self) -> list[TraceStep]:
        return [s for s in self.steps if s.j is not None]

    def render(self) -> str:
        return "\n".join(f"{s.rule:>16}: {s.render()}" for s in self.steps)

    def to_list(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]


def _sorted(parts) -> Kappa:
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


# ---------------------------------------------------------------------------
# even mex -> fixed point

def split_staircase(lam: Partition) -> tuple[int, Kappa]:
    """Write ``lam`` (even mex ``2j+2``) as ``(2j+1, ..., 1) ∪ kappa``."""
    m = mex(lam)
    if m % 2:
        raise DomainError(f"not in X_e: mex {m} is odd")
    j = (m - 2) // 2
    rest = list(lam)
    for p in range(1, 2 * j + 2):
        rest.remove(p)
    return j, tuple(rest)


def rule_i(kappa: Kappa, j: int, i: int) -> Kappa:
    """Apply rule (i) at the ``(2j+1)``-fixed point index ``i`` (1-based)."""
    head = [p + 1 for p in kappa[: i - 1]]
    return _sorted(head + [2 * j + 2] + list(kappa[i:]))


def rule_ii(kappa: Kappa, j: int) -> Kappa:
    """Apply rule (ii); the staircase shrinks from ``2j+1`` to ``2j-1``."""
    if j < 1:
        raise InternalError("rule (ii) is unreachable at j = 0")
    d = durfee(kappa, 2 * j + 1)
    head = [p - 1 for p in kappa[:d]]
    return _sorted(head + [d + 2 * j + 1, 2 * j] + list(kappa[d:]))


def konan_reduce(lam: Partition) -> tuple[Partition, BijectionTrace]:
    """Iterate rules (i)/(ii) until the state is ``(1) ∪ mu`` with mu in G1(n-1).

    Returns ``mu`` and the trace.  ``beta(mu) == beta(lam)``.
    """
    lam = Partition(lam)
    if lam.n < 2:
        raise DomainError("konan_reduce needs n >= 2")
    j, kappa = split_staircase(lam)
    trace = BijectionTrace()
    trace.add("split", kappa, j)
    for _ in range(2 * lam.n + 1):
        i = j_fixed_point(kappa, 2 * j + 1)
        if i is not None:
            kappa = rule_i(kappa, j, i)
            trace.add("rule-i", kappa, j)
        elif j > 0:
            kappa = rule_ii(kappa, j)
            j -= 1
            trace.add("rule-ii", kappa, j)
        else:
            return Partition._trusted(kappa), trace
    raise InternalError(f"konan_reduce did not terminate on {lam!r}")


def g1_insert(mu_: Partition) -> Partition:
    """Map ``(1) × G1(n-1)`` into ``F(n)``.

    With ``d = d_1(mu)`` the first ``d`` parts drop by one and a part
    ``d+1`` is inserted, which becomes the fixed point.  ``1^(n-1)`` goes
    to ``1^n``.
    """
    mu_ = Partition(mu_)
    if j_fixed_point(mu_, 1) is not None:
        raise DomainError("not in G1: has a 1-fixed point")
    d = durfee(mu_, 1)
    if d == 0:
        return Partition._trusted((1,) * (mu_.n + 1))
    return Partition(_sorted([p - 1 for p in mu_[:d]] + [d + 1] + list(mu_[d:])))


def even_mex_to_fixed_point(lam: Partition) -> tuple[Partition, BijectionTrace]:
    """X_e(n,k) -> F*(n,k+1): Konan reduction followed by the G1 insertion."""
    lam = Partition(lam)
    if mex(lam) % 2:
        raise DomainError(f"not in X_e: mex {mex(lam)} is odd")
    if lam.n == 1:
        trace = BijectionTrace()
        trace.add("split", (), 0)
        trace.add("insert", lam)
        return lam, trace
    mu_, trace = konan_reduce(lam)
    image = g1_insert(mu_)
    trace.add("insert", image)
    return image, trace


@lru_cache(maxsize=None)
def _even_mex_inverse_table(n: int) -> dict[Partition, Partition]:
    table = {}
    for lam in partitions_of(n):
        if mex(lam) % 2 == 0:
            image, _ = even_mex_to_fixed_point(lam)
            if image in table:
                raise InternalError(f"even-mex map not injective at n={n}: {image!r}")
            table[image] = lam
    return table


def fixed_point_to_fixed_point_inverse(phi: Partition) -> Partition:
    """Inverse of :func:`even_mex_to_fixed_point`, by forward-image tabulation."""
    phi = Partition(phi)
    try:
        return _even_mex_inverse_table(phi.n)[phi]
    except KeyError:
        raise DomainError("not in F*: no fixed point") from None


# ---------------------------------------------------------------------------
# fixed point <-> negative crank

def fixed_to_negcrank(lam: Partition) -> Partition:
    """F(n,k+1) -> M_<0(n,k): replace the fixed-point part ``i`` by ``i`` ones.

    ``1^n`` is the special F* row and maps to itself.
    """
    lam = Partition(lam)
    i = fixed_point(lam)
    if i is None:
        raise DomainError("not in F: no fixed point")
    if is_all_ones(lam):
        return lam
    if beta(lam) < 2:
        raise DomainError("degenerate class, use F* convention")
    parts = list(lam)
    del parts[i - 1]
    return Partition._trusted(parts + [1] * i)


def negcrank_to_fixed(kappa: Partition) -> Partition:
    """M_<0(n,k) -> F(n,k+1), inverse of :func:`fixed_to_negcrank`.

    With a fixed point ``i``, ``i`` ones merge into a part ``i``; otherwise
    ``d+1`` ones merge into a part ``d+1`` where ``d`` is the Durfee size.
    """
    kappa = Partition(kappa)
    if crank(kappa) >= 0:
        raise DomainError("not in M_{<0}: crank is nonnegative")
    if is_all_ones(kappa):
        return kappa
    i = fixed_point(kappa)
    size = i if i is not None else durfee(kappa, 0) + 1
    if omega(kappa) < size:
        raise InternalError(f"too few ones to merge in {kappa!r}")
    parts = list(kappa[: len(kappa) - size]) + [size]
    return Partition(parts)


# ---------------------------------------------------------------------------
# negative crank <-> positive crank

def neg_to_pos_crank(lam: Partition) -> Partition:
    """M_<0(n,k) -> M_>0(n,k+1).

    With ``w`` ones and ``m = mu(lam)``, the ``m`` parts above ``w`` each
    lose one, ``w`` becomes a part, and ``m`` ones are appended.
    """
    lam = Partition(lam)
    if crank(lam) >= 0:
        raise DomainError("not in M_{<0}: crank is nonnegative")
    if lam.n < 2:
        raise DomainError("n = 1 is excluded from the crank maps")
    w = omega(lam)
    m = mu(lam)
    big = lam[: beta(lam)]
    parts = [p - 1 for p in big[:m]] + [w] + list(big[m:]) + [1] * m
    return Partition(parts)


def pos_to_neg_crank(rho: Partition) -> Partition:
    """M_>0(n,k+1) -> M_<0(n,k), inverse of :func:`neg_to_pos_crank`."""
    rho = Partition(rho)
    if crank(rho) <= 0:
        raise DomainError("not in M_{>0}: crank is nonpositive")
    if beta(rho) == 0:
        raise InternalError("positive crank with no part above one")
    v = omega(rho)
    big = rho[: beta(rho)]
    ell = big[v]
    if ell < v + 1:
        raise InternalError(f"guard ell >= v+1 failed on {rho!r}")
    parts = [p + 1 for p in big[:v]] + list(big[v + 1:]) + [1] * ell
    return Partition(parts)


# ---------------------------------------------------------------------------



def trace_chain(lam: Partition) -> tuple[tuple[Partition, Partition, Partition, Partition], BijectionTrace]:
    """Compose all three maps: X_e -> F* -> M_<0 -> M_>0.

    Returns the four-column row and the concatenated trace.
    """
    lam = Partition(lam)
    fp, trace = even_mex_to_fixed_point(lam)
    neg = fixed_to_negcrank(fp)
    trace.add("fp-to-ones", neg)
    pos = neg_to_pos_crank(neg)
    trace.add("crank-neg-to-pos", pos)
    return (lam, fp, neg, pos), trace

"""Exhaustive verification suites behind ``crankmex verify``.

Each suite returns a :class:`VerifyReport`; a failing report always carries
at least one counterexample.
"""
from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import bijections as bj
from . import identities as ids
from .partitions import (
    ClassTag,
    Partition,
    beta,
    count_classes,
    crank,
    durfee,
    fixed_point,
    format_partition,
    fstar_beta,
    member,
    omega,
    partitions_of,
)

SUITES = ("theorem1", "bijections", "gf", "identities", "crank-gf", "section4")
MAX_COUNTEREXAMPLES = 50
IDENTITY_QMAX = 60


def default_nmax() -> int:
    env = os.environ.get("CRANKMEX_BUDGET")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"CRANKMEX_BUDGET must be an integer, got {env!r}") from None
        if value < 2:
            raise ValueError("CRANKMEX_BUDGET must be at least 2")
        return value
    return 28


@dataclass
class VerifyReport:
    suite: str
    parameters: dict
    passed: bool = True
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0
    checks: int = 0

    def check(self, ok: bool, counterexample) -> bool:
        self.checks += 1
        if not ok:
            self.passed = False
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(counterexample)
        return ok

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": "pass" if self.passed else "fail",
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def render(self, timing: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        head = f"[{status}] {self.suite} ({params}): {self.checks} checks"
        if timing:
            head += f" in {self.elapsed:.2f}s"
        lines = [head]
        lines += [f"    note: {n}" for n in self.notes]
        lines += [f"    counterexample: {c}" for c in self.counterexamples]
        return "\n".join(lines)


def _p(lam) -> str:
    return format_partition(lam)


# ---------------------------------------------------------------------------

def verify_theorem1(nmax: int) -> VerifyReport:
    """Refined count identity plus the statistic lemmas, by enumeration."""
    rep = VerifyReport("theorem1", {"nmax": nmax})
    for n in range(1, nmax + 1):
        for lam in partitions_of(n):
            t, w = len(lam), omega(lam)
            rep.check(beta(lam) == t - w, f"beta != t - omega at {_p(lam)}")
            fixed = [i for i in range(1, t + 1) if lam[i - 1] == i]
            rep.check(len(fixed) <= 1, f"two fixed points in {_p(lam)}")
            i = fixed_point(lam)
            d = durfee(lam, 0)
            if i is not None:
                rep.check(d == i, f"fixed point {i} but Durfee size {d} in {_p(lam)}")
                if crank(lam) < 0:
                    rep.check(w >= i, f"negative crank, fixed point {i}, omega {w} in {_p(lam)}")
            else:
                if d >= 1:
                    rep.check(lam[d - 1] > d, f"no fixed point yet lambda_d = d in {_p(lam)}")
                if crank(lam) < 0:
                    rep.check(w >= d + 1, f"negative crank, no fixed point, omega {w} < d+1 in {_p(lam)}")
        if n < 2:
            continue
        table = count_classes(n)
        for k in range(n + 1):
            row = (
                table.get(ClassTag.X_e, k),
                table.get(ClassTag.Fstar, k + 1),
                table.get(ClassTag.M_neg, k),
                table.get(ClassTag.M_pos, k + 1),
            )
            rep.check(len(set(row)) == 1, f"n={n} k={k}: x_e, f*, m_<0, m_>0 = {row}")
            rep.check(
                table.get(ClassTag.X_o, k) == table.get(ClassTag.M_nonneg, k),
                f"n={n} k={k}: x_o != m_>=0",
            )
        rep.check(table.get(ClassTag.X_o) == table.get(ClassTag.M_nonneg), f"n={n}: crank-mex x_o != m_>=0")
        totals = (table.get(ClassTag.X_e), table.get(ClassTag.F), table.get(ClassTag.M_neg), table.get(ClassTag.M_pos))
        rep.check(len(set(totals)) == 1, f"n={n}: x_e, f, m_<0, m_>0 = {totals}")
    return rep


def _check_konan_trace(rep: VerifyReport, lam: Partition, trace: bj.BijectionTrace) -> None:
    steps = trace.konan_steps()
    n = lam.n
    for s in steps:
        rep.check(s.size() == n, f"trace of {_p(lam)} changes size at {s.render()}")
        rep.check(s.full_beta() == beta(lam), f"trace of {_p(lam)} changes beta at {s.render()}")
    for prev, cur in zip(steps, steps[1:]):
        if cur.rule == "rule-i":
            ok = cur.j == prev.j and bj.rule_i(prev.state, prev.j, bj.j_fixed_point(prev.state, 2 * prev.j + 1)) == cur.state
        else:
            ok = cur.j == prev.j - 1 and bj.rule_ii(prev.state, prev.j) == cur.state
        rep.check(ok, f"trace of {_p(lam)}: {cur.rule} step not a single rule application")


def verify_bijections(nmax: int) -> VerifyReport:
    rep = VerifyReport("bijections", {"nmax": nmax})
    for n in range(2, nmax + 1):
        parts = partitions_of(n)
        fstar = {lam for lam in parts if member(lam, ClassTag.Fstar)}
        neg = {lam for lam in parts if crank(lam) < 0}
        pos = {lam for lam in parts if crank(lam) > 0}

        # even mex -> F*
        images = {}
        for lam in parts:
            if member(lam, ClassTag.X_e):
                img, trace = bj.even_mex_to_fixed_point(lam)
                _check_konan_trace(rep, lam, trace)
                mu_ = trace.konan_steps()[-1].state
                rep.check(bj.j_fixed_point(mu_, 1) is None, f"{_p(lam)}: Konan output has a 1-fixed point")
                rep.check(img in fstar, f"{_p(lam)} -> {_p(img)} not in F*")
                rep.check(
                    fstar_beta(img) == beta(lam) + 1,
                    f"{_p(lam)} -> {_p(img)}: k shift wrong",
                )
                rep.check(img not in images, f"{_p(lam)} and {_p(images.get(img, ()))} share image {_p(img)}")
                images[img] = lam
                rep.check(bj.fixed_point_to_fixed_point_inverse(img) == lam, f"inverse fails at {_p(img)}")
        rep.check(set(images) == fstar, f"n={n}: even-mex image is not all of F*")

        # F* <-> M_<0
        seen = set()
        for phi in (lam for lam in parts if lam in fstar):
            kappa = bj.fixed_to_negcrank(phi)
            rep.check(kappa in neg, f"{_p(phi)} -> {_p(kappa)} crank not negative")
            rep.check(fstar_beta(phi) == beta(kappa) + 1, f"{_p(phi)} -> {_p(kappa)}: k shift wrong")
            rep.check(bj.negcrank_to_fixed(kappa) == phi, f"negcrank_to_fixed does not invert at {_p(phi)}")
            seen.add(kappa)
        rep.check(seen == neg, f"n={n}: F* -> M_<0 not onto")
        for kappa in (lam for lam in parts if lam in neg):
            rep.check(bj.fixed_to_negcrank(bj.negcrank_to_fixed(kappa)) == kappa, f"round trip fails at {_p(kappa)}")

        # M_<0 <-> M_>0
        seen = set()
        for lam in (p for p in parts if p in neg):
            rho = bj.neg_to_pos_crank(lam)
            rep.check(rho in pos, f"{_p(lam)} -> {_p(rho)} crank not positive")
            rep.check(beta(rho) == beta(lam) + 1, f"{_p(lam)} -> {_p(rho)}: beta shift wrong")
            rep.check(bj.pos_to_neg_crank(rho) == lam, f"pos_to_neg does not invert at {_p(lam)}")
            seen.add(rho)
        rep.check(seen == pos, f"n={n}: M_<0 -> M_>0 not onto")
        for rho in (lam for lam in parts if lam in pos):
            rep.check(bj.neg_to_pos_crank(bj.pos_to_neg_crank(rho)) == rho, f"round trip fails at {_p(rho)}")

    if nmax >= 8:
        lam = Partition([5, 1, 1, 1])
        img = bj.neg_to_pos_crank(lam)
        rep.check(
            crank(lam) == -2 and img == Partition([4, 3, 1]) and crank(img) == 1,
            f"non-negation witness: {_p(lam)} -> {_p(img)} with crank {crank(img)}",
        )
        rep.notes.append(f"crank-negation fails: {_p(lam)} (crank -2) -> {_p(img)} (crank {crank(img)})")
    if nmax >= 7:
        _check_plus_minus_one(rep)
    return rep


def _check_plus_minus_one(rep: VerifyReport) -> None:
    minus = sorted((lam for lam in partitions_of(7) if crank(lam) == -1), reverse=True)
    plus = sorted((lam for lam in partitions_of(7) if crank(lam) == 1), reverse=True)
    rep.check(minus == [(5, 1, 1), (3, 2, 1, 1)], f"crank -1 partitions of 7: {[_p(p) for p in minus]}")
    rep.check(plus == [(4, 2, 1), (3, 3, 1)], f"crank +1 partitions of 7: {[_p(p) for p in plus]}")
    betas = (sorted(beta(p) for p in minus), sorted(beta(p) for p in plus))
    rep.check(betas == ([1, 2], [2, 2]), f"beta values at crank -1/+1 for n=7: {betas}")
    rep.notes.append("n=7: crank -1 betas [1, 2] vs crank +1 betas [2, 2]; no beta-shifting crank negation")


def verify_gf(nmax: int, qmax: int, zmax: int) -> VerifyReport:
    rep = VerifyReport("gf", {"nmax": nmax, "qmax": qmax, "zmax": zmax})
    e = ids.e_series(qmax, zmax)
    ze = e.shift(0, 1)
    series = {
        ClassTag.X_e: ids.gf_even_mex_direct(qmax, zmax),
        ClassTag.Fstar: ids.gf_fixed_point_direct(qmax, zmax),
        ClassTag.M_neg: ids.gf_neg_crank_direct(qmax, zmax),
        ClassTag.M_pos: ids.gf_pos_crank_direct(qmax, zmax),
    }
    targets = {ClassTag.X_e: e, ClassTag.M_neg: e, ClassTag.Fstar: ze, ClassTag.M_pos: ze}
    for tag, s in series.items():
        diffs = s.differences(targets[tag])
        rep.check(not diffs, f"{tag} series differs from {'E' if targets[tag] is e else 'zE'}: {diffs[:5]}")
    top = min(nmax, qmax)
    for tag, s in series.items():
        r = ids.gf_vs_enumeration(tag, top, zmax, series=s)
        rep.check(r.passed, f"{tag} series vs enumeration: {r.mismatches[:5]}")
        if tag is ClassTag.M_pos:
            rep.check(r.anomalies == [(1, 1, 0, 1)], f"positive-crank n=1 anomaly is {r.anomalies}")
            rep.notes.append("positive-crank series has z q at n=1 although (1) has crank -1 (expected)")
    return rep


def verify_identities(qmax: int, zmax: int) -> VerifyReport:
    rep = VerifyReport("identities", {"qmax": qmax, "zmax": zmax, "identity_qmax": IDENTITY_QMAX})
    rep.check(ids.aux_zero_identity_check(qmax, zmax), "auxiliary zero identity fails")
    rep.check(ids.dgoal_rewritten_check(qmax, zmax), "rewritten positive-crank goal fails")
    for N in range(1, 9):
        rep.check(ids.coeff_zN_identity_check(N, IDENTITY_QMAX), f"z^{N} coefficient identity fails")
    for N in range(1, 13):
        for M in range(N):
            rep.check(ids.lemma3_check(N, M), f"alternating q-binomial sum fails at N={N}, M={M}")
        rep.check(ids.qbt_check(N), f"q-binomial theorem step fails at N={N}")
    # mutations must be caught
    rep.check(not ids.aux_zero_identity_check(qmax, zmax, corrupt=(qmax // 2, min(2, zmax))), "mutation missed: aux")
    rep.check(not ids.dgoal_rewritten_check(qmax, zmax, lhs_start=2), "mutation missed: (zq;q)_n -> (zq^2;q)_n")
    rep.check(not ids.dgoal_rewritten_check(qmax, zmax, corrupt=(qmax, zmax)), "mutation missed: dgoal coefficient")
    rep.check(not ids.coeff_zN_identity_check(3, IDENTITY_QMAX, corrupt=10), "mutation missed: z^N coefficient")
    rep.check(not ids.lemma3_check(6, 3, corrupt=4), "mutation missed: alternating sum")
    rep.check(not ids.qbt_check(5, corrupt=-3), "mutation missed: q-binomial theorem")
    return rep


def verify_crank_gf(nmax: int, qmax: int) -> VerifyReport:
    rep = VerifyReport("crank-gf", {"nmax": nmax, "qmax": qmax})
    c = ids.gf_crank_trivariate(qmax)
    rep.check(c.row(1) == {-1: 1, 0: -1, 1: 1}, f"n=1 row is {c.row(1)}, expected y^-1 - 1 + y")
    for a in range(qmax + 1):
        row = c.row(a)
        rep.check(all(abs(k) <= a for k in row), f"q^{a} carries a y-exponent beyond {a}")
    for n in range(2, min(nmax, qmax) + 1):
        dist = Counter(crank(lam) for lam in partitions_of(n))
        rep.check(c.row(n) == dict(dist), f"crank distribution differs at n={n}")
        rep.check(sum(c.row(n).values()) == len(partitions_of(n)), f"total count differs at n={n}")
        negs = sum(v for k, v in c.row(n).items() if k < 0)
        rep.check(negs == count_classes(n, [ClassTag.M_neg]).get(ClassTag.M_neg), f"negative part differs at n={n}")
    if qmax >= 7:
        rep.check(c[7, -1] == 2 and c[7, 1] == 2, f"n=7 crank +-1 coefficients {c[7, -1]}, {c[7, 1]}")
    return rep


def beta_multiset(lams) -> list[int]:
    return sorted(beta(lam) for lam in lams)


def verify_section4(nmax: int) -> VerifyReport:
    rep = VerifyReport("section4", {"nmax": nmax})
    p5 = partitions_of(5)
    xo5 = [lam for lam in p5 if member(lam, ClassTag.X_o)]
    g5 = [lam for lam in p5 if member(lam, ClassTag.G)]
    rep.check(sorted(xo5) == sorted(map(Partition, [(5,), (3, 2), (2, 2, 1), (2, 1, 1, 1)])), f"X_o(5) = {xo5}")
    rep.check(sorted(g5) == sorted(map(Partition, [(5,), (4, 1), (3, 1, 1), (2, 1, 1, 1)])), f"G(5) = {g5}")
    rep.check(beta_multiset(xo5) == [1, 1, 2, 2], f"beta(X_o(5)) = {beta_multiset(xo5)}")
    rep.check(beta_multiset(g5) == [1, 1, 1, 1], f"beta(G(5)) = {beta_multiset(g5)}")
    le5 = [lam for lam in p5 if crank(lam) <= 0]
    ge5 = [lam for lam in p5 if crank(lam) >= 0]
    rep.check(sorted(le5) == sorted(map(Partition, [(4, 1), (3, 1, 1), (2, 1, 1, 1), (1,) * 5])), f"M_<=0(5) = {le5}")
    rep.check(sorted(ge5) == sorted(map(Partition, [(5,), (4, 1), (3, 2), (2, 2, 1)])), f"M_>=0(5) = {ge5}")
    rep.check(beta_multiset(le5) == [0, 1, 1, 1], f"beta(M_<=0(5)) = {beta_multiset(le5)}")
    rep.check(beta_multiset(ge5) == [1, 1, 2, 2], f"beta(M_>=0(5)) = {beta_multiset(ge5)}")
    rep.notes.append("n=5: X_o betas {1,2,2,1} vs G betas {1,1,1,1}; M_<=0 betas {1,1,1,0} vs M_>=0 betas {1,1,2,2}")

    witness = n26_witness()
    rep.check(witness["m_zero_even"], f"m_0(26) = {witness['m_zero']} is odd")
    rep.check(bool(witness["witness_k"]), "no k with m_<=0(26,k) != m_>=0(26,k+1)")
    rep.notes.append(
        f"n=26: m_0 = {witness['m_zero']} (even); m_<=0(26,k) != m_>=0(26,k+1) at k = {witness['witness_k']}"
    )
    cmp = g_vs_nonpos_crank(nmax)
    rep.check(not cmp["corrected_failures"], f"g vs m_<=0 with (n) <-> 1^n exchanged: {cmp['corrected_failures'][:5]}")
    if cmp["literal_mismatches"]:
        ks = sorted({k for _, k in cmp["literal_mismatches"]})
        rep.notes.append(
            f"g(n,k) = m_<=0(n,k) holds literally only for k >= 2; it fails at k in {ks} for "
            f"{len(cmp['literal_mismatches'])} (n,k) pairs, n <= {nmax}, because (n) lies in G(n,1) "
            f"while 1^n lies in M_<=0(n,0); with that one row exchanged the equality holds for 2 <= n <= {nmax}"
        )
    return rep


def g_vs_nonpos_crank(nmax: int) -> dict:
    """Compare no-fixed-point counts with nonpositive-crank counts, refined by beta.

    ``literal_mismatches`` lists every ``(n, k)`` with ``g(n,k) != m_<=0(n,k)``
    for ``1 <= n <= nmax``.  ``corrected_failures`` lists ``(n, k)`` for
    ``n >= 2`` where the counts disagree after moving ``1^n`` from ``k = 0``
    to ``k = 1`` (it pairs with ``(n)``, the analogue of the F* row).
    """
    literal, corrected = [], []
    for n in range(1, nmax + 1):
        t = count_classes(n, [ClassTag.G, ClassTag.M_nonpos])
        for k in range(n + 1):
            g, m = t.get(ClassTag.G, k), t.get(ClassTag.M_nonpos, k)
            if g != m:
                literal.append((n, k))
            if n >= 2:
                shifted = m - (k == 0) + (k == 1)
                if g != shifted:
                    corrected.append((n, k))
    return {"literal_mismatches": literal, "corrected_failures": corrected}


def n26_witness(n: int = 26) -> dict:
    t = count_classes(n, [ClassTag.M_nonpos, ClassTag.M_nonneg, ClassTag.M_zero])
    m_zero = t.get(ClassTag.M_zero)
    ks = [k for k in range(n + 1) if t.get(ClassTag.M_nonpos, k) != t.get(ClassTag.M_nonneg, k + 1)]
    return {"n": n, "m_zero": m_zero, "m_zero_even": m_zero % 2 == 0, "witness_k": ks}


# ---------------------------------------------------------------------------

def run_suite(suite: str, nmax: int, qmax: int = ids.DEFAULT_QMAX, zmax: int = ids.DEFAULT_ZMAX) -> VerifyReport:
    runners: dict[str, Callable[[], VerifyReport]] = {
        "theorem1": lambda: verify_theorem1(nmax),
        "bijections": lambda: verify_bijections(nmax),
        "gf": lambda: verify_gf(nmax, qmax, zmax),
        "identities": lambda: verify_identities(qmax, zmax),
        "crank-gf": lambda: verify_crank_gf(nmax, qmax),
        "section4": lambda: verify_section4(nmax),
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    start = time.perf_counter()
    rep = runners[suite]()
    rep.elapsed = time.perf_counter() - start
    return rep


def run_suites(suite: str, nmax: int, qmax: int = ids.DEFAULT_QMAX, zmax: int = ids.DEFAULT_ZMAX) -> list[VerifyReport]:
    names = SUITES if suite == "all" else (suite,)
    return [run_suite(s, nmax, qmax, zmax) for s in names]

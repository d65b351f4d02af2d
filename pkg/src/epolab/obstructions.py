"""Missing-type certificates for graphs with a cut vertex.

Given a cut-vertex profile (a, b, c_1..c_k), a type lam is provably missing
when every ordering of its parts has a prefix sum inside I = [b+1, b+c] and
all parts exceed c_1.  This module builds and verifies such certificates:
the direct interval argument, the q-compressed interval argument, the
two-value (c-1/c) argument, and the exact-arithmetic selection of q for
large parameters, plus the two exhaustive parameter sweeps and the
four-leg-spider classifier.

All threshold comparisons use exact integer arithmetic (cross-multiplied
rationals, integer square roots); no floats touch a decision.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .graphs import ConnectedPartition, CutProfile, spider
from .partitions import (
    SumInterval,
    interval_partition,
    partial_sums,
    partitions_of,
    two_coin_representation,
)

CERT_KINDS = ("explicit-interval", "q-interval", "parts-c-c1", "special-b-2c-1")


@dataclass(frozen=True)
class MissingTypeCertificate:
    """Machine-checkable witness that `lam` has no connected partition.

    Valid for every connected graph whose cut-vertex profile is `profile`.
    """

    profile: CutProfile
    lam: Tuple[int, ...]
    kind: str
    q: Optional[int] = None
    x: Optional[int] = None
    y: Optional[int] = None
    verified: bool = False

    def __post_init__(self):
        if self.kind not in CERT_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if sum(self.lam) != self.profile.n:
            raise ValueError("certificate type does not sum to the profile size")
        if any(p < self.profile.c1 + 1 for p in self.lam):
            raise ValueError("certificate type has a part not exceeding c1")
        if self.kind == "q-interval":
            b, c, q = self.profile.b, self.profile.c, self.q
            if q is None or q < 1:
                raise ValueError("q-interval certificate needs q >= 1")
            if self.x != -(-(b + 1) // q) or self.y != (b + c) // q:
                raise ValueError("q-interval certificate has inconsistent x, y")
            if any(not self.x <= p <= self.y for p in self.lam):
                raise ValueError("q-interval certificate has a part outside [x, y]")

    def to_json_dict(self) -> dict:
        out = {
            "profile": {"a": self.profile.a, "b": self.profile.b, "cs": list(self.profile.cs)},
            "lambda": list(self.lam),
            "kind": self.kind,
        }
        for name in ("q", "x", "y"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val
        out["verified"] = self.verified
        return out


@dataclass(frozen=True)
class QSelectionTrace:
    """Which rule produced q for (b, c), with the case-4 division internals."""

    b: int
    c: int
    case: int
    q: int
    x: int
    y: int
    internals: Optional[dict] = None


def obstruction_interval(profile: CutProfile) -> SumInterval:
    """The prefix-sum window [b+1, b+c] forced by the cut vertex."""
    return SumInterval(profile.b + 1, profile.b + profile.c)


def check_partsums_obstruction(lam, profile: CutProfile) -> bool:
    """True iff all parts exceed c1 and every ordering hits [b+1, b+c].

    Searches for an ordering that avoids the window, pruning any prefix whose
    running sum lands inside it and memoizing on the remaining multiset.
    """
    parts = tuple(sorted(lam, reverse=True))
    if sum(parts) != profile.n:
        raise ValueError(f"type {parts} does not sum to profile size {profile.n}")
    if any(p < profile.c1 + 1 for p in parts):
        return False
    lo, hi = profile.b + 1, profile.b + profile.c
    total = profile.n
    values = sorted(set(parts))
    counts = Counter(parts)
    start = tuple(counts[v] for v in values)

    # The prefix sum is a function of the remaining multiset, so this is
    # plain reachability over count vectors.  Any state whose sum has passed
    # the window, or that has run out of parts, is an avoiding ordering.
    todo = [start]
    seen = {start}
    while todo:
        state = todo.pop()
        acc = total - sum(v * m for v, m in zip(values, state))
        if acc > hi or not any(state):
            return False
        for i, mult in enumerate(state):
            if not mult:
                continue
            s = acc + values[i]
            if s != total and lo <= s <= hi:
                continue
            nxt = state[:i] + (mult - 1,) + state[i + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return True


def q_interval(b: int, c: int, q: int) -> Optional[SumInterval]:
    """[ceil((b+1)/q), floor((b+c)/q)], or None when that window is empty."""
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    x = -(-(b + 1) // q)
    y = (b + c) // q
    if x > y:
        return None
    return SumInterval(x, y)


def q_certificate_search(
    profile: CutProfile, q_max: Optional[int] = None
) -> Optional[MissingTypeCertificate]:
    """Scan q downward for a compressed interval whose sums realize n.

    Larger q gives wider relative windows, so the scan starts at floor(b/c1),
    the largest q with ceil((b+1)/q) >= c1+1, and the first q whose interval
    admits a partition of n wins.
    """
    b, c, c1, n = profile.b, profile.c, profile.c1, profile.n
    top = b // c1
    if q_max is not None:
        top = min(top, q_max)
    for q in range(top, 0, -1):
        J = q_interval(b, c, q)
        if J is None or J.lo < c1 + 1:
            continue
        lam = interval_partition(n, J)
        if lam is None:
            continue
        cert = MissingTypeCertificate(
            profile=profile,
            lam=lam.parts,
            kind="q-interval",
            q=q,
            x=J.lo,
            y=J.hi,
            verified=check_partsums_obstruction(lam.parts, profile),
        )
        if not cert.verified:
            raise RuntimeError(f"q-interval certificate failed re-verification: {cert}")
        return cert
    return None


def strategy_check(b: int, c: int, q: int) -> bool:
    """True iff q yields x >= c+1, x < y, and a window threshold within n's reach.

    The threshold condition is ceil((x-1)/(y-x)) * x <= 2b + c + 1, evaluated
    in exact integer arithmetic.
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    x = -(-(b + 1) // q)
    y = (b + c) // q
    if x < c + 1 or x >= y:
        return False
    return (-(-(x - 1) // (y - x))) * x <= 2 * b + c + 1


def analysis_q(b: int, c: int) -> QSelectionTrace:
    """Select a block count q for c >= 500, 2c <= b <= c^2/2, exactly.

    Case thresholds c^2/20, c^2/4.2, c^2/3.4 are compared via scaled integers;
    the square-root choices use the largest integer whose scaled square stays
    below the target.  The first matching case in listed order wins, and the
    chosen q is verified against all three window conditions before returning.
    """
    if c < 500:
        raise ValueError(f"need c >= 500, got {c}")
    if not (2 * c <= b and 2 * b <= c * c):
        raise ValueError(f"need 2c <= b <= c^2/2, got b={b}, c={c}")

    internals = None
    if 20 * b <= c * c:
        case, q = 1, b // c
    elif 21 * b <= 5 * c * c:  # b <= c^2/4.2
        case, q = 2, b // c
    elif 17 * b <= 5 * c * c:  # b <= c^2/3.4
        # largest q with q <= 0.46*sqrt(b), i.e. 10000*q^2 <= 2116*b
        case, q = 3, math.isqrt(2116 * b // 10000)
    else:
        # largest q0 with 3.5*q0^2 <= b, i.e. 7*q0^2 <= 2b
        q0 = math.isqrt(2 * b // 7)
        c0, r0 = divmod(b + 1, q0)
        q = q0 if 100 * r0 >= 38 * q0 else q0 - 1
        r1 = c0 - 3 * q0
        internals = {"q0": q0, "c0": c0, "r0": r0, "r1": r1, "r": r0 + r1 + 3}
        case = 4

    x = -(-(b + 1) // q)
    y = (b + c) // q
    if not (x >= c + 1 and x < y and (-(-(x - 1) // (y - x))) * x <= 2 * b + c + 1):
        raise RuntimeError(f"selected q={q} fails verification for b={b}, c={c} (case {case})")
    return QSelectionTrace(b=b, c=c, case=case, q=q, x=x, y=y, internals=internals)


def _special_b3c2_type(n: int) -> tuple:
    """All 2s when n is even, a single leading 3 otherwise (b=3, c=2 case)."""
    if n % 2 == 0:
        return (2,) * (n // 2)
    return (3,) + (2,) * ((n - 3) // 2)


def theorem_decide(profile: CutProfile) -> Optional[MissingTypeCertificate]:
    """Dispatch the four obstruction arms in order; None if none applies.

    Arms: (1) b <= 2c-2 takes the window itself as the part range;
    (2) b = 2c-1 with c > c1 uses all 2s (c=2) or halving (q=2);
    (3) 2c <= b <= c^2/2 searches q (closed-form selection once c >= 500);
    (4) b >= c^2/2 with c >= c1+2 uses parts from {c-1, c}.
    Every certificate is re-verified against the prefix-sum criterion.
    """
    b, c, c1, n = profile.b, profile.c, profile.c1, profile.n
    if c < 2:
        return None

    cert: Optional[MissingTypeCertificate] = None
    if b <= 2 * c - 2:
        window = SumInterval(b + 1, b + c)
        lam = interval_partition(n, window)
        if lam is None:
            raise RuntimeError(f"interval witness unexpectedly absent for {profile}")
        cert = MissingTypeCertificate(
            profile=profile, lam=lam.parts, kind="explicit-interval",
            x=window.lo, y=window.hi,
        )
    elif c >= c1 + 1 and b == 2 * c - 1:
        if c == 2:
            cert = MissingTypeCertificate(
                profile=profile, lam=_special_b3c2_type(n), kind="special-b-2c-1",
            )
        else:
            q = 2
            J = q_interval(b, c, q)
            lam = interval_partition(n, J)
            if lam is None:
                raise RuntimeError(f"q=2 witness unexpectedly absent for {profile}")
            cert = MissingTypeCertificate(
                profile=profile, lam=lam.parts, kind="q-interval", q=q, x=J.lo, y=J.hi,
            )
    elif 2 * c <= b and 2 * b <= c * c:
        if c >= 500:
            trace = analysis_q(b, c)
            lam = interval_partition(n, SumInterval(trace.x, trace.y))
            if lam is None:
                raise RuntimeError(f"analysis witness unexpectedly absent for {profile}")
            cert = MissingTypeCertificate(
                profile=profile, lam=lam.parts, kind="q-interval",
                q=trace.q, x=trace.x, y=trace.y,
            )
        else:
            cert = q_certificate_search(profile)
            if cert is None:
                raise RuntimeError(f"q search unexpectedly failed for {profile}")
    elif c >= c1 + 2 and 2 * b >= c * c:
        two_coin = two_coin_representation(n, c)
        if two_coin is None:
            raise RuntimeError(f"two-coin witness unexpectedly absent for {profile}")
        a1, a2 = two_coin
        cert = MissingTypeCertificate(
            profile=profile, lam=(c,) * a1 + (c - 1,) * a2, kind="parts-c-c1",
        )

    if cert is None:
        return None
    if not check_partsums_obstruction(cert.lam, profile):
        raise RuntimeError(f"certificate failed re-verification: {cert}")
    if not cert.verified:
        cert = MissingTypeCertificate(
            profile=cert.profile, lam=cert.lam, kind=cert.kind,
            q=cert.q, x=cert.x, y=cert.y, verified=True,
        )
    return cert


def describe_inapplicability(profile: CutProfile) -> str:
    """Human-readable reasons each obstruction arm fails for this profile."""
    b, c, c1 = profile.b, profile.c, profile.c1
    if c < 2:
        return f"c = {c} < 2: no arm applies"
    reasons = []
    if b > 2 * c - 2:
        reasons.append(f"b = {b} > 2c-2 = {2 * c - 2}")
    if b != 2 * c - 1:
        reasons.append(f"b = {b} != 2c-1 = {2 * c - 1}")
    elif c < c1 + 1:
        reasons.append(f"b = 2c-1 but c = {c} < c1+1 = {c1 + 1}")
    if not (2 * c <= b and 2 * b <= c * c):
        reasons.append(f"b = {b} outside [2c, c^2/2] = [{2 * c}, {c * c / 2:g}]")
    if 2 * b < c * c:
        reasons.append(f"2b = {2 * b} < c^2 = {c * c}")
    elif c < c1 + 2:
        reasons.append(f"b >= c^2/2 but c = {c} < c1+2 = {c1 + 2}")
    return "; ".join(reasons)


# ---------------------------------------------------------------------------
# Computer sweeps


@dataclass
class SweepReport:
    kind: str
    params: dict
    cells: int
    failures: List[tuple]
    wall_time_ms: int
    per_cell: List[tuple] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "cells": self.cells,
            "failures": [list(f) for f in self.failures],
            "wall_time_ms": self.wall_time_ms,
        }


def _c40_scan_c(c: int) -> Tuple[int, List[tuple], List[tuple]]:
    """All (b, n) cells for one c: coverage by some q-compressed interval.

    For fixed (b, c) the n values realizable with block count q and t parts
    form the range [t*x, t*y]; marking those ranges over all q with x >= c+1
    decides every cell of the n-window exactly.
    """
    cells = 0
    failures: List[tuple] = []
    rows: List[tuple] = []
    for b in range(2 * c, c * c // 2 + 1):
        n_lo = 2 * b + c + 1
        n_hi = (-(-b // (c - 1))) * (b + 1)
        width = n_hi - n_lo + 1
        covered = np.zeros(width, dtype=bool)
        for q in range(b // c, 0, -1):  # q <= b/c keeps x = ceil((b+1)/q) >= c+1
            x = -(-(b + 1) // q)
            y = (b + c) // q
            if x < c + 1 or y < x:
                continue
            for t in range(max(1, -(-n_lo // y)), n_hi // x + 1):
                lo = max(t * x, n_lo)
                hi = min(t * y, n_hi)
                if lo <= hi:
                    covered[lo - n_lo : hi - n_lo + 1] = True
            if covered.all():
                break
        cells += width
        miss = np.flatnonzero(~covered)
        failures.extend((b, c, n_lo + int(i)) for i in miss)
        rows.append((c, b, n_lo, n_hi, width, len(miss)))
    return cells, failures, rows


def sweep_c40(c_lo: int = 2, c_hi: int = 40, jobs: int = 1) -> SweepReport:
    """Exhaustive (b, c, n) sweep for 2 <= c <= 40, 2c <= b <= c^2/2.

    Confirms that every n in [2b+c+1, ceil(b/(c-1))*(b+1)] admits a
    q-compressed interval certificate with x >= c+1 (so any admissible c1 is
    covered).  Expected outcome: zero failure cells.
    """
    if not 2 <= c_lo <= c_hi:
        raise ValueError(f"bad c range {c_lo}..{c_hi}")
    start = time.perf_counter()
    cs = list(range(c_lo, c_hi + 1))
    results = _run_per_c(_c40_scan_c, cs, jobs)
    cells = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    per_cell = [row for r in results for row in r[2]]
    return SweepReport(
        kind="c40",
        params={"c_lo": c_lo, "c_hi": c_hi},
        cells=cells,
        failures=failures,
        wall_time_ms=int((time.perf_counter() - start) * 1000),
        per_cell=per_cell,
    )


def _c500_scan_c(args: tuple) -> Tuple[int, List[tuple], List[tuple]]:
    c, b_stride = args
    cells = 0
    failures: List[tuple] = []
    rows: List[tuple] = []
    for b in range(2 * c, c * c // 2 + 1, b_stride):
        cells += 1
        found = 0
        for q in range(b // c, 0, -1):
            if strategy_check(b, c, q):
                found = q
                break
        if not found:
            failures.append((b, c))
        rows.append((c, b, found))
    return cells, failures, rows


def sweep_c500(c_lo: int, c_hi: int, mode: str = "full", jobs: int = 1) -> SweepReport:
    """Per-(b, c) sweep for 41 <= c <= 500: some q passes strategy_check.

    Full mode visits every pair; sampled mode walks a deterministic lattice
    (every 7th b, every 3rd c).  Expected outcome: zero failures.
    """
    if not 41 <= c_lo <= c_hi <= 500:
        raise ValueError(f"bad c range {c_lo}..{c_hi} (need 41 <= lo <= hi <= 500)")
    if mode not in ("full", "sampled"):
        raise ValueError(f"bad mode {mode!r}")
    c_stride, b_stride = (3, 7) if mode == "sampled" else (1, 1)
    start = time.perf_counter()
    cs = [(c, b_stride) for c in range(c_lo, c_hi + 1, c_stride)]
    results = _run_per_c(_c500_scan_c, cs, jobs)
    cells = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    per_cell = [row for r in results for row in r[2]]
    return SweepReport(
        kind="c500",
        params={"c_lo": c_lo, "c_hi": c_hi, "mode": mode},
        cells=cells,
        failures=failures,
        wall_time_ms=int((time.perf_counter() - start) * 1000),
        per_cell=per_cell,
    )


def _run_per_c(fn, items: list, jobs: int) -> list:
    """Map fn over independent work items, optionally across processes.

    Results come back in item order, so reports are identical for any job
    count.
    """
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# Four-leg spiders


@dataclass(frozen=True)
class Spider4Verdict:
    """Classification of a four-leg spider: always not e-positive."""

    legs: Tuple[int, ...]
    profile: CutProfile
    e_positive: bool
    method: str  # "obstruction-certificate" | "external:zheng-cor-4.6"
    certificate: Optional[MissingTypeCertificate]
    note: str


def spider4_classify(legs) -> Spider4Verdict:
    """Classify a four-leg spider as not e-positive, with the reason.

    When b <= c^2/2 the obstruction arms produce a missing-type certificate;
    otherwise n >= c^2 + c + 1 and the verdict rests on Zheng's published
    result for long-legged spiders (cited, not re-proved).
    """
    legs = tuple(sorted((int(l) for l in legs), reverse=True))
    if len(legs) != 4:
        raise ValueError(f"need exactly 4 legs, got {legs}")
    profile = CutProfile(legs[0], legs[1], legs[2:])
    b, c, n = profile.b, profile.c, profile.n
    if 2 * b <= c * c:
        cert = theorem_decide(profile)
        if cert is None:
            raise RuntimeError(f"no obstruction arm applied for 4-leg spider {legs}")
        return Spider4Verdict(
            legs=legs,
            profile=profile,
            e_positive=False,
            method="obstruction-certificate",
            certificate=cert,
            note=f"missing connected partition of type {cert.lam}",
        )
    return Spider4Verdict(
        legs=legs,
        profile=profile,
        e_positive=False,
        method="external:zheng-cor-4.6",
        certificate=None,
        note=f"n = {n} >= c^2+c+1 = {c * c + c + 1}; not e-positive by Zheng, Cor. 4.6",
    )


# ---------------------------------------------------------------------------
# Spiders S(6m, 6m-2, 1, 1): every type has a connected partition


@dataclass(frozen=True)
class SixmConstruction:
    """How a type lam is realized in S(6m, 6m-2, 1, 1)."""

    m: int
    lam: Tuple[int, ...]
    kind: str  # "rearrangement" | "exceptional-two-ones" | "exceptional-all-twos-one"
    case: str
    alpha: Optional[Tuple[int, ...]] = None


def _window_free(parts: tuple, w1: int, w2: int) -> bool:
    return not ({w1, w2} & partial_sums(parts))


def _split_at_sum(seq: tuple, target: int) -> Tuple[tuple, int, tuple]:
    """(head, mid, tail) where head sums to target and mid follows it."""
    acc = 0
    for i, p in enumerate(seq):
        if acc == target:
            return seq[:i], seq[i], seq[i + 1 :]
        acc += p
    raise RuntimeError(f"no proper prefix of {seq} sums to {target}")


def _drop_one(seq: tuple, value: int) -> tuple:
    i = seq.index(value)
    return seq[:i] + seq[i + 1 :]


def _repair_window(beta: tuple, m: int) -> Tuple[tuple, str]:
    """Reorder beta so its prefix sums skip {6m-1, 6m}.

    Assumes both the window {6m-1, 6m} and its mirror {6m+1, 6m+2} meet the
    prefix sums of beta (otherwise beta or its reverse already works), that
    beta has at most one part 1, and that it has a part >= 3.  One swap around
    the window fixes each of the four boundary patterns.
    """
    w = 6 * m
    sums = partial_sums(beta)

    if w in sums and w + 1 in sums:
        # head | 1 | tail with both halves summing 6m; move a big part onto the 1
        head, _, tail = _split_at_sum(beta, w)
        case = "one-between"
        if not any(p >= 3 for p in head):
            head, tail = tail[::-1], head[::-1]
            case = "one-between-reversed"
        big = max(p for p in head if p >= 3)
        return _drop_one(head, big) + (1, big) + tail, case

    if w in sums and w + 1 not in sums and w + 2 in sums:
        # mirror image of the pattern below; reverse and fall through
        alpha, case = _repair_window(beta[::-1], m)
        return alpha, case + "-reversed"

    if w - 1 in sums and w not in sums and w + 1 in sums:
        head, _, tail = _split_at_sum(beta, w - 1)  # the part between is a 2
        if any(p >= 3 for p in head):
            big = max(p for p in head if p >= 3)
            return _drop_one(head, big) + (2, big) + tail, "two-between"
        # head must be a single 1 plus (3m-1) 2s; pull the big part forward
        big = max(p for p in tail if p >= 3)
        return (2,) * (3 * m - 1) + (big, 1, 2) + _drop_one(tail, big), "two-between-flat"

    if w - 1 in sums and w not in sums and w + 1 not in sums and w + 2 in sums:
        head, _, tail = _split_at_sum(beta, w - 1)  # the part between is a 3
        if 1 in head:
            return _drop_one(head, 1) + (3, 1) + tail, "three-between-one"
        if any(p >= 4 for p in head):
            big = max(p for p in head if p >= 4)
            return _drop_one(head, big) + (3, big) + tail, "three-between-big"
        if 1 in tail or any(p >= 4 for p in tail):
            alpha, case = _repair_window(beta[::-1], m)
            return alpha, case + "-reversed"
        # both halves are all 2s and 3s; 6m-1 forces a 3 in front and a 2 behind
        return _drop_one(head, 3) + (2, 3, 3) + _drop_one(tail, 2), "three-between-mixed"

    raise RuntimeError(f"unreachable window pattern for {beta}")


def sixm_rearrangement(lam, m: int) -> SixmConstruction:
    """Find an ordering of lam whose prefix sums skip {6m-1, 6m}.

    Starts from the sorted ordering, tries its reverse, then applies one
    repair swap around the window.  Types with two 1s, or all 2s plus one 1,
    are flagged for the direct two-leaf construction instead.  Every returned
    ordering is checked to avoid the window and preserve the multiset.
    """
    parts = tuple(sorted(lam, reverse=True))
    n = 12 * m + 1
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if sum(parts) != n:
        raise ValueError(f"type {parts} does not sum to {n}")
    w1, w2 = 6 * m - 1, 6 * m

    if parts.count(1) >= 2:
        return SixmConstruction(m=m, lam=parts, kind="exceptional-two-ones", case="two-ones")
    if set(parts) <= {1, 2}:
        # n odd and at most one 1 leaves exactly (2,...,2,1)
        return SixmConstruction(
            m=m, lam=parts, kind="exceptional-all-twos-one", case="all-twos-one"
        )

    if _window_free(parts, w1, w2):
        alpha, case = parts, "identity"
    elif _window_free(parts[::-1], w1, w2):
        alpha, case = parts[::-1], "reversal"
    else:
        alpha, case = _repair_window(parts, m)

    if not _window_free(alpha, w1, w2):
        raise RuntimeError(f"construction failed for {parts} (case {case})")
    if tuple(sorted(alpha, reverse=True)) != parts:
        raise RuntimeError(f"construction changed the multiset for {parts}")
    return SixmConstruction(m=m, lam=parts, kind="rearrangement", case=case, alpha=alpha)


def sixm_connected_partition(rec: SixmConstruction) -> ConnectedPartition:
    """Materialize the vertex blocks on S(6m, 6m-2, 1, 1) for a construction.

    Spider labels: center 0; the long leg (6m) is 1..6m leaf-first; the short
    leg (6m-2) is 6m+1..12m-2 leaf-first; the leaf legs are 12m-1 and 12m.
    """
    m = rec.m
    long_leaf_first = list(range(1, 6 * m + 1))  # leaf ... center-adjacent
    short_leaf_first = list(range(6 * m + 1, 12 * m - 1))
    leaf_a, leaf_b = 12 * m - 1, 12 * m

    blocks: List[List[int]] = []
    if rec.kind == "exceptional-two-ones":
        lam_rest = [p for p in rec.lam if p != 1] + [1] * (rec.lam.count(1) - 2)
        blocks = [[leaf_a], [leaf_b]]
        # the rest of the spider is one path: short leg in, center, long leg out
        path = short_leaf_first + [0] + long_leaf_first[::-1]
        pos = 0
        for p in sorted(lam_rest, reverse=True):
            blocks.append(path[pos : pos + p])
            pos += p
    elif rec.kind == "exceptional-all-twos-one":
        blocks = [[leaf_a], [0, leaf_b]]
        for i in range(0, 6 * m - 2, 2):
            blocks.append(short_leaf_first[i : i + 2])
        for i in range(0, 6 * m, 2):
            blocks.append(long_leaf_first[i : i + 2])
    else:
        alpha = rec.alpha
        pre = 0
        i = 0
        while i < len(alpha) and pre + alpha[i] <= 6 * m - 2:
            pre += alpha[i]
            i += 1
        # prefix sums avoid {6m-1, 6m}, so the next prefix jumps past 6m
        pos = 0
        for j in range(i):
            blocks.append(short_leaf_first[pos : pos + alpha[j]])
            pos += alpha[j]
        middle = short_leaf_first[pos:] + [0, leaf_a, leaf_b]
        vpos = 0
        for j in range(i + 1, len(alpha)):
            blocks.append(long_leaf_first[vpos : vpos + alpha[j]])
            vpos += alpha[j]
        middle += long_leaf_first[vpos:]
        if len(middle) != alpha[i]:
            raise RuntimeError(f"middle block size mismatch for {rec}")
        blocks.append(middle)
    return ConnectedPartition(blocks)


@dataclass
class SixmReport:
    m: int
    total: int
    case_tallies: Dict[str, int]
    failures: List[tuple]
    materialized: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "total": self.total,
            "case_tallies": dict(sorted(self.case_tallies.items())),
            "failures": [list(f) for f in self.failures],
            "materialized": self.materialized,
        }


def sixm_full_check(m: int) -> SixmReport:
    """Run the construction for every type of 12m+1; materialize when m = 1.

    For m = 1 every construction is turned into actual vertex blocks on
    S(6, 4, 1, 1) and validated (disjoint, covering, connected, right sizes).
    """
    if not 1 <= m <= 3:
        raise ValueError(f"need 1 <= m <= 3, got {m}")
    n = 12 * m + 1
    G = spider((6 * m, 6 * m - 2, 1, 1)) if m == 1 else None
    tallies: Dict[str, int] = {}
    failures: List[tuple] = []
    total = 0
    materialized = 0
    for lam in partitions_of(n):
        total += 1
        try:
            rec = sixm_rearrangement(lam.parts, m)
            tallies[rec.case] = tallies.get(rec.case, 0) + 1
            if m == 1:
                cp = sixm_connected_partition(rec)
                cp.validate(G, lam.parts)
                materialized += 1
        except Exception as exc:  # a failure here would falsify the claim
            failures.append((lam.parts, repr(exc)))
    return SixmReport(
        m=m, total=total, case_tallies=tallies, failures=failures, materialized=materialized
    )

"""Proximity traces between sequence pairs and inequality audits.

For prefixes A(k), B(k) of equal length, d(k) is the running maximum of
|a_i - b_i|.  The audited two-sided bound is

    u(k) / (4 d(k) + 1)  <=  v(k)  <=  (4 d(k) + 1) u(k)

where u, v are the running representation maxima of A and B.  The running
maximum of the left-hand ratio (w below) yields simultaneous lower bounds
on both final maxima; at finite horizons it is evidence, never a verdict.

All verdicts compare rationals by integer cross-multiplication; rationals
are carried as unreduced (numerator, denominator) pairs with denominator
4 d(k) + 1.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import accumulate

from addrep.repfunc import _incremental_trace, spectrum_naive, u_trace_prefix
from addrep.sequences import SequenceSpec, materialize

EVIDENCE_NOTE = (
    "finite-horizon evidence only: these are lower bounds from the first K terms, "
    "not a determination of whether either representation maximum is finite"
)


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PairTraceRow:
    k: int
    u: int
    v: int
    d: int
    lower_num: int  # u(k), over lower_den
    lower_den: int  # 4 d(k) + 1
    upper: int      # (4 d(k) + 1) * u(k)
    w_num: int      # running max of lower, unreduced
    w_den: int


@dataclass(frozen=True)
class Counterexample:
    k: int
    side: str  # 'lower' | 'upper'


@dataclass(frozen=True)
class WindowCheckReport:
    k: int
    n: int
    pairs_checked: int                  # |F(k, n)|, ordered index couples
    offenders: tuple[tuple[int, int], ...]
    window: tuple[int, int]             # [n - 2 d(k), n + 2 d(k)]
    window_rep_total: int               # sum of |E(k, m)| over the window

    @property
    def covered(self) -> bool:
        return not self.offenders and self.window_rep_total >= self.pairs_checked


@dataclass(frozen=True)
class WRecord:
    k: int
    w_num: int
    w_den: int
    u: int
    witness_sums: tuple[int, ...]  # A-side sums attaining u(k) at horizon k


@dataclass(frozen=True)
class EvidenceReport:
    K: int
    records: tuple[WRecord, ...]
    final_w_num: int
    final_w_den: int
    final_u: int
    final_v: int
    final_d: int
    implied_lower_bound: int  # ceil(w): both representation maxima are >= this
    note: str


def d_trace(A: list[int], B: list[int]) -> list[int]:
    """Running maximum of |a_i - b_i| for i = 1..k; non-decreasing."""
    if len(A) != len(B):
        raise LengthMismatch(f"prefix lengths differ: {len(A)} vs {len(B)}")
    if not A:
        raise ValueError("need at least one term")
    out: list[int] = []
    best = 0
    for a, b in zip(A, B):
        diff = a - b if a >= b else b - a
        if diff > best:
            best = diff
        out.append(best)
    return out


def pair_trace(spec_a: SequenceSpec, spec_b: SequenceSpec, K: int,
               u: list[int] | None = None, v: list[int] | None = None) -> list[PairTraceRow]:
    """Per-horizon rows (k, u, v, d, bounds, running w) for k = 1..K.

    Precomputed traces may be passed for u and v (the parallel CLI path);
    they must equal u_trace of the respective spec.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    A = materialize(spec_a, K)
    B = materialize(spec_b, K)
    if u is None:
        u = u_trace_prefix(A)
    if v is None:
        v = u_trace_prefix(B)
    d = d_trace(A, B)
    rows: list[PairTraceRow] = []
    w_num, w_den = 0, 1
    for k in range(1, K + 1):
        num = u[k - 1]
        den = 4 * d[k - 1] + 1
        if num * w_den > w_num * den:
            w_num, w_den = num, den
        rows.append(PairTraceRow(k, u[k - 1], v[k - 1], d[k - 1],
                                 num, den, den * num, w_num, w_den))
    return rows


def verify_sandwich(spec_a: SequenceSpec, spec_b: SequenceSpec, K: int,
                    u: list[int] | None = None, v: list[int] | None = None) -> Counterexample | None:
    """Check both sides of the bound at every k <= K; None means no violation.

    A non-None return would falsify the underlying inequality or expose a
    bug in the counting engine, which is the point of running it.
    """
    for row in pair_trace(spec_a, spec_b, K, u=u, v=v):
        den = 4 * row.d + 1
        if row.u > den * row.v:
            return Counterexample(row.k, "lower")
        if row.v > den * row.u:
            return Counterexample(row.k, "upper")
    return None


def _f_couples(B: list[int], n: int) -> list[tuple[int, int]]:
    """Ordered index couples (i, j), 1-indexed, with b_i + b_j = n."""
    lo, hi = 0, len(B) - 1
    couples: list[tuple[int, int]] = []
    while lo <= hi:
        s = B[lo] + B[hi]
        if s < n:
            lo += 1
        elif s > n:
            hi -= 1
        else:
            if lo == hi:
                couples.append((lo + 1, lo + 1))
            else:
                couples.append((lo + 1, hi + 1))
                couples.append((hi + 1, lo + 1))
            lo += 1
            hi -= 1
    couples.sort()
    return couples


class _WindowSummer:
    """Sum of A-spectrum counts over integer windows, via prefix sums."""

    def __init__(self, a_spectrum: dict[int, int]):
        self.sums = sorted(a_spectrum)
        self.prefix = [0, *accumulate(a_spectrum[s] for s in self.sums)]

    def total(self, lo: int, hi: int) -> int:
        return self.prefix[bisect_right(self.sums, hi)] - self.prefix[bisect_left(self.sums, lo)]


def _window_report(A: list[int], B: list[int], n: int, d_k: int,
                   summer: _WindowSummer) -> WindowCheckReport:
    lo, hi = n - 2 * d_k, n + 2 * d_k
    offenders = []
    couples = _f_couples(B, n)
    for i, j in couples:
        m = A[i - 1] + A[j - 1]
        if not lo <= m <= hi:
            offenders.append((i, j))
    return WindowCheckReport(
        k=len(A), n=n, pairs_checked=len(couples), offenders=tuple(offenders),
        window=(lo, hi), window_rep_total=summer.total(lo, hi),
    )


def window_cover_check(A: list[int], B: list[int], n: int) -> WindowCheckReport:
    """Every couple summing to n in B must land, on the A side, inside the
    window [n - 2 d(k), n + 2 d(k)]; the report also carries the total
    A-representation mass of that window, which must cover |F(k, n)|.
    """
    if len(A) != len(B):
        raise LengthMismatch(f"prefix lengths differ: {len(A)} vs {len(B)}")
    d_k = d_trace(A, B)[-1]
    return _window_report(A, B, n, d_k, _WindowSummer(spectrum_naive(A)))


def window_cover_sweep(A: list[int], B: list[int]) -> list[WindowCheckReport]:
    """window_cover_check for every realized B-sum in one pass over couples."""
    if len(A) != len(B):
        raise LengthMismatch(f"prefix lengths differ: {len(A)} vs {len(B)}")
    d_k = d_trace(A, B)[-1]
    spread = 2 * d_k
    summer = _WindowSummer(spectrum_naive(A))
    k = len(B)
    pair_counts: dict[int, int] = {}
    offenders_at: dict[int, list[tuple[int, int]]] = {}
    for i in range(k):
        for j in range(i, k):
            n = B[i] + B[j]
            m = A[i] + A[j]
            weight = 1 if i == j else 2
            pair_counts[n] = pair_counts.get(n, 0) + weight
            if not n - spread <= m <= n + spread:
                bad = offenders_at.setdefault(n, [])
                bad.append((i + 1, j + 1))
                if i != j:
                    bad.append((j + 1, i + 1))
    return [
        WindowCheckReport(
            k=k, n=n, pairs_checked=pair_counts[n],
            offenders=tuple(sorted(offenders_at.get(n, []))),
            window=(n - spread, n + spread),
            window_rep_total=summer.total(n - spread, n + spread),
        )
        for n in sorted(pair_counts)
    ]


def _ceil_ratio(num: int, den: int) -> int:
    return -(-num // den)


def upper_class_evidence(spec_a: SequenceSpec, spec_b: SequenceSpec, K: int) -> EvidenceReport:
    """Record horizons where the running ratio u(k)/(4 d(k) + 1) sets a new
    maximum, with the sums witnessing u(k) there, and the lower bounds the
    final value implies for both representation maxima.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    A = materialize(spec_a, K)
    B = materialize(spec_b, K)
    u, u_records = _incremental_trace(A)
    v = u_trace_prefix(B)
    d = d_trace(A, B)
    witness_at = {k: tuple(sums) for k, sums in u_records}

    records: list[WRecord] = []
    w_num, w_den = 0, 1
    for k in range(1, K + 1):
        num = u[k - 1]
        den = 4 * d[k - 1] + 1
        if num * w_den > w_num * den:
            w_num, w_den = num, den
            # w can only improve where u does, so a witness set exists here
            records.append(WRecord(k, num, den, num, witness_at[k]))
    return EvidenceReport(
        K=K, records=tuple(records),
        final_w_num=w_num, final_w_den=w_den,
        final_u=u[-1], final_v=v[-1], final_d=d[-1],
        implied_lower_bound=_ceil_ratio(w_num, w_den),
        note=EVIDENCE_NOTE,
    )

"""Ordered-couple representation counts, spectra, and running maxima.

A representation of n relative to a prefix X is an ordered couple (x, y)
with x, y in X and x + y = n; (1, 4) and (4, 1) count separately, so counts
here are roughly twice the unordered convention.
"""

from __future__ import annotations

from collections import Counter

from addrep.sequences import SequenceSpec, materialize

DENSE_LIMIT = 1 << 26  # convolution path refuses prefixes with 2 * max term above this


class ThresholdExceeded(ValueError):
    pass


class EmptyPrefix(ValueError):
    pass


def rep_count(terms: list[int], n: int) -> int:
    """Number of ordered couples (x, y) from terms with x + y = n.

    Two-pointer scan over the (sorted) prefix.
    """
    lo, hi = 0, len(terms) - 1
    count = 0
    while lo <= hi:
        s = terms[lo] + terms[hi]
        if s < n:
            lo += 1
        elif s > n:
            hi -= 1
        else:
            count += 1 if lo == hi else 2
            lo += 1
            hi -= 1
    return count


def spectrum_naive(terms: list[int]) -> dict[int, int]:
    """Full table sum -> ordered-couple count; keys are exactly the sums hit.

    Quadratic accumulation over couples; total count mass is k^2.
    """
    counts: Counter[int] = Counter()
    for i, x in enumerate(terms):
        counts[2 * x] += 1
        for j in range(i + 1, len(terms)):
            counts[x + terms[j]] += 2
    return dict(counts)


def spectrum_convolution(terms: list[int]) -> dict[int, int]:
    """Same table as spectrum_naive, via squaring the indicator vector.

    Runs a real FFT over a dense array, so 2 * max term is capped at
    DENSE_LIMIT; the float transform is rounded back to integers and a
    guard rejects any result that drifted measurably from integrality
    (at these sizes the drift bound is far below 0.5, so rounding is
    exact and the output matches the naive table bit for bit).
    """
    if not terms:
        return {}
    max_term = terms[-1]
    if 2 * max_term > DENSE_LIMIT:
        raise ThresholdExceeded(f"2 * max term = {2 * max_term} exceeds {DENSE_LIMIT}")
    import numpy as np
    from scipy import fft

    indicator = np.zeros(max_term + 1, dtype=np.float64)
    indicator[np.asarray(terms, dtype=np.int64)] = 1.0
    out_len = 2 * max_term + 1
    nfft = fft.next_fast_len(out_len, real=True)
    transformed = fft.rfft(indicator, nfft)
    conv = fft.irfft(transformed * transformed, nfft)[:out_len]
    rounded = np.rint(conv)
    if float(np.max(np.abs(conv - rounded))) > 0.25:
        raise ArithmeticError("FFT convolution drifted from integrality")
    sums = np.nonzero(rounded)[0]
    return {int(s): int(rounded[s]) for s in sums}


def s_max(terms: list[int]) -> tuple[int, list[int]]:
    """Largest representation count over all sums, with every sum attaining it."""
    if not terms:
        raise EmptyPrefix("s_max needs at least one term")
    counts = spectrum_naive(terms)
    best = max(counts.values())
    return best, sorted(n for n, c in counts.items() if c == best)


def _incremental_trace(terms: list[int]) -> tuple[list[int], list[tuple[int, list[int]]]]:
    """Running maxima per horizon plus, at each horizon where the maximum
    strictly increases, the sums attaining it there.

    Adding the k-th term touches the k sums it forms with the prefix; a sum
    can only reach a fresh maximum at the step that touched it, so record
    horizons need no rescan.
    """
    counts: dict[int, int] = {}
    get = counts.get
    values: list[int] = []
    records: list[tuple[int, list[int]]] = []
    best = 0
    for k, a in enumerate(terms):
        touched_hi: list[int] = []
        old_best = best
        s = 2 * a
        c = get(s, 0) + 1
        counts[s] = c
        if c > best:
            best = c
            touched_hi = [s]
        elif c == best:
            touched_hi.append(s)
        for i in range(k):
            s = terms[i] + a
            c = get(s, 0) + 2
            counts[s] = c
            if c > best:
                best = c
                touched_hi = [s]
            elif c == best:
                touched_hi.append(s)
        if best > old_best:
            records.append((k + 1, sorted(set(touched_hi))))
        values.append(best)
    return values, records


def u_trace_prefix(terms: list[int]) -> list[int]:
    """Running maxima s(X(k)) for k = 1..len(terms), computed incrementally."""
    return _incremental_trace(terms)[0]


def u_trace(spec: SequenceSpec, K: int) -> list[int]:
    """values[k-1] = s_max(materialize(spec, k)) for k = 1..K."""
    if K < 1:
        raise ValueError("K must be >= 1")
    return u_trace_prefix(materialize(spec, K))

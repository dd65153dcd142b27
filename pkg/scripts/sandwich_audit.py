#!/usr/bin/env python3
"""Audit the two-sided proximity bound over a grid of sequence pairs.

For each pair the bound is checked at every horizon, in both operand
orders, together with the window-covering argument over every realized
B-sum. Exits nonzero if anything fails, which would mean a bug in the
counting engine rather than news about the mathematics.
"""

import argparse
import sys
import time
from fractions import Fraction

from addrep.proximity import pair_trace, verify_sandwich, window_cover_sweep
from addrep.sequences import SequenceSpec, materialize


def named_pairs():
    squares = SequenceSpec.squares()
    return [
        ("squares vs squares", squares, squares),
        ("squares vs n^2+1", squares, SequenceSpec.polynomial(1, 0, 1)),
        ("squares vs n^2+n", squares, SequenceSpec.polynomial(1, 1, 0)),
        ("squares vs n^2+3n+2", squares, SequenceSpec.polynomial(1, 3, 2)),
        ("identity vs squares", SequenceSpec.polynomial(0, 1, 0), squares),
        ("2n+1 vs 3n+2", SequenceSpec.polynomial(0, 2, 1), SequenceSpec.polynomial(0, 3, 2)),
    ]


def perturbed_pairs(count, growth_text="pow:1.0,1.0"):
    from addrep.sequences import parse_growth_spec

    squares = SequenceSpec.squares()
    g = parse_growth_spec(growth_text)
    return [
        (f"squares vs perturbed(seed={seed})", squares, SequenceSpec.perturbed_squares(g, seed))
        for seed in range(1, count + 1)
    ]


def audit(name, spec_a, spec_b, K):
    bad = verify_sandwich(spec_a, spec_b, K) or verify_sandwich(spec_b, spec_a, K)
    if bad is not None:
        print(f"  {name}: BOUND VIOLATED at k={bad.k} ({bad.side})")
        return False
    A, B = materialize(spec_a, K), materialize(spec_b, K)
    offenders = sum(len(r.offenders) for r in window_cover_sweep(A, B))
    row = pair_trace(spec_a, spec_b, K)[-1]
    w = Fraction(row.w_num, row.w_den)
    print(f"  {name:34s} u={row.u:<4d} v={row.v:<4d} d={row.d:<7d} "
          f"w={str(w):>8s} offenders={offenders}")
    return offenders == 0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-K", "--horizon", type=int, default=300)
    parser.add_argument("--perturbed", type=int, default=10, help="number of seeded pairs")
    args = parser.parse_args()

    t0 = time.time()
    pairs = named_pairs() + perturbed_pairs(args.perturbed)
    print(f"auditing {len(pairs)} pairs at K={args.horizon}")
    ok = all([audit(name, a, b, args.horizon) for name, a, b in pairs])
    print(f"done in {time.time() - t0:.1f}s: {'all clear' if ok else 'FAILURES'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

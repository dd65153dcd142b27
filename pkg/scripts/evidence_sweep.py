#!/usr/bin/env python3
"""Sweep perturbation strengths and seeds; report how the running
lower-bound ratio climbs for squares vs perturbed-squares pairs.

The interesting regime is a vanishing growth factor: the perturbation
stays within u(n)*g(n) of n^2, proximity stays small relative to the
climbing representation maximum, and the implied lower bound keeps
setting records.
"""

import argparse
import sys
from fractions import Fraction

from addrep.proximity import upper_class_evidence
from addrep.sequences import SequenceSpec, parse_growth_spec


def sweep(growth_text, seeds, K, verbose):
    g = parse_growth_spec(growth_text)
    squares = SequenceSpec.squares()
    print(f"\ngrowth {growth_text}, K={K}")
    print(f"  {'seed':>6} {'records':>8} {'final w':>10} {'implied':>8} {'d(K)':>6}")
    worst = None
    for seed in seeds:
        spec_b = SequenceSpec.perturbed_squares(g, seed)
        ev = upper_class_evidence(squares, spec_b, K)
        w = Fraction(ev.final_w_num, ev.final_w_den)
        print(f"  {seed:>6} {len(ev.records):>8} {str(w):>10} "
              f"{ev.implied_lower_bound:>8} {ev.final_d:>6}")
        if verbose:
            for r in ev.records:
                ratio = Fraction(r.w_num, r.w_den)
                witnesses = ",".join(map(str, r.witness_sums[:4]))
                print(f"         k={r.k:<5d} w={str(ratio):>8s} witnesses={witnesses}")
        if worst is None or w < worst:
            worst = w
    print(f"  weakest final bound across seeds: {worst}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-K", "--horizon", type=int, default=400)
    parser.add_argument("--seeds", type=int, default=8)
    parser.add_argument("--growths", default="const:0,pow:1.0,1.0,pow:2.0,0.5,invlog:0.5")
    parser.add_argument("-v", "--verbose", action="store_true", help="print per-record detail")
    args = parser.parse_args()

    texts = []
    for piece in args.growths.split(","):
        # growth parameters themselves contain commas; stitch them back
        if texts and not piece.split(":")[0] in ("const", "pow", "invlog"):
            texts[-1] += "," + piece
        else:
            texts.append(piece)
    for text in texts:
        sweep(text, range(1, args.seeds + 1), args.horizon, args.verbose)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front-end.

Subcommands emit CSV (default) or JSON rows to stdout or ``--out PATH``.
Exit status: 0 all checks pass, 1 a mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from addrep import proximity, repfunc, squares_oracle
from addrep.sequences import (
    SequenceSpec,
    materialize,
    parse_growth_spec,
    parse_sequence_spec,
    perturb_squares,
    _squares_u,
)


def _emit(args, header: list[str], rows: list[list], comments: list[str] = ()) -> None:
    lines: list[str] = []
    if args.format == "json":
        lines.append(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
    else:
        lines.extend(f"# {c}" for c in comments)
        lines.append(",".join(header))
        lines.extend(",".join(str(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_object(args, obj: dict, comments: list[str], header: list[str], rows: list[list]) -> None:
    # classify carries a report plus a records table; JSON nests nothing
    # deeper than the flat rows array
    if args.format == "json":
        payload = dict(obj)
        payload["records"] = [dict(zip(header, row)) for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(args, header, rows, comments=comments)


def cmd_spectrum(args) -> int:
    terms = materialize(parse_sequence_spec(args.seq), args.horizon)
    # the dense convolution wins once the quadratic pass dominates the array size
    if len(terms) ** 2 > 8 * terms[-1] and 2 * terms[-1] <= repfunc.DENSE_LIMIT:
        counts = repfunc.spectrum_convolution(terms)
    else:
        counts = repfunc.spectrum_naive(terms)
    _emit(args, ["sum", "count"], [[n, counts[n]] for n in sorted(counts)])
    return 0


def cmd_utrace(args) -> int:
    values = repfunc.u_trace(parse_sequence_spec(args.seq), args.horizon)
    _emit(args, ["k", "u"], [[k, u] for k, u in enumerate(values, start=1)])
    return 0


def _trace_worker(spec_and_k: tuple[SequenceSpec, int]) -> list[int]:
    spec, K = spec_and_k
    return repfunc.u_trace(spec, K)


def cmd_compare(args) -> int:
    spec_a = parse_sequence_spec(args.seq_a)
    spec_b = parse_sequence_spec(args.seq_b)
    K = args.horizon
    u = v = None
    if args.parallel and args.parallel > 1:
        with ProcessPoolExecutor(max_workers=2) as pool:
            u, v = pool.map(_trace_worker, [(spec_a, K), (spec_b, K)])
    rows = proximity.pair_trace(spec_a, spec_b, K, u=u, v=v)
    _emit(
        args,
        ["k", "u", "v", "d", "lower_num", "lower_den", "upper", "w_num", "w_den"],
        [[r.k, r.u, r.v, r.d, r.lower_num, r.lower_den, r.upper, r.w_num, r.w_den] for r in rows],
    )
    return 0


def cmd_verify(args) -> int:
    spec_a = parse_sequence_spec(args.seq_a)
    spec_b = parse_sequence_spec(args.seq_b)
    K = args.horizon
    counterexample = proximity.verify_sandwich(spec_a, spec_b, K)
    if counterexample is None:
        print(f"sandwich: ok at every k <= {K}")
    else:
        print(f"sandwich: VIOLATED at k={counterexample.k} ({counterexample.side} side)")
        return 1
    A = materialize(spec_a, K)
    B = materialize(spec_b, K)
    reports = proximity.window_cover_sweep(A, B)
    bad = [r for r in reports if not r.covered]
    total_offenders = sum(len(r.offenders) for r in bad)
    print(f"window cover: {len(reports)} realized sums checked, {total_offenders} offenders")
    if bad:
        worst = bad[0]
        print(f"window cover: FAILED first at n={worst.n}")
        return 1
    return 0


def cmd_oracle(args) -> int:
    range_max = args.max
    workers = args.parallel or 0
    if workers > 1 and range_max > workers:
        bounds = [1 + (range_max * i) // workers for i in range(workers)] + [range_max + 1]
        spans = [(bounds[i], bounds[i + 1]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_oracle_worker, spans))
        report = squares_oracle.cross_check(range_max, chunks=chunks)
    else:
        report = squares_oracle.cross_check(range_max)
    if args.full:
        record_at = dict(report.records)
        rows = [[n, squares_oracle.positive_ordered_count(n), str(n in record_at).lower()]
                for n in range(1, range_max + 1)]
    else:
        rows = [[n, c, "true"] for n, c in report.records]
    _emit(args, ["n", "count", "is_record"], rows)
    if report.mismatches:
        for n, formula, brute in report.mismatches[:10]:
            print(f"mismatch at n={n}: formula={formula} brute={brute}", file=sys.stderr)
        return 1
    return 0


def _oracle_worker(span: tuple[int, int]) -> tuple[list, list]:
    return squares_oracle._check_range(*span)


def cmd_classify(args) -> int:
    growth = parse_growth_spec(args.g)
    K = args.horizon
    u_squares = _squares_u(K)
    B, report = perturb_squares(growth, args.seed, K, u_squares)
    spec_a = SequenceSpec.squares()
    spec_b = SequenceSpec.perturbed_squares(growth, args.seed)
    evidence = proximity.upper_class_evidence(spec_a, spec_b, K)

    bounds_text = ",".join(repr(b) for b in report.requested_bounds)
    violations_text = ",".join(str(i) for i in report.bound_violations)
    comments = [
        f"perturbation: clamp_count={report.clamp_count}",
        f"perturbation: bound_violations=[{violations_text}]",
        f"perturbation: requested_bounds=[{bounds_text}]",
        f"evidence: {evidence.note}",
        f"evidence: final_w={evidence.final_w_num}/{evidence.final_w_den}"
        f" implied_lower_bound={evidence.implied_lower_bound}",
        f"evidence: final-horizon view with d({K})={evidence.final_d} in place of the true"
        f" proximity limit (which may be larger):"
        f" u({K})={evidence.final_u}, v({K})={evidence.final_v}",
    ]
    obj = {
        "clamp_count": report.clamp_count,
        "bound_violations": report.bound_violations,
        "requested_bounds": report.requested_bounds,
        "final_w_num": evidence.final_w_num,
        "final_w_den": evidence.final_w_den,
        "final_u": evidence.final_u,
        "final_v": evidence.final_v,
        "final_d": evidence.final_d,
        "implied_lower_bound": evidence.implied_lower_bound,
        "note": evidence.note,
    }
    header = ["k", "w_num", "w_den", "u", "witness_sums"]
    rows = [[r.k, r.w_num, r.w_den, r.u, ";".join(str(s) for s in r.witness_sums)]
            for r in evidence.records]
    _emit_object(args, obj, comments, header, rows)
    return 0


def _add_common(sub, horizon_flag=True):
    if horizon_flag:
        sub.add_argument("-k", "-K", "--horizon", dest="horizon", type=int, required=True,
                         help="prefix length (no default: quadratic cost is explicit)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="write output here instead of stdout")
    sub.add_argument("--parallel", type=int, default=None, metavar="N",
                     help="fan independent work out to N processes where supported")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addrep",
        description="representation-count spectra, proximity audits, and "
                    "near-quadratic perturbation experiments",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("spectrum", help="sum -> ordered-couple count table of one prefix")
    p.add_argument("--seq", required=True, help="squares | poly:C2,C1,C0 | file:PATH | perturb:g=...:seed=N")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = subs.add_parser("utrace", help="running representation maximum per horizon")
    p.add_argument("--seq", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_utrace)

    p = subs.add_parser("compare", help="joint trace of two sequences with exact bounds")
    p.add_argument("--seq-a", required=True)
    p.add_argument("--seq-b", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = subs.add_parser("verify", help="audit the two-sided bound and the window covering")
    p.add_argument("--seq-a", required=True)
    p.add_argument("--seq-b", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("oracle", help="divisor-formula vs brute-force audit for two squares")
    p.add_argument("--max", type=int, required=True, help="largest n to audit")
    p.add_argument("--full", action="store_true", help="emit every n, not just records")
    _add_common(p, horizon_flag=False)
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("classify", help="perturb the squares and report membership evidence")
    p.add_argument("--g", required=True, help="const:C | pow:C,ALPHA | invlog:C")
    p.add_argument("--seed", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # covers every library error (they all subclass ValueError) plus bad parameters
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    try:
        code = main(argv=None)
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe early (addrep ... | head); not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)

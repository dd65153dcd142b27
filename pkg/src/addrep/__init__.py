"""Representation-count spectra of integer sequence prefixes, proximity
audits between sequence pairs, and near-quadratic perturbation experiments."""

from addrep.proximity import (
    Counterexample,
    EvidenceReport,
    PairTraceRow,
    WindowCheckReport,
    d_trace,
    pair_trace,
    upper_class_evidence,
    verify_sandwich,
    window_cover_check,
    window_cover_sweep,
)
from addrep.repfunc import (
    rep_count,
    s_max,
    spectrum_convolution,
    spectrum_naive,
    u_trace,
    u_trace_prefix,
)
from addrep.sequences import (
    GrowthSpec,
    PerturbationReport,
    SequenceSpec,
    materialize,
    parse_growth_spec,
    parse_sequence_spec,
    perturb_squares,
    validate,
)
from addrep.squares_oracle import (
    OracleReport,
    cross_check,
    divisor_counts_mod4,
    positive_ordered_count,
    r2_lattice,
)

__all__ = [
    "Counterexample",
    "EvidenceReport",
    "GrowthSpec",
    "OracleReport",
    "PairTraceRow",
    "PerturbationReport",
    "SequenceSpec",
    "WindowCheckReport",
    "cross_check",
    "d_trace",
    "divisor_counts_mod4",
    "materialize",
    "pair_trace",
    "parse_growth_spec",
    "parse_sequence_spec",
    "perturb_squares",
    "positive_ordered_count",
    "r2_lattice",
    "rep_count",
    "s_max",
    "spectrum_convolution",
    "spectrum_naive",
    "u_trace",
    "u_trace_prefix",
    "upper_class_evidence",
    "validate",
    "verify_sandwich",
    "window_cover_check",
    "window_cover_sweep",
]

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addrep.repfunc import rep_count
from addrep.sequences import SequenceSpec, materialize
from addrep.squares_oracle import (
    brute_positive_count,
    cross_check,
    divisor_counts_mod4,
    positive_ordered_count,
    r2_lattice,
)

from oracles import brute_two_squares_count


def test_divisor_counts_examples():
    assert divisor_counts_mod4(25) == (3, 0)
    assert divisor_counts_mod4(3) == (1, 1)
    assert divisor_counts_mod4(2) == (1, 0)
    with pytest.raises(ValueError):
        divisor_counts_mod4(0)


def test_r2_lattice_examples():
    assert r2_lattice(1) == 4    # (+-1, 0), (0, +-1)
    assert r2_lattice(5) == 8    # (+-1, +-2), (+-2, +-1)
    assert r2_lattice(3) == 0


def test_positive_ordered_examples():
    assert positive_ordered_count(25) == 2   # (9,16), (16,9)
    assert positive_ordered_count(50) == 3   # (1,49), (49,1), (25,25)
    assert positive_ordered_count(1) == 0


@given(n=st.integers(1, 20000))
@settings(max_examples=300)
def test_formula_matches_independent_brute_force(n):
    assert positive_ordered_count(n) == brute_two_squares_count(n)
    assert brute_positive_count(n) == brute_two_squares_count(n)


def test_cross_check_small_ranges():
    report = cross_check(100)
    assert report.mismatches == []
    assert report.records == [(2, 1), (5, 2), (50, 3), (65, 4)]

    report = cross_check(400)
    assert report.mismatches == []
    assert report.records == [(2, 1), (5, 2), (50, 3), (65, 4), (325, 6)]

    report = cross_check(1)
    assert report.mismatches == []
    assert report.records == []


def test_cross_check_chunked_merge_matches_serial():
    from addrep.squares_oracle import _check_range

    serial = cross_check(500)
    chunks = [_check_range(1, 180), _check_range(180, 361), _check_range(361, 501)]
    merged = cross_check(500, chunks=chunks)
    assert merged.records == serial.records
    assert merged.mismatches == serial.mismatches


def test_record_counts_strictly_increase():
    records = cross_check(2000).records
    counts = [c for _, c in records]
    assert counts == sorted(set(counts))


def test_unboundedness_evidence_reaches_six_by_325():
    records = dict(cross_check(325).records)
    assert records.get(325) == 6


def test_oracle_agrees_with_counting_engine_on_squares_prefix():
    k = 100
    prefix = materialize(SequenceSpec.squares(), k)
    limit = prefix[-1] + 1
    for n in range(1, limit + 1):
        assert rep_count(prefix, n) == positive_ordered_count(n)

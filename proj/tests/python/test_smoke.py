"""Smoke tests for the Python bindings."""

import json

import pytest

import metafib

ORDER3_INITIAL = [30, 18, 30, 12, 30, 6, 40, 18, 40, 12, 40, 6, 60, 18, 60, 12, 60, 6]


def test_build_golden_order3():
    rec = metafib.LinearRecurrence([1, 0, 2], [30, 40, 60])
    c = metafib.build(rec)
    assert c.h == 17
    assert c.s == 6
    assert c.target.coeffs == [1, 1, 0, 0, 2]
    assert c.initial.values == ORDER3_INITIAL
    assert c.interleaved_term(18) == 120
    assert c.interleaved_prefix(20)[-2:] == [120, 18]


def test_check_theorem_and_subsequence():
    c = metafib.build(metafib.LinearRecurrence([1, 1], [5, 8]))
    assert c.h == 15
    report = metafib.check_theorem(c, 2000)
    assert report.passed and report.checked == 2000
    sub = metafib.check_subsequence(c, 50)
    assert sub.passed


def test_build_with_explicit_h():
    rec = metafib.LinearRecurrence([1, 1], [5, 8])
    c = metafib.build(rec, 20)
    assert c.h == 20
    assert metafib.check_theorem(c, 500).passed
    with pytest.raises(ValueError):
        metafib.build(rec, 7)


def test_eval_hofstadter_q():
    rec = metafib.MetaFibRecurrence(1, [1, 1])
    init = metafib.InitialCondition(1, [1, 1])
    result = metafib.eval_prefix(rec, init, 10)
    assert not result.died()
    assert result.values == [1, 1, 2, 3, 3, 4, 5, 5, 6, 6]


def test_death_reporting():
    rec = metafib.MetaFibRecurrence(1, [1, 1])
    result = metafib.eval_prefix(rec, metafib.InitialCondition(1, [1, 0]), 10)
    assert result.died()
    assert result.death.n == 3
    assert result.death.offset == 2
    assert result.death.inner_value == 0
    assert result.death.argument == 3


def test_big_integers_round_trip():
    rec = metafib.LinearRecurrence([2], [1])
    terms = rec.prefix(200)
    assert terms[199] == 2**199
    # Arbitrary-precision values survive the crossing in both directions.
    init = metafib.InitialCondition(0, [10**40, 10**40])
    assert init.values[0] == 10**40


def test_rotations():
    rec = metafib.LinearRecurrence([1, 0, 2], [30, 40, 60])
    rot = rec.rotation(1)
    assert rot.prefix(8) == [30, 40, 60, 110, 160, 280, 430, 720]
    assert rot.coeffs_by_lag == [0, 2, 1]
    with pytest.raises(ValueError):
        rec.rotation(3)


def test_growth_certificate_and_find_h():
    rec = metafib.LinearRecurrence([1, 1], [5, 8])
    assert metafib.find_h(rec) == 15
    result = metafib.growth_certificate(rec.rotation(0), 2)
    assert not result.ok()
    assert result.violation.m == 2
    validity = metafib.is_valid_h(rec, 7)
    assert not validity.ok
    assert "growth bound" in validity.diagnostic


def test_oracle_equivalence():
    rec = metafib.MetaFibRecurrence(1, [1, 1])
    init = metafib.InitialCondition(1, [3, 2, 1])
    fast = metafib.eval_prefix(rec, init, 500)
    slow = metafib.eval_oracle(rec, init, 500)
    assert fast.values == slow.values


def test_trace_case():
    c = metafib.build(metafib.LinearRecurrence([1, 0, 2], [30, 40, 60]))
    trace = metafib.trace_case(c, 18)
    assert trace.pattern_ok
    assert trace.value == 120
    assert [t.offset for t in trace.terms] == [1, 2, 5]
    assert [t.contribution for t in trace.terms] == [60, 0, 60]
    assert trace.terms[1].slot_class == metafib.SlotClass.VANISHES_NEGATIVE


def test_sweep_cases():
    c = metafib.build(metafib.LinearRecurrence([1, 1], [5, 8]))
    report = metafib.sweep_cases(c, c.h, 500)
    assert report.violations == 0
    assert report.traced == 500 - c.h


def test_extract_subsequence():
    values = metafib.extract_subsequence([5, 8, 5, 4, 8, 8, 8, 4, 13], 4, 0)
    assert values == [5, 8, 13]


def test_json_round_trip():
    c = metafib.build(metafib.LinearRecurrence([1, 0, 2], [30, 40, 60]))
    text = c.to_json()
    parsed = json.loads(text)
    assert parsed["h"] == 17
    back = metafib.construction_from_json(text)
    assert back.h == c.h
    assert metafib.check_theorem(back, 100).passed


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        metafib.LinearRecurrence([1, 0], [5, 8])  # coefficient sum below 2
    with pytest.raises(ValueError):
        metafib.MetaFibRecurrence(0, [])
    with pytest.raises(ValueError):
        metafib.InitialCondition(0, [-1])

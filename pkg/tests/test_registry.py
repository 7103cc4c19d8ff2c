"""Statement registry: verdicts, reports, determinism, dispatch."""

import json

import pytest

from congrkit.errors import OutOfRangeError, UnknownIdError
from congrkit.registry import (
    check_statement,
    cubic_roots,
    delta_p,
    registered_ids,
    reports_json,
    verify_many,
    verify_range,
)
from congrkit.registry.engine import dispatch
from congrkit.errors import RowDispatchViolationError


def test_registry_population():
    ids = registered_ids()
    assert len(ids) == 54
    assert ids == sorted(ids)
    for expected in ("thm-2.1", "thm-3.8", "thm-4.4", "lem-2.4",
                     "cor-2.2-8k7", "cor-2.2-mod15", "delta5-family"):
        assert expected in ids


def test_check_statement_spot_verdicts():
    v = check_statement("thm-2.6", 7)
    assert v.outcome == "Pass"
    assert v.lhs == 2
    assert v.row == "p ≡ ±6,±7 (mod 17)"

    v = check_statement("thm-4.5", 31)
    assert v.outcome == "Pass" and v.lhs == 28 and v.rhs == 28

    v = check_statement("thm-3.10", 5, params={"a": 1})
    assert v.outcome == "Pass" and v.lhs == 4

    v = check_statement("thm-3.4", 19)
    assert v.outcome == "Pass"
    assert v.witnesses == {"rep": [-2, 1]}

    v = check_statement("thm-2.6", 17)
    assert v.outcome == "NotApplicable"


def test_check_statement_guards():
    with pytest.raises(UnknownIdError):
        check_statement("no-such-id", 7)
    with pytest.raises(OutOfRangeError):
        check_statement("thm-2.6", 9)
    with pytest.raises(OutOfRangeError):
        check_statement("thm-2.6", 2)


def test_verify_range_counts_add_up():
    r = verify_range("cor-2.1", 500)
    assert r.checked == r.passed + r.failed
    assert r.failed == 0
    assert r.status == "verified"
    assert r.prime_limit == 500


def test_verify_range_rejects_tiny_limit():
    with pytest.raises(OutOfRangeError):
        verify_range("cor-2.1", 4)


def test_disputed_statement_reports_failures():
    r = verify_range("thm-4.4", 100)
    assert r.status == "disputed"
    assert r.failed > 0
    p11 = [f for f in r.failures if f["prime"] == 11]
    assert p11 and p11[0]["lhs"] == 0
    assert p11[0]["row"] == "p ≡ 11 (mod 20)"
    for f in r.failures:
        assert set(f) == {"prime", "params", "lhs", "row", "rhs", "witnesses"}


def test_fail_fast_keeps_lowest_prime():
    full = verify_range("thm-4.4", 100)
    fast = verify_range("thm-4.4", 100, fail_fast=True)
    assert fast.failures[0]["prime"] == full.failures[0]["prime"] == 11
    assert len(fast.failures) == 1


def test_reports_json_round_trip():
    reports = verify_many(["thm-2.6", "thm-4.4"], 100)
    text = reports_json(reports)
    parsed = json.loads(text)
    assert [r["id"] for r in parsed] == ["thm-2.6", "thm-4.4"]
    assert parsed[0]["status"] == "verified"
    assert parsed[1]["status"] == "disputed"
    assert text == reports_json(verify_many(["thm-2.6", "thm-4.4"], 100))


def test_jobs_do_not_change_output():
    a = reports_json(verify_many(["thm-2.1", "thm-3.3"], 400, jobs=1, seed=7))
    b = reports_json(verify_many(["thm-2.1", "thm-3.3"], 400, jobs=3, seed=7))
    assert a == b


def test_seed_changes_sampled_parameters_not_verdicts():
    a = verify_range("thm-2.1", 300, seed=1)
    b = verify_range("thm-2.1", 300, seed=2)
    assert a.failed == b.failed == 0
    assert a.checked == b.checked


def test_dispatch_requires_exactly_one_row():
    with pytest.raises(RowDispatchViolationError):
        dispatch("x", 7, [("a", False, lambda: 1), ("b", False, lambda: 2)])
    with pytest.raises(RowDispatchViolationError):
        dispatch("x", 7, [("a", True, lambda: 1), ("b", True, lambda: 2)])
    assert dispatch("x", 7, [("a", True, lambda: 1), ("b", False, lambda: 2)]) \
        == ("a", 1)


def test_cubic_roots_examples():
    assert cubic_roots(23, 3, 1, 5) == {4}
    assert cubic_roots(1, 0, 0, 7) == {0}
    assert cubic_roots(1, 0, -1, 7) == {1, 2, 4}
    with pytest.raises(OutOfRangeError):
        cubic_roots(1, 1, 1, 3)


def test_delta_p_cross_derivation_small():
    for p in (3, 7, 11, 13, 19, 23, 29, 37):
        if (2 * 5) % p == 0:
            continue
        fixed, formula = delta_p(1, 1, p)
        if fixed is not None:
            assert fixed.sign == formula.sign
        assert formula.sign in (1, -1)


def test_statement_metadata_examples():
    from congrkit.registry.engine import REGISTRY
    assert REGISTRY["thm-4.4"].status == "disputed"
    assert REGISTRY["delta5-family"].status == "disputed"
    assert REGISTRY["thm-2.6"].status == "verified"
    assert REGISTRY["thm-4.3"].notes  # the corrected row is documented

"""Spot verdicts pinning individual statement rows and witnesses."""

from congrkit.registry import check_statement, verify_range


def test_quartic_sum_rows():
    v = check_statement("thm-2.4", 7)
    assert (v.outcome, v.lhs, v.row) == ("Pass", 5, "p ≡ 7 (mod 8)")
    v = check_statement("thm-2.5", 11)
    assert v.outcome == "Pass"
    assert v.row == "ratio -1/4: p ≡ 1,9,11,19 (mod 20)"
    v = check_statement("thm-2.7", 53)
    assert (v.outcome, v.row) == ("Pass", "p ≡ 1,9,29 (mod 52)")


def test_form_condition_row_carries_witness():
    v = check_statement("thm-2.8", 41)
    assert v.outcome == "Pass"
    assert v.row == "p = x^2+10y^2, p ≡ 1,9 (mod 40)"
    x, y = v.witnesses["rep"]
    assert x * x + 10 * y * y == 41


def test_corrected_mod24_row():
    # the 7 (mod 24) row value is -1; the first two such primes
    for p, lhs in ((7, 6), (31, 30)):
        v = check_statement("thm-4.3", p)
        assert (v.outcome, v.lhs, v.row, v.rhs) == ("Pass", lhs, "p ≡ 7 (mod 24)", lhs)


def test_alternating_sum_over_full_range():
    v = check_statement("intro-zps", 7)
    assert (v.outcome, v.lhs, v.row) == ("Pass", 6, "p ≡ 3 (mod 4)")


def test_cubic_sum_root_branch():
    v = check_statement("intro-1.3", 5)
    assert v.outcome == "Pass"
    assert v.lhs == 4 and v.rhs == [4]
    assert v.row == "(p|23) = -1: S is the unique root"


def test_lucas_classification_rows():
    v = check_statement("lem-3.3", 31)
    assert v.outcome == "Pass"
    assert v.row == "(9,3): p represented by [13,1,4], symbol w^1"
    assert v.lhs == [[21, 26]]
    v = check_statement("lem-3.3", 5)
    assert v.outcome == "Pass"
    assert v.row == "(9,-3): p represented by [5,1,14], symbol w^1"


def test_combined_symbol_rows():
    v = check_statement("cor-2.7", 13)
    assert (v.outcome, v.lhs, v.row) == ("Pass", 12, "(p|15) = -1, (p|17) = 1")


def test_disputed_family_witness_structure():
    v = check_statement("delta5-family", 13)
    assert v.outcome == "Pass"
    v = check_statement("delta5-family", 11)
    assert v.outcome == "Fail"
    recs = v.witnesses["delta5"]
    assert {r["r"] for r in recs} == {-2, 0, 1, 2}
    assert all(r["exact"] != r["claimed"] for r in recs)
    assert v.witnesses["row"] == {"exact": -22, "claimed": 18}


def test_every_verified_statement_clean_to_600():
    from congrkit.registry import registered_ids
    for sid in registered_ids():
        r = verify_range(sid, 600, seed=3)
        if r.status == "verified":
            assert r.failed == 0, (sid, r.failures[:2])
        else:
            assert sid in ("thm-4.4", "delta5-family")

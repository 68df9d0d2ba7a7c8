from fractions import Fraction as F

import pytest

import npscan


def test_np_examples():
    assert npscan.np_at_prime("x^3", 7) == npscan.hodge_polygon(3)
    np5 = npscan.np_at_prime([0, 0, 0, 1], 5)
    assert np5 == [(0, 0), (2, 1)]
    assert npscan.vertical_gap(np5, npscan.hodge_polygon(3)) == F(1, 6)
    assert npscan.lies_above(np5, npscan.hodge_polygon(3))


def test_bad_place_carries_its_kind():
    with pytest.raises(npscan.NpscanError) as info:
        npscan.np_at_prime("x^3", 3)
    assert info.value.args[0] == "BadPlace"


def test_l_and_p1():
    assert npscan.l_polynomial([0, 0, 1], 3) == [[1, 0], [1, 2]]
    assert npscan.p1_polynomial([0, 0, 1], 3) == [1, 0, 3]


def test_dickson_tools():
    assert npscan.dickson(5, 1) == [0, 5, 0, -5, 0, 1]
    form = npscan.recognize_dickson("dickson(5,1)")
    assert form == {"n": 5, "a": 1, "shift": 0, "offset": 0}
    assert npscan.recognize_dickson("x^5 + x") is None
    assert npscan.is_admissible(7, 1, 5)
    assert not npscan.is_admissible(5, 1, 5)
    assert npscan.gpp_over_q(3, 0) and not npscan.gpp_over_q(3, 1)
    kinds = sorted(len(cs) - 1 for _, cs in npscan.decompose("x^6"))
    assert kinds == [2, 3]


def test_scan_and_crosscheck():
    records, summary, violations = npscan.scan("x^3", p_max=40, jobs=2)
    assert summary["verdict"] == "oscillates (limit cannot exist)"
    assert not violations
    assert [r["p"] for r in records] == sorted(r["p"] for r in records)
    checks = npscan.crosscheck("x^4", 3)
    assert all(status != "fail" for _, status, _ in checks)
    assert ("divisibility", "pass") in [(n, s) for n, s, _ in checks]


def test_hull():
    assert npscan.lower_hull([(0, 0), (1, 1), (2, 1)]) == [(0, 0), (2, 1)]

from fractions import Fraction

import pytest

import torus_mirror as tm

T = [[(0, 1), 1], [-1, (0, 1)]]


def test_find_delta_worked_example():
    d = tm.find_delta(T)
    assert d["delta"] == [[0, 0], [0, 1]]
    assert d["rank"] == 1
    assert d["det"] == (Fraction(0), Fraction(-1))


def test_biholomorphism_and_holomorphicity():
    phi = tm.biholomorphism(T)
    one, zero = Fraction(1), Fraction(0)
    assert phi["Tprime"] == [[(one, one), (zero, one)], [(zero, -one), (one, zero)]]
    assert phi["ok"]
    assert tm.is_holomorphic([[0, 1], [1, 1]], phi["Tprime"])
    assert not tm.is_holomorphic([[1, 1], [1, -1]], phi["Tprime"])


def test_exact_inputs():
    assert tm.find_delta([[complex(0, 1)]])["delta"] == [[0]]
    assert tm.find_delta([[(Fraction(1, 3), "2/3")]])["delta"] == [[0]]
    with pytest.raises(tm.NotPositiveDefinite):
        tm.find_delta([[(0, -1)]])


def test_rank_and_smith_form():
    assert tm.bundle_rank(2, [[0, 1], [1, 1]]) == 4
    assert tm.bundle_rank(1, [[0, 0], [0, 0]]) == 1
    assert tm.smith_normal_form([[2, 4], [6, 8]])["divisors"] == [2, 4]
    big = 10**30
    assert tm.smith_normal_form([[big]])["divisors"] == [big]


def test_suites_and_reports():
    assert "automorphy" in tm.suite_names()
    report = tm.run_suite("sets")
    assert report["pass"]
    assert report["schema"] == "torus-mirror.report/v1"
    enum = tm.command_report("enumerate", bound=0)
    assert enum["result"]["counts"]["total"] == 1
    with pytest.raises(tm.InputError):
        tm.run_suite("bogus")
    with pytest.raises(ValueError):
        tm.run_suite("sets", tol=0)

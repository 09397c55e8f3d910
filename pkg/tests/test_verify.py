import pytest

from kbonacci.series import MultiPoly
from kbonacci.verify import (
    CheckReport,
    Summary,
    brute_stats_poly,
    brute_totals,
    cross_check,
    ham_pair_check,
    reversal_check,
    run_all,
    to_csv,
    to_json_obj,
    to_text,
    totals_check,
)


class TestBruteStats:
    def test_polyomino_family(self):
        expected = MultiPoly(("p", "q"), {(4, 3): 1, (5, 4): 3, (5, 5): 2, (6, 5): 1})
        assert brute_stats_poly(3, 3, "poly") == expected

    def test_graph_family(self):
        assert brute_stats_poly(1, 2, "graph") == MultiPoly(
            ("p", "q"), {(4, 4): 1, (7, 6): 1})

    def test_degree_family(self):
        expected = MultiPoly(("q2", "q3", "q4"),
                             {(4, 2, 0): 1, (5, 2, 1): 2, (4, 4, 1): 1})
        assert brute_stats_poly(2, 3, "degree") == expected

    def test_ham_guard(self):
        assert brute_stats_poly(15, 2, "ham") is None
        assert brute_stats_poly(15, 2, "ham", ham_cap=15) is not None

    def test_validation(self):
        with pytest.raises(ValueError):
            brute_stats_poly(0, 2, "poly")
        with pytest.raises(ValueError):
            brute_stats_poly(3, 2, "nope")


class TestCrossCheck:
    def test_polyomino_five_passes(self):
        reports = cross_check("poly", 3, 5)
        assert len(reports) == 5
        assert all(r.status == "pass" for r in reports)

    def test_ham_k2_all_hamiltonian(self):
        reports = cross_check("ham", 2, 8)
        assert [r.status for r in reports] == ["pass"] * 8
        for n in range(1, 9):
            poly = brute_stats_poly(n, 2, "ham")
            assert set(poly.terms) == {(1,)}

    def test_ham_skips_beyond_cap(self):
        reports = cross_check("ham", 2, 6, ham_cap=4)
        assert [r.status for r in reports] == ["pass"] * 4 + ["skip"] * 2

    def test_degree_family_k5(self):
        assert all(r.status == "pass" for r in cross_check("degree", 5, 6))


class TestTotalsAndPairs:
    def test_brute_totals_one_pass(self):
        tot = brute_totals(3, 2)
        assert tot["area"] == 3 + 4 + 4 + 4 + 5  # the five length-3 words
        assert tot["ham"] == 5
        assert tot["vertices"] == 50

    def test_totals_check_passes(self):
        reports = totals_check(3, 5)
        assert len(reports) == 8 * 5
        assert all(r.status == "pass" for r in reports)

    def test_ham_pairs(self):
        reports = ham_pair_check(7, 12)
        assert {r.k for r in reports} == {2, 4, 6}
        assert all(r.status == "pass" for r in reports)


class TestReversal:
    def test_reversal_sweep(self):
        reports = reversal_check(3, 6)
        assert all(r.status == "pass" for r in reports)


class TestRunAll:
    def test_small_run_green(self):
        summary = run_all(5, 3, suites=("poly", "graph", "degree", "ham",
                                        "totals", "reversal"))
        assert summary.ok
        assert summary.fails == 0
        assert summary.passes > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            run_all(0, 3)
        with pytest.raises(ValueError):
            run_all(5, 1)

    def test_text_report_reproducible(self):
        a = to_text(run_all(3, 2, suites=("poly", "reversal")))
        b = to_text(run_all(3, 2, suites=("poly", "reversal")))
        assert a == b
        assert a.endswith("passes=6 fails=0 skips=0")


class TestRendering:
    def sample(self):
        return Summary([
            CheckReport("poly", 2, 1, "pass", "x", "x", 3),
            CheckReport("poly", 2, 2, "fail", "x", "y", 4),
            CheckReport("ham", 2, 9, "skip", "", "guard exceeded", 0),
        ])

    def test_text_shows_failures(self):
        text = to_text(self.sample())
        assert "expected: x" in text
        assert "actual:   y" in text
        assert text.endswith("passes=1 fails=1 skips=1")

    def test_csv_header(self):
        csv = to_csv(self.sample())
        lines = csv.splitlines()
        assert lines[0] == "family,k,n,status,elapsed_ms"
        assert lines[1] == "poly,2,1,pass,3"

    def test_json_keys(self):
        objs = to_json_obj(self.sample())
        assert objs[0] == {"family": "poly", "k": 2, "n": 1, "status": "pass",
                           "expected": "x", "actual": "x", "elapsed_ms": 3}

    def test_summary_counters(self):
        s = self.sample()
        assert (s.passes, s.fails, s.skips) == (1, 1, 1)
        assert not s.ok
        assert len(s.failing) == 1

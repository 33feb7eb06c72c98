"""Genus-bounded tree enumeration, the subset oracle, and the survey harness."""

import io
import json

import pytest

from wilf_lab import (
    CONJECTURE_PREDICATES,
    DEFAULT_REGISTRY,
    InternalInconsistency,
    Predicate,
    ResourceLimit,
    SurveyReport,
    enumerate_genus,
    genus_counts,
    mu_histogram_csv,
    oracle_enumerate,
    survey,
)

# number of numerical semigroups of each genus, 0 through 12, frozen from
# the independent subset oracle (and matching the well-known sequence)
GENUS_COUNTS_12 = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]


class TestTree:
    def test_counts_through_genus_12(self):
        assert genus_counts(12) == GENUS_COUNTS_12

    def test_matches_subset_oracle_through_genus_6(self):
        oracle = oracle_enumerate(6)
        tree: dict[int, set] = {g: set() for g in range(7)}
        for ns in enumerate_genus(6):
            tree[ns.genus].add(ns.gaps)
        for g in range(7):
            assert tree[g] == set(oracle[g]), f"genus {g}"

    def test_deterministic_order(self):
        first = [ns.gaps for ns in enumerate_genus(4)]
        second = [ns.gaps for ns in enumerate_genus(4)]
        assert first == second
        assert first[0] == ()  # the full monoid is the root
        assert first[1] == (1,)  # then remove 1

    def test_each_semigroup_once(self):
        seen = [ns.gaps for ns in enumerate_genus(7)]
        assert len(seen) == len(set(seen)) == sum(GENUS_COUNTS_12[:8])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            list(enumerate_genus(-1))

    def test_node_budget(self):
        with pytest.raises(ResourceLimit) as exc:
            list(enumerate_genus(8, node_budget=5))
        assert exc.value.partial["visited"] == 5
        assert sum(exc.value.partial["genus_counts"]) == 5

    def test_node_budget_env(self, monkeypatch):
        monkeypatch.setenv("WILF_LAB_NODE_BUDGET", "3")
        with pytest.raises(ResourceLimit):
            list(enumerate_genus(8))
        monkeypatch.setenv("WILF_LAB_NODE_BUDGET", "100000")
        assert genus_counts(5) == GENUS_COUNTS_12[:6]


class TestOracle:
    def test_genus_zero(self):
        assert oracle_enumerate(0) == {0: [()]}

    def test_small_gap_sets(self):
        oracle = oracle_enumerate(3)
        assert oracle[1] == [(1,)]
        assert oracle[2] == [(1, 2), (1, 3)]
        assert oracle[3] == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5)]

    def test_guards(self):
        with pytest.raises(ValueError):
            oracle_enumerate(-2)
        with pytest.raises(ResourceLimit):
            oracle_enumerate(11)


class TestSurvey:
    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            survey(0)
        with pytest.raises(ValueError):
            survey(3, ("wilf", "no_such_predicate"))

    def test_all_default_conjectures_tallied(self):
        report = survey(6)
        assert report.predicates == CONJECTURE_PREDICATES
        assert report.genus_counts == GENUS_COUNTS_12[:7]
        assert report.nodes_visited == sum(GENUS_COUNTS_12[:7])
        proper = report.nodes_visited - 1  # the full monoid is not checked
        for name in ("wilf", "frogo"):
            assert report.tally(name) == {
                "checked": proper, "satisfied": proper, "violated": 0
            }

    def test_bound_conjecture_counterexamples_recorded(self):
        report = survey(6)
        tally = report.tally("bound")
        violators = [
            tuple(ce["generators"])
            for ce in report.counterexamples
            if ce["predicate"] == "bound"
        ]
        assert tally["violated"] == len(violators) == 14
        assert (3, 4) in violators
        assert (4, 5, 6, 7) in violators

    def test_stream_structure(self):
        sink = io.StringIO()
        report = survey(3, sink=sink)
        lines = sink.getvalue().splitlines()
        assert len(lines) == report.nodes_visited + 1  # records + summary
        rows = [json.loads(line) for line in lines]
        naturals = rows[0]
        assert naturals["generators"] == [1]
        assert naturals["type"] is None
        assert naturals["min_wg"] is None and naturals["max_wg"] is None
        assert naturals["verdicts"] == {}
        for row in rows[1:-1]:
            assert set(row["verdicts"]) <= set(CONJECTURE_PREDICATES)
            assert row["conductor"] - row["genus"] == row["delta"]
        summary = rows[-1]["summary"]
        assert summary["genus_counts"] == GENUS_COUNTS_12[:4]
        assert summary["semigroups"] == sum(GENUS_COUNTS_12[:4])
        assert set(summary["predicates"]) == set(CONJECTURE_PREDICATES)

    def test_parallel_stream_is_byte_identical(self):
        one = io.StringIO()
        two = io.StringIO()
        survey(7, jobs=1, sink=one)
        survey(7, jobs=2, sink=two)
        assert one.getvalue() == two.getvalue()

    def test_node_budget_shared(self):
        with pytest.raises(ResourceLimit):
            survey(8, node_budget=10)

    def test_theorem_predicates_hold(self):
        from wilf_lab.enumeration import THEOREM_PREDICATES

        report = survey(6, THEOREM_PREDICATES)
        for name in THEOREM_PREDICATES:
            tally = report.tally(name)
            assert tally["violated"] == 0
            if name == "twogen_mu3":
                # applies only to two-generator nodes
                assert 0 < tally["checked"] < report.nodes_visited - 1
            else:
                assert tally["checked"] == report.nodes_visited - 1

    def test_injected_conjecture_violation(self):
        fake = Predicate(
            "fake_conj", "conjecture", lambda f: f.genus != 3
        )
        registry = dict(DEFAULT_REGISTRY)
        registry["fake_conj"] = fake
        report = survey(4, ("fake_conj",), registry=registry)
        tally = report.tally("fake_conj")
        assert tally["violated"] == GENUS_COUNTS_12[3] == 4
        assert len(report.counterexamples) == 4
        witnesses = report.summary()["summary"]["predicates"]["fake_conj"]["witnesses"]
        assert len(witnesses) == 4

    def test_injected_theorem_violation_aborts(self):
        fake = Predicate(
            "fake_thm", "theorem", lambda f: f.genus != 2
        )
        registry = dict(DEFAULT_REGISTRY)
        registry["fake_thm"] = fake
        with pytest.raises(InternalInconsistency, match="fake_thm"):
            survey(4, ("fake_thm",), registry=registry)

    def test_mu_histogram_stat(self):
        report = survey(5, ("mu_hist",))
        assert sum(report.mu_histogram.values()) == report.nodes_visited - 1
        for (mu_v, e, t1), _count in report.mu_histogram.items():
            assert 2 <= mu_v <= t1  # mu <= type + 1 throughout
            assert e >= 2 or (e, mu_v) == (1, 2)
        csv_text = mu_histogram_csv(report)
        lines = csv_text.splitlines()
        assert lines[0] == "mu,e,type_plus_1,count"
        assert len(lines) == len(report.mu_histogram) + 1

    def test_validate_rejects_cooked_tally(self):
        report = SurveyReport(max_genus=1, predicates=("wilf",))
        report.tallies["wilf"] = {"checked": 2, "satisfied": 1, "violated": 0}
        with pytest.raises(InternalInconsistency):
            report.validate()

"""End-to-end acceptance checks with runtime budgets.

Each test is one acceptance criterion; the terminal summary prints one
status line per test.  Where a reference value disagrees with the
computation, the passing test asserts the computed value together with its
exact relationship to the reference one, and a strictly-xfailing companion
test asserts the reference value literally — if the companion ever starts
passing, the suite errors, so the discrepancy cannot drift by unnoticed.
"""

import math
import time

import pytest

from wilf_lab import (
    CONJECTURE_PREDICATES,
    DEFAULT_REGISTRY,
    NumericalSemigroup,
    Predicate,
    THEOREM_PREDICATES,
    enumerate_genus,
    enumerate_semimodules,
    mu,
    oracle_enumerate,
    oracle_semimodules,
    survey,
    verify_closed_forms,
    wilf_gap,
    wilf_gap_extremes,
    wilf_value,
)

# ----------------------------------------------------------------------
# reference benchmark values
# ----------------------------------------------------------------------

# five benchmark semigroups: (generators, adjoin-everything-above threshold)
BENCHMARK_INPUTS = (
    ((162, 1114, 1115), 9879),
    ((222, 1532, 1533), 16647),
    ((172, 327, 328), 3437),
    ((88, 100, 102), 566),
    ((88, 100, 343, 345, 346, 351, 361, 679, 680, 681, 687, 693), 700),
)

# reference (delta, c, e, mu, e - mu, W(e), W(mu)) per row; row 5's W(e)
# entry 5100 equals e*delta and drops the "- c" term — the computed value
# is 4400 = e*delta - c, asserted below
REFERENCE_TABLE_1 = (
    (1109, 9879, 110, 9, 101, 112111, 102),
    (1935, 16647, 147, 9, 138, 267798, 768),
    (505, 3437, 97, 7, 90, 45548, 98),
    (63, 566, 63, 9, 54, 3403, 1),
    (100, 700, 51, 7, 44, 5100, 0),
)

# reference gap Wilf numbers for the (6, 8, 35) semigroup; every nonzero
# entry carries the opposite sign of the computed value (global negation),
# the fifteen zeros agree
REFERENCE_TABLE_2 = {
    1: 0, 2: -2, 3: 0, 4: 0, 5: 0, 7: 0, 9: 0, 10: 2, 11: 0, 13: 0,
    15: 0, 17: 0, 19: 0, 21: 0, 23: 0, 25: 4, 27: 0, 29: 0, 31: 4,
    33: 2, 37: 2, 39: 4, 45: 4,
}

# number of numerical semigroups of each genus 0..12, from the independent
# subset oracle
GENUS_COUNTS_12 = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]

# frozen census of the two-generator sweep with product <= 20000
SWEEP_PAIRS = 48075
SWEEP_GAPS = 218757123


def _table_1_computed():
    rows = []
    for gens, threshold in BENCHMARK_INPUTS:
        ns = NumericalSemigroup.from_generators_with_threshold(gens, threshold)
        e = ns.embedding_dimension
        k = mu(ns)
        rows.append(
            (ns.delta, ns.conductor, e, k, e - k,
             wilf_value(ns, e), wilf_value(ns, k))
        )
    return rows


def test_benchmark_invariant_table():
    start = time.perf_counter()
    computed = _table_1_computed()
    elapsed = time.perf_counter() - start

    for i in range(4):
        assert computed[i] == REFERENCE_TABLE_1[i], f"row {i + 1}"
    # row 5: every column but W(e) matches the reference row ...
    assert computed[4][:5] == REFERENCE_TABLE_1[4][:5]
    assert computed[4][6] == REFERENCE_TABLE_1[4][6]
    # ... and the W(e) cell is e*delta - c = 4400, where the reference
    # 5100 is exactly e*delta (the conductor term dropped)
    delta, c, e = computed[4][0], computed[4][1], computed[4][2]
    assert computed[4][5] == e * delta - c == 4400
    assert REFERENCE_TABLE_1[4][5] == e * delta == 5100
    assert elapsed < 1.0, f"benchmark table took {elapsed:.3f}s (budget 1s)"


@pytest.mark.xfail(
    strict=True,
    reason="reference W(e) entry of row 5 is 5100 = e*delta; the Wilf value "
    "e*delta - c is 4400, so the literal table cannot be reproduced",
)
def test_benchmark_invariant_table_reference_row5():
    assert _table_1_computed()[4] == REFERENCE_TABLE_1[4]


def test_gap_wilf_table():
    start = time.perf_counter()
    ns = NumericalSemigroup.from_generators((6, 8, 35))
    computed = {g: wilf_gap(ns, g) for g in ns.gaps}
    elapsed = time.perf_counter() - start

    assert sorted(computed) == sorted(REFERENCE_TABLE_2)  # all 23 gaps
    zeros = [g for g, v in REFERENCE_TABLE_2.items() if v == 0]
    assert len(zeros) == 15
    for g in zeros:
        assert computed[g] == 0, f"gap {g}"
    # every nonzero reference entry is the negation of the computed value
    for g, reference in REFERENCE_TABLE_2.items():
        if reference != 0:
            assert computed[g] == -reference, f"gap {g}"
    assert elapsed < 0.1, f"gap Wilf table took {elapsed:.3f}s (budget 0.1s)"


@pytest.mark.xfail(
    strict=True,
    reason="the eight nonzero reference gap Wilf numbers all carry the "
    "opposite sign of the computed values (global negation)",
)
def test_gap_wilf_table_reference_signs():
    ns = NumericalSemigroup.from_generators((6, 8, 35))
    assert {g: wilf_gap(ns, g) for g in ns.gaps} == REFERENCE_TABLE_2


def test_type_computation():
    start = time.perf_counter()
    ns = NumericalSemigroup.from_generators((213, 216, 226, 227))
    t = ns.type_of()
    e = ns.embedding_dimension
    elapsed = time.perf_counter() - start
    assert t == 14
    assert e == 4
    assert elapsed < 1.0, f"type computation took {elapsed:.3f}s (budget 1s)"


def test_theorem_survey_genus_12():
    start = time.perf_counter()
    report = survey(12, THEOREM_PREDICATES)  # violations raise
    elapsed = time.perf_counter() - start

    assert report.genus_counts == GENUS_COUNTS_12
    assert report.nodes_visited == sum(GENUS_COUNTS_12) == 1413
    proper = report.nodes_visited - 1
    for name in THEOREM_PREDICATES:
        tally = report.tally(name)
        assert tally["violated"] == 0
        expected = 24 if name == "twogen_mu3" else proper
        assert tally["checked"] == expected, name
    assert elapsed < 60.0, f"theorem survey took {elapsed:.1f}s (budget 60s)"


@pytest.mark.xfail(
    strict=True,
    reason="the sharper spread bound max - min <= 2*delta - 2 is false: "
    "the semigroup generated by 3, 4, 5 has delta 1 and spread 1; only "
    "the strict bound max - min < 2*delta holds (and is enforced in the "
    "theorem survey)",
)
def test_gap_wilf_spread_sharper_bound_genus_12():
    for ns in enumerate_genus(12):
        if ns.is_naturals:
            continue
        ext = wilf_gap_extremes(ns)
        assert ext["max"] - ext["min"] <= 2 * ns.delta - 2, repr(ns)


def test_two_generator_closed_forms_sweep():
    verify_closed_forms(200)  # warm the compiled scan kernel
    start = time.perf_counter()
    report = verify_closed_forms(20000)  # any mismatch raises
    elapsed = time.perf_counter() - start

    assert report.pairs_checked == SWEEP_PAIRS
    assert report.gaps_checked == SWEEP_GAPS
    for name in (
        "closed_form_wilf", "conductor_form", "delta_form",
        "mirror_sign_flip", "wilf_at_3_nonneg",
    ):
        assert report.checks[name] == SWEEP_GAPS, name
    for name in ("max_equals_minus_min_below_delta", "family_profile"):
        assert report.checks[name] == SWEEP_PAIRS, name
    assert elapsed < 120.0, f"closed-form sweep took {elapsed:.1f}s (budget 120s)"


def test_conjecture_survey_genus_12():
    report = survey(12, CONJECTURE_PREDICATES)
    proper = sum(GENUS_COUNTS_12) - 1

    # the Wilf inequality at e and the conductor-equality classification
    # hold with zero counterexamples over the full enumeration
    for name in ("wilf", "frogo"):
        assert report.tally(name) == {
            "checked": proper, "satisfied": proper, "violated": 0
        }, name
    # the gap-bound conjecture genuinely fails; the census is frozen so any
    # drift in the counterexample machinery is caught here
    bound = report.tally("bound")
    assert bound["checked"] == proper
    assert bound["violated"] == 111
    violators = {
        tuple(ce["generators"])
        for ce in report.counterexamples
        if ce["predicate"] == "bound"
    }
    assert len(violators) == 111
    assert (3, 4) in violators
    assert (4, 5, 6, 7) in violators
    assert all(ce["predicate"] == "bound" for ce in report.counterexamples)


@pytest.mark.xfail(
    strict=True,
    reason="the gap-bound conjecture min W(g) >= -W(e) is false: the "
    "semigroup generated by 3 and 4 is symmetric (so W(e) = 0) yet has a "
    "gap with W(g) = -1; 111 counterexamples exist at genus <= 12",
)
def test_gap_bound_conjecture_zero_expectation():
    report = survey(12, ("bound",))
    assert report.tally("bound")["violated"] == 0


def test_counterexample_machinery_fires():
    # inject a predicate that is false for exactly the genus-3 nodes and
    # confirm the survey records precisely those counterexamples — the
    # zero-counterexample results above are therefore not vacuous
    registry = dict(DEFAULT_REGISTRY)
    registry["fake"] = Predicate("fake", "conjecture", lambda f: f.genus != 3)
    report = survey(5, ("fake",), registry=registry)
    witnesses = [
        tuple(ce["generators"])
        for ce in report.counterexamples
        if ce["predicate"] == "fake"
    ]
    assert len(witnesses) == GENUS_COUNTS_12[3] == 4
    assert report.tally("fake")["violated"] == 4
    genus_of = {
        tuple(ns.minimal_generators): ns.genus for ns in enumerate_genus(5)
    }
    assert all(genus_of[w] == 3 for w in witnesses)


def test_enumeration_against_subset_oracle():
    start = time.perf_counter()
    oracle = oracle_enumerate(8)
    tree: dict[int, set] = {g: set() for g in range(9)}
    for ns in enumerate_genus(8):
        tree[ns.genus].add(ns.gaps)
    elapsed = time.perf_counter() - start

    for g in range(9):
        assert len(tree[g]) == GENUS_COUNTS_12[g], f"genus {g}"
        assert tree[g] == set(oracle[g]), f"genus {g}"
    assert elapsed < 30.0, f"oracle comparison took {elapsed:.1f}s (budget 30s)"


def test_semimodule_enumeration_against_subset_oracle():
    for gens, count in (((3, 5), 7), ((2, 7), 4)):
        ns = NumericalSemigroup.from_generators(gens)
        enumerated = sorted(
            sm.minimal_generators for sm in enumerate_semimodules(ns)
        )
        oracle = sorted(oracle_semimodules(ns))
        assert enumerated == oracle, gens
        assert len(enumerated) == count, gens

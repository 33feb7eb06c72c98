"""Core semigroup arithmetic: construction, membership, Apéry sets, type."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilf_lab import (
    EmptyInput,
    NaturalsHasNoType,
    NotAMember,
    NotCofinite,
    NumericalSemigroup,
    parse_generator_spec,
)


def sieve_membership(gens, window):
    """Independent dynamic-programming membership table over [0, window)."""
    table = [False] * window
    table[0] = True
    for n in range(1, window):
        table[n] = any(n >= g and table[n - g] for g in gens)
    return table


class TestParseGeneratorSpec:
    def test_plain_list(self):
        assert parse_generator_spec("6,8,35") == ((6, 8, 35), None)

    def test_whitespace_ignored(self):
        assert parse_generator_spec(" 6 , 8 , 35 ") == ((6, 8, 35), None)

    def test_threshold(self):
        assert parse_generator_spec("162,1114,1115@9879") == (
            (162, 1114, 1115),
            9879,
        )

    def test_threshold_only(self):
        assert parse_generator_spec("@7") == ((), 7)

    @pytest.mark.parametrize("bad", ["", "a,b", "3;5", "3,5@", "@", "3,-5", "0"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_generator_spec(bad)


class TestConstruction:
    def test_minimal_generators_recomputed(self):
        ns = NumericalSemigroup.from_generators((6, 8, 35, 14, 70))
        assert ns.minimal_generators == (6, 8, 35)

    def test_duplicates_ignored(self):
        ns = NumericalSemigroup.from_generators((3, 3, 5, 5))
        assert ns.minimal_generators == (3, 5)

    def test_gcd_must_be_one(self):
        with pytest.raises(NotCofinite):
            NumericalSemigroup.from_generators((4, 6))

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            NumericalSemigroup.from_generators(())

    def test_threshold_construction(self):
        ns = NumericalSemigroup.from_generators_with_threshold((6, 8, 35), 40)
        assert ns.contains(40) and ns.contains(39 + 5)
        assert not ns.contains(37)
        assert all(ns.contains(n) for n in range(40, 80))

    def test_threshold_matches_table_inputs(self):
        ns = NumericalSemigroup.from_generators_with_threshold(
            (162, 1114, 1115), 9879
        )
        assert (ns.delta, ns.conductor, ns.embedding_dimension) == (
            1109,
            9879,
            110,
        )

    def test_from_gap_bits_round_trip(self):
        ns = NumericalSemigroup.from_generators((3, 5))
        bits = 0
        for g in ns.gaps:
            bits |= 1 << g
        again = NumericalSemigroup.from_gap_bits(bits)
        assert again == ns


class TestNaturals:
    def test_invariants(self):
        ns = NumericalSemigroup.from_generators((1,))
        assert ns.is_naturals
        assert ns.frobenius == -1
        assert ns.conductor == 0
        assert ns.delta == 0
        assert ns.genus == 0
        assert ns.multiplicity == 1
        assert ns.embedding_dimension == 1
        assert ns.minimal_generators == (1,)
        assert ns.gaps == ()
        assert ns.is_symmetric()

    def test_type_unavailable(self):
        with pytest.raises(NaturalsHasNoType):
            NumericalSemigroup.from_generators((1,)).type_of()

    def test_record_has_no_type(self):
        record = NumericalSemigroup.from_generators((1,)).to_record()
        assert "type" not in record
        assert record["symmetric"] is True


class TestInvariants:
    @pytest.mark.parametrize(
        "gens, gaps",
        [
            ((3, 5), (1, 2, 4, 7)),
            ((3, 4, 5), (1, 2)),
            ((2, 7), (1, 3, 5)),
            ((2, 3), (1,)),
        ],
    )
    def test_known_gap_sets(self, gens, gaps):
        ns = NumericalSemigroup.from_generators(gens)
        assert ns.gaps == gaps
        assert ns.genus == len(gaps)
        assert ns.frobenius == max(gaps)

    def test_delta_plus_genus_is_conductor(self):
        for gens in [(3, 5), (6, 8, 35), (5, 7, 9), (2, 7)]:
            ns = NumericalSemigroup.from_generators(gens)
            assert ns.delta + ns.genus == ns.conductor

    def test_membership_against_dp_sieve(self):
        for gens in [(3, 5), (6, 8, 35), (4, 7, 13), (5, 6, 13, 14)]:
            ns = NumericalSemigroup.from_generators(gens)
            window = ns.conductor + 2 * ns.multiplicity
            table = sieve_membership(gens, window)
            assert [ns.contains(n) for n in range(window)] == table

    def test_divides_order(self):
        ns = NumericalSemigroup.from_generators((3, 5))
        assert ns.divides(3, 8)
        assert not ns.divides(5, 9)


class TestAperySet:
    def test_three_five(self):
        ns = NumericalSemigroup.from_generators((3, 5))
        apery = ns.apery_set(3)
        assert apery.elements == (0, 5, 10)
        assert apery.by_residue() == (0, 10, 5)

    def test_sorted_and_residues_cover(self):
        ns = NumericalSemigroup.from_generators((6, 8, 35))
        apery = ns.apery_set(6)
        assert list(apery.elements) == sorted(apery.elements)
        assert sorted(w % 6 for w in apery.elements) == list(range(6))
        assert all(not ns.contains(w - 6) for w in apery.elements if w)

    def test_max_element_identity(self):
        for gens in [(3, 5), (6, 8, 35), (5, 7, 9), (2, 7)]:
            ns = NumericalSemigroup.from_generators(gens)
            apery = ns.apery_set(ns.multiplicity)
            assert max(apery.elements) == ns.conductor + ns.multiplicity - 1

    def test_non_member_rejected(self):
        ns = NumericalSemigroup.from_generators((3, 5))
        with pytest.raises(NotAMember):
            ns.apery_set(4)


class TestTypeAndSymmetry:
    def test_benchmark_type_fourteen(self):
        ns = NumericalSemigroup.from_generators((213, 216, 226, 227))
        assert ns.type_of() == 14
        assert ns.embedding_dimension == 4

    def test_symmetric_iff_type_one(self):
        for gens in [(3, 5), (2, 3), (3, 4, 5), (6, 8, 35), (4, 5, 6, 7)]:
            ns = NumericalSemigroup.from_generators(gens)
            assert (ns.type_of() == 1) == ns.is_symmetric()

    def test_two_generated_always_symmetric(self):
        for a, b in [(2, 3), (3, 5), (4, 7), (5, 8), (6, 35)]:
            assert NumericalSemigroup.from_generators((a, b)).is_symmetric()

    def test_min_apery_count_is_e_minus_one(self):
        for gens in [(3, 5), (6, 8, 35), (213, 216, 226, 227)]:
            ns = NumericalSemigroup.from_generators(gens)
            assert ns.min_apery_count() == ns.embedding_dimension - 1


@settings(max_examples=150, deadline=None)
@given(
    gens=st.lists(st.integers(min_value=2, max_value=60), min_size=1, max_size=6)
)
def test_random_generators_satisfy_invariants(gens):
    if math.gcd(*gens, 0) != 1:
        gens = gens + [max(gens) + 1]  # force cofiniteness
    ns = NumericalSemigroup.from_generators(gens)
    assert ns.delta + ns.genus == ns.conductor
    assert 1 <= ns.embedding_dimension <= ns.multiplicity
    # the minimal generating set is contained in every generating set
    assert set(ns.minimal_generators) <= set(gens)
    window = ns.conductor + 2 * ns.multiplicity
    table = sieve_membership(sorted(set(gens)), window)
    assert [ns.contains(n) for n in range(window)] == table
    apery = ns.apery_set(ns.multiplicity)
    assert len(apery.elements) == ns.multiplicity
    if not ns.is_naturals:
        assert max(apery.elements) == ns.conductor + ns.multiplicity - 1


@settings(max_examples=60, deadline=None)
@given(
    a=st.integers(min_value=2, max_value=40),
    b=st.integers(min_value=3, max_value=41),
)
def test_two_generator_frobenius_formula(a, b):
    if math.gcd(a, b) != 1:
        return
    ns = NumericalSemigroup.from_generators((a, b))
    assert ns.frobenius == a * b - a - b
    assert ns.genus == (a - 1) * (b - 1) // 2

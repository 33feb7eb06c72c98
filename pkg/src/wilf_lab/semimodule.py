"""Semimodules over a numerical semigroup.

A semimodule over the semigroup G is a set D of integers, bounded below,
with D + G inside D; everything here is normalized so that min(D) = 0.  The
module provides construction from generators (with automatic minimization),
the two-generator "gap" semimodules D_g = G union (g + G), their Wilf
numbers W(g) = 2*delta(D_g) - conductor(D_g), extremes and inequality
checks over all gaps, and exhaustive enumeration of all semimodules of a
given semigroup together with an independent subset oracle.
"""

from __future__ import annotations

import operator
from typing import Iterable, Iterator

from .errors import (
    EmptyInput,
    InternalInconsistency,
    NaturalsUnsupported,
    NoSuchSemimodule,
    NotAGap,
)
from .semigroup import NumericalSemigroup, _bit_positions

__all__ = [
    "GammaSemimodule",
    "check_bound_conjecture",
    "check_gap_wilf_max",
    "check_gap_wilf_range",
    "enumerate_semimodules",
    "gap_semimodule",
    "mu_delta_r",
    "mu_gamma_delta",
    "oracle_semimodules",
    "semimodule_from_generators",
    "wilf_function_semimodule",
    "wilf_gap",
    "wilf_gap_extremes",
]


def _union_bits(ns: NumericalSemigroup, xs: Iterable[int], window: int) -> int:
    """Bitmask over [0, window) of the union of the translates x + G."""
    base = ns.member_bits_extended(window)
    bits = 0
    for x in xs:
        bits |= base << x
    return bits & ((1 << window) - 1)


class GammaSemimodule:
    """Immutable semimodule over a fixed numerical semigroup, containing 0."""

    __slots__ = (
        "_base",
        "_gens",
        "_bits",
        "_window",
        "_conductor",
        "_gaps",
        "_shift",
    )

    def __init__(self, *, _base, _gens, _bits, _window, _conductor, _gaps, _shift):
        self._base = _base
        self._gens = _gens
        self._bits = _bits
        self._window = _window
        self._conductor = _conductor
        self._gaps = _gaps
        self._shift = _shift

    @property
    def base(self) -> NumericalSemigroup:
        return self._base

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        return self._gens

    @property
    def gen_count(self) -> int:
        """Number of minimal generators, counting the generator 0."""
        return len(self._gens)

    @property
    def nonzero_generator_count(self) -> int:
        return len(self._gens) - 1

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def frobenius(self) -> int:
        return self._conductor - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def delta(self) -> int:
        """Number of elements strictly below the conductor."""
        return self._conductor - len(self._gaps)

    @property
    def normalization_shift(self) -> int:
        """Amount subtracted from the input generators so that min = 0."""
        return self._shift

    @property
    def member_bits(self) -> int:
        return self._bits

    @property
    def window(self) -> int:
        return self._window

    @property
    def membership(self) -> tuple[bool, ...]:
        bits = self._bits
        return tuple(bool((bits >> n) & 1) for n in range(self._window))

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self._conductor:
            return True
        return bool((self._bits >> n) & 1)

    __contains__ = contains

    def wilf_value(self, k: int) -> int:
        """k * delta - conductor, with delta and conductor of this semimodule."""
        k = operator.index(k)
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        return k * self.delta - self._conductor

    def to_record(self) -> dict:
        return {
            "base_generators": list(self._base.minimal_generators),
            "minimal_generators": list(self._gens),
            "gen_count": self.gen_count,
            "conductor": self._conductor,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "delta": self.delta,
            "normalization_shift": self._shift,
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, GammaSemimodule):
            return NotImplemented
        return self._base == other._base and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self._base, self._gens))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self._gens))
        return f"GammaSemimodule({self._base!r}, [{gens}])"


def semimodule_from_generators(
    ns: NumericalSemigroup, gens: Iterable[int]
) -> GammaSemimodule:
    """The smallest semimodule over ns containing ``gens``, normalized to 0.

    The input is shifted so its minimum becomes 0 (the shift is recorded on
    the result), then minimized: the stored generators are exactly the
    elements not reachable from another element by a nonzero semigroup
    translate.  Construction re-derives and checks the structural facts —
    pairwise generator differences are gaps of the base, at most
    multiplicity-many generators, and the translates of the minimal
    generators reproduce the full membership mask.
    """
    raw = sorted({operator.index(g) for g in gens})
    if not raw:
        raise EmptyInput("at least one semimodule generator is required")
    shift = raw[0]
    xs = tuple(g - shift for g in raw)
    window = xs[-1] + ns.conductor + ns.multiplicity
    bits = _union_bits(ns, xs, window)
    gap_mask = ((1 << window) - 1) ^ bits
    conductor = gap_mask.bit_length()
    return _finish_semimodule(ns, bits, window, conductor, shift)


def _finish_semimodule(
    ns: NumericalSemigroup,
    bits: int,
    window: int,
    conductor: int,
    shift: int,
) -> GammaSemimodule:
    covered = 0
    for g in ns.minimal_generators:
        covered |= bits << g
    min_gens = tuple(_bit_positions(bits & ~covered & ((1 << window) - 1)))
    if not min_gens or min_gens[0] != 0:
        raise InternalInconsistency(
            f"minimal semimodule generators {min_gens} do not start at 0"
        )
    if len(min_gens) > ns.multiplicity:
        raise InternalInconsistency(
            f"{len(min_gens)} minimal generators exceed the multiplicity bound"
        )
    for i, gi in enumerate(min_gens):
        for gj in min_gens[:i]:
            if ns.contains(gi - gj):
                raise InternalInconsistency(
                    f"generator difference {gi}-{gj} is not a gap of the base"
                )
    if _union_bits(ns, min_gens, window) != bits:
        raise InternalInconsistency(
            "minimal generators fail to regenerate the semimodule"
        )
    trimmed = conductor + ns.multiplicity
    final_window = min(window, trimmed)
    final_bits = bits & ((1 << final_window) - 1)
    gap_bits = ((1 << conductor) - 1) ^ (final_bits & ((1 << conductor) - 1))
    return GammaSemimodule(
        _base=ns,
        _gens=min_gens,
        _bits=final_bits,
        _window=final_window,
        _conductor=conductor,
        _gaps=tuple(_bit_positions(gap_bits)),
        _shift=shift,
    )


def gap_semimodule(ns: NumericalSemigroup, g: int) -> GammaSemimodule:
    """The semimodule generated by {0, g} for a gap g of the base.

    Both generators are provably minimal, which is asserted after the
    generic minimization pass.
    """
    g = operator.index(g)
    if g <= 0 or ns.contains(g):
        raise NotAGap(f"{g} is not a gap of {ns!r}")
    sm = semimodule_from_generators(ns, (0, g))
    if sm.minimal_generators != (0, g):
        raise InternalInconsistency(
            f"gap semimodule for {g} minimized to {sm.minimal_generators}"
        )
    return sm


def wilf_function_semimodule(sm: GammaSemimodule, k: int) -> int:
    """k * delta - conductor for a semimodule (free-function spelling)."""
    return sm.wilf_value(k)


def wilf_gap(ns: NumericalSemigroup, g: int) -> int:
    """Wilf number of the gap g: 2*delta - conductor of the {0, g} semimodule."""
    sm = gap_semimodule(ns, g)
    value = 2 * sm.delta - sm.conductor
    if value != sm.wilf_value(2):
        raise InternalInconsistency("gap Wilf number disagrees with k=2 evaluation")
    return value


def wilf_gap_extremes(ns: NumericalSemigroup) -> dict:
    """Min and max of the gap Wilf numbers with their witness gaps."""
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid has no gaps")
    values = {g: wilf_gap(ns, g) for g in ns.gaps}
    lo = min(values.values())
    hi = max(values.values())
    return {
        "min": lo,
        "max": hi,
        "argmin_gaps": [g for g, v in values.items() if v == lo],
        "argmax_gaps": [g for g, v in values.items() if v == hi],
    }


def check_bound_conjecture(ns: NumericalSemigroup) -> dict:
    """Whether min over gaps of W(g) >= -(Wilf value at the embedding dimension).

    A False ``holds`` field is a conjecture counterexample: callers report
    it loudly, nothing is raised here.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid has no gaps")
    min_wg = min(wilf_gap(ns, g) for g in ns.gaps)
    minus_wilf_e = -(ns.embedding_dimension * ns.delta - ns.conductor)
    return {
        "holds": min_wg >= minus_wilf_e,
        "min_wg": min_wg,
        "minus_wilf_e": minus_wilf_e,
    }


def check_gap_wilf_max(ns: NumericalSemigroup) -> bool:
    """Assert max over gaps of W(g) <= 4*delta - conductor (a theorem)."""
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid has no gaps")
    top = max(wilf_gap(ns, g) for g in ns.gaps)
    wilf_at_4 = 4 * ns.delta - ns.conductor
    if top > wilf_at_4:
        raise InternalInconsistency(
            f"max gap Wilf number {top} exceeds k=4 value {wilf_at_4} for {ns!r}"
        )
    return True


def check_gap_wilf_range(ns: NumericalSemigroup) -> bool:
    """Assert max W(g) - min W(g) < 2*delta (a theorem).

    The spread of the gap Wilf function is strictly below twice delta.
    (The tempting sharper bound 2*delta - 2 is false: the semigroup
    generated by m, m+1, ..., 2m-1 has delta = 1 and spread 1 for every
    m >= 3, so only the strict form is asserted here.)
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid has no gaps")
    values = [wilf_gap(ns, g) for g in ns.gaps]
    spread = max(values) - min(values)
    if spread >= 2 * ns.delta:
        raise InternalInconsistency(
            f"gap Wilf spread {spread} is not below 2*delta for {ns!r}"
        )
    return True


def _gap_cliques(ns: NumericalSemigroup) -> Iterator[tuple[int, ...]]:
    """All sets of gaps with pairwise differences again gaps, in DFS order.

    These are the cliques (including the empty one) of the graph on gaps
    joining g and g' when |g - g'| is a gap; each clique, with 0 adjoined,
    is the minimal generating set of exactly one semimodule.
    """
    gaps = ns.gaps

    def extend(clique: list[int], start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(clique)
        for i in range(start, len(gaps)):
            g = gaps[i]
            if all(not ns.contains(g - h) for h in clique):
                clique.append(g)
                yield from extend(clique, i + 1)
                clique.pop()

    return extend([], 0)


def enumerate_semimodules(ns: NumericalSemigroup) -> Iterator[GammaSemimodule]:
    """Yield every semimodule over ns exactly once, by minimal generators.

    Deterministic depth-first order over generator sets ({0} plus a clique
    of the gap-difference graph), starting with the base itself.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid admits only itself")
    for clique in _gap_cliques(ns):
        sm = semimodule_from_generators(ns, (0, *clique))
        if sm.minimal_generators != (0, *clique):
            raise InternalInconsistency(
                f"clique {clique} minimized away to {sm.minimal_generators}"
            )
        yield sm


def oracle_semimodules(ns: NumericalSemigroup, limit_genus: int = 16) -> list[tuple[int, ...]]:
    """Canonical minimal-generator sets from a brute-force subset sweep.

    Takes every subset of the gap set, generates the semimodule it spans
    together with 0, and collects the distinct minimized generator tuples.
    Exponential in the genus; refuses beyond ``limit_genus``.  Used only to
    validate enumerate_semimodules.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid admits only itself")
    if ns.genus > limit_genus:
        raise ValueError(f"subset oracle limited to genus <= {limit_genus}")
    gaps = ns.gaps
    seen = set()
    for mask in range(1 << len(gaps)):
        subset = [g for i, g in enumerate(gaps) if (mask >> i) & 1]
        sm = semimodule_from_generators(ns, (0, *subset))
        seen.add(sm.minimal_generators)
    return sorted(seen)


def mu_gamma_delta(ns: NumericalSemigroup) -> int:
    """Least k making the Wilf value nonnegative for every semimodule at once."""
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid admits only itself")
    need = 0
    for sm in enumerate_semimodules(ns):
        if sm.conductor > 0:
            need = max(need, -(-sm.conductor // sm.delta))
    return need


def mu_delta_r(ns: NumericalSemigroup, r: int) -> int:
    """Same minimum restricted to semimodules with exactly r minimal generators.

    r counts the generator 0, so r = 1 selects only the base itself.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("the full monoid admits only itself")
    r = operator.index(r)
    if not 1 <= r <= ns.multiplicity:
        raise ValueError(f"generator count {r} outside [1, multiplicity]")
    need = None
    for sm in enumerate_semimodules(ns):
        if sm.gen_count != r:
            continue
        want = 0 if sm.conductor == 0 else -(-sm.conductor // sm.delta)
        need = want if need is None else max(need, want)
    if need is None:
        raise NoSuchSemimodule(f"no semimodule with {r} minimal generators")
    return need

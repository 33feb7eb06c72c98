"""Numerical semigroups: construction, membership, and classical invariants.

A numerical semigroup is a cofinite additive submonoid of the naturals.  The
canonical representation here is a big-integer membership bitmask over the
window [0, conductor + 2*multiplicity); membership beyond the window is
implied (every integer >= conductor belongs).  All invariants — gaps,
Frobenius number, conductor, delta, multiplicity, minimal generators, Apéry
sets, type, symmetry — are computed from that mask.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyInput,
    InternalInconsistency,
    NaturalsHasNoType,
    NotAMember,
    NotCofinite,
)

__all__ = [
    "AperySet",
    "NumericalSemigroup",
    "parse_generator_spec",
]


def parse_generator_spec(text: str) -> tuple[tuple[int, ...], int | None]:
    """Parse a generator spec string into (generators, threshold-or-None).

    The grammar is: comma-separated positive integers, with an optional
    ``@r`` suffix adding every integer >= r, e.g. ``"6,8,35"`` or
    ``"162,1114,1115@9879"``.  Whitespace is ignored.  With a threshold the
    generator list may be empty (``"@7"``).  Raises ValueError on malformed
    input.
    """
    body, sep, tail = text.partition("@")
    threshold = None
    if sep:
        try:
            threshold = int(tail.strip())
        except ValueError:
            raise ValueError(f"bad threshold {tail!r} in spec {text!r}") from None
        if threshold < 1:
            raise ValueError(f"threshold must be >= 1 in spec {text!r}")
    parts = [p.strip() for p in body.split(",") if p.strip()]
    if not parts and threshold is None:
        raise ValueError(f"empty generator spec {text!r}")
    try:
        gens = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad generator list in spec {text!r}") from None
    if any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive in spec {text!r}")
    return gens, threshold


def _bit_positions(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of x, ascending."""
    while x:
        lsb = x & -x
        yield lsb.bit_length() - 1
        x ^= lsb


def _closure_bits(gens: tuple[int, ...], window: int) -> int:
    """Membership bitmask over [0, window) of the monoid generated by gens.

    Doubling closure: each round ORs in every single-generator translate of
    the current set, so after k rounds all sums of up to 2**k generators are
    present; iterate to a fixpoint (O(log window) rounds).
    """
    mask = (1 << window) - 1
    bits = 1
    while True:
        prev = bits
        for g in gens:
            bits |= bits << g
        bits &= mask
        if bits == prev:
            return bits


@dataclass(frozen=True)
class AperySet:
    """The s smallest semigroup elements in each residue class mod s.

    ``elements`` is sorted ascending (w_0 = 0 < w_1 < ... < w_{s-1}); the
    residue-indexed view, where entry i is the least element congruent to
    i mod s, is available through :meth:`by_residue`.
    """

    modulus: int
    elements: tuple[int, ...]

    def by_residue(self) -> tuple[int, ...]:
        """Return the elements reordered so that entry i is ≡ i (mod s)."""
        out: list[int | None] = [None] * self.modulus
        for w in self.elements:
            out[w % self.modulus] = w
        assert all(w is not None for w in out)
        return tuple(out)  # type: ignore[arg-type]


class NumericalSemigroup:
    """Immutable numerical semigroup with cached classical invariants."""

    __slots__ = (
        "_gens",
        "_m",
        "_conductor",
        "_bits",
        "_window",
        "_gaps",
        "_type",
        "_min_apery",
        "_membership",
    )

    def __init__(self, *, _gens, _m, _conductor, _bits, _window, _gaps):
        self._gens = _gens
        self._m = _m
        self._conductor = _conductor
        self._bits = _bits
        self._window = _window
        self._gaps = _gaps
        self._type = None
        self._min_apery = None
        self._membership = None

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """The smallest numerical semigroup containing ``gens``.

        The input need not be minimal; minimal generators are recomputed.
        Raises EmptyInput for an empty list and NotCofinite when
        gcd(gens) != 1.
        """
        gens = cls._validated(gens)
        if not gens:
            raise EmptyInput("at least one generator is required")
        if gens[0] == 1:
            return cls._naturals()
        if math.gcd(*gens) != 1:
            raise NotCofinite(f"gcd of generators {gens} exceeds 1")
        m = gens[0]
        window = 4 * gens[-1] + 2 * m + 2
        while True:
            bits = _closure_bits(gens, window)
            conductor = cls._find_conductor(bits, window, m)
            if conductor is not None:
                break
            window *= 2
        return cls._from_member_bits(bits, conductor, m)

    @classmethod
    def from_generators_with_threshold(
        cls, gens: Iterable[int], r: int
    ) -> "NumericalSemigroup":
        """The smallest semigroup containing ``gens`` and every integer >= r.

        ``gens`` may be empty; the result is always cofinite.
        """
        r = operator.index(r)
        if r < 1:
            raise ValueError(f"threshold must be >= 1, got {r}")
        gens = cls._validated(gens)
        if r == 1 or (gens and gens[0] == 1):
            return cls._naturals()
        low = _closure_bits(gens, r) if gens else 1
        conductor = r
        while conductor > 0 and (low >> (conductor - 1)) & 1:
            conductor -= 1
        m = min(gens[0], r) if gens else r
        window = conductor + 2 * m
        bits = _closure_bits(gens, window) if gens else 1 & ((1 << window) - 1)
        if window > r:
            bits |= ((1 << (window - r)) - 1) << r
        bits &= (1 << window) - 1
        return cls._from_member_bits(bits, conductor, m)

    @classmethod
    def from_gap_bits(cls, gap_bits: int) -> "NumericalSemigroup":
        """Build a semigroup from the bitmask of its gap set.

        The caller guarantees the complement is closed under addition (this
        is how the enumeration tree hands off nodes); invariants that would
        catch a violation (gcd of minimal generators, e <= m) are asserted.
        """
        if gap_bits == 0:
            return cls._naturals()
        if gap_bits & 1:
            raise ValueError("0 cannot be a gap")
        conductor = gap_bits.bit_length()
        m = next(n for n in range(1, conductor + 2) if not (gap_bits >> n) & 1)
        window = conductor + 2 * m
        bits = ((1 << window) - 1) ^ gap_bits
        return cls._from_member_bits(bits, conductor, m)

    @staticmethod
    def _validated(gens: Iterable[int]) -> tuple[int, ...]:
        out = sorted({operator.index(g) for g in gens})
        if any(g < 1 for g in out):
            raise ValueError(f"generators must be positive, got {out}")
        return tuple(out)

    @staticmethod
    def _find_conductor(bits: int, window: int, m: int) -> int | None:
        """Least c with [c, c+m) fully inside the mask, or None if unseen."""
        runs = bits
        for i in range(1, m):
            runs &= bits >> i
        runs &= (1 << max(0, window - m + 1)) - 1
        if runs == 0:
            return None
        return (runs & -runs).bit_length() - 1

    @classmethod
    def _naturals(cls) -> "NumericalSemigroup":
        return cls(_gens=(1,), _m=1, _conductor=0, _bits=0b11, _window=2, _gaps=())

    @classmethod
    def _from_member_bits(cls, bits: int, conductor: int, m: int) -> "NumericalSemigroup":
        """Finish construction from a membership mask exact below the conductor."""
        window = conductor + 2 * m
        mask = (1 << window) - 1
        bits &= mask
        # the caller's mask may cover less than the full window; everything
        # at or above the conductor is a member by definition, so the tail
        # can always be completed from the conductor alone
        bits |= ((1 << (window - conductor)) - 1) << conductor
        gap_bits = ((1 << conductor) - 1) ^ (bits & ((1 << conductor) - 1))
        gaps = tuple(_bit_positions(gap_bits))
        nonzero = bits & ~1
        sumset = 0
        for x in _bit_positions(nonzero):
            sumset |= nonzero << x
        gens = tuple(_bit_positions(nonzero & ~sumset & mask))
        ns = cls(
            _gens=gens,
            _m=m,
            _conductor=conductor,
            _bits=bits,
            _window=window,
            _gaps=gaps,
        )
        if math.gcd(*gens) != 1:
            raise InternalInconsistency(f"minimal generators {gens} not coprime")
        if not (len(gens) <= m and gens[0] == m):
            raise InternalInconsistency(
                f"embedding dimension {len(gens)} vs multiplicity {m}"
            )
        return ns

    # ------------------------------------------------------------------
    # plain accessors
    # ------------------------------------------------------------------

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        return self._gens

    @property
    def multiplicity(self) -> int:
        return self._m

    @property
    def frobenius(self) -> int:
        return self._conductor - 1

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def delta(self) -> int:
        """Number of semigroup elements strictly below the conductor."""
        return self._conductor - len(self._gaps)

    @property
    def embedding_dimension(self) -> int:
        return len(self._gens)

    @property
    def is_naturals(self) -> bool:
        return self._conductor == 0

    @property
    def member_bits(self) -> int:
        """Membership bitmask over [0, window); beyond it membership is implied."""
        return self._bits

    @property
    def window(self) -> int:
        return self._window

    @property
    def membership(self) -> tuple[bool, ...]:
        """Membership table over [0, conductor + 2*multiplicity)."""
        if self._membership is None:
            bits = self._bits
            self._membership = tuple(
                bool((bits >> n) & 1) for n in range(self._window)
            )
        return self._membership

    # ------------------------------------------------------------------
    # membership and divisibility
    # ------------------------------------------------------------------

    def contains(self, n: int) -> bool:
        """True iff n is an element (False for negatives, True for n >= c)."""
        if n < 0:
            return False
        if n >= self._conductor:
            return True
        return bool((self._bits >> n) & 1)

    __contains__ = contains

    def member_bits_extended(self, upto: int) -> int:
        """Membership bitmask over [0, upto) for any window size."""
        mask = (1 << upto) - 1
        bits = self._bits & mask
        if upto > self._window:
            bits |= (((1 << (upto - self._window)) - 1) << self._window) & mask
        return bits

    def divides(self, s: int, t: int) -> bool:
        """True iff t - s is an element; s and t must both be elements."""
        if not self.contains(s):
            raise NotAMember(f"{s} is not an element")
        if not self.contains(t):
            raise NotAMember(f"{t} is not an element")
        return self.contains(t - s)

    # ------------------------------------------------------------------
    # Apéry sets, type, symmetry
    # ------------------------------------------------------------------

    def apery_set(self, s: int) -> AperySet:
        """Apéry set with respect to s: the elements w with w - s a non-element."""
        if s == 0 or not self.contains(s):
            raise NotAMember(f"Apéry modulus {s} must be a nonzero element")
        elements = tuple(
            n
            for n in range(self._conductor + s)
            if self.contains(n) and not self.contains(n - s)
        )
        if len(elements) != s:
            raise InternalInconsistency(
                f"Apéry set mod {s} has {len(elements)} elements"
            )
        return AperySet(s, elements)

    def type_of(self) -> int:
        """Number of maximal nonzero Apéry elements under the division order."""
        if self.is_naturals:
            raise NaturalsHasNoType("the full monoid of naturals has no type")
        if self._type is None:
            ap = self.apery_set(self._m).elements[1:]
            self._type = sum(
                1
                for w in ap
                if not any(v != w and self.contains(v - w) for v in ap)
            )
        return self._type

    def min_apery_count(self) -> int:
        """Number of minimal nonzero Apéry elements under the division order.

        These are exactly the minimal generators other than the multiplicity,
        so the count equals embedding_dimension - 1; the census is computed
        from the order, not assumed.
        """
        if self.is_naturals:
            raise NaturalsHasNoType("the full monoid of naturals has no type")
        if self._min_apery is None:
            ap = self.apery_set(self._m).elements[1:]
            self._min_apery = sum(
                1
                for w in ap
                if not any(v != w and self.contains(w - v) for v in ap)
            )
        return self._min_apery

    def is_symmetric(self) -> bool:
        """Whether z is an element exactly when F - z is not.

        Evaluates both characterizations — the reflection property and
        conductor == 2 * delta — and insists they agree.
        """
        by_counts = self._conductor == 2 * self.delta
        frob = self._conductor - 1
        by_reflection = all(
            self.contains(z) != self.contains(frob - z) for z in range(self._conductor)
        )
        if by_counts != by_reflection:
            raise InternalInconsistency(
                f"symmetry characterizations disagree for {self!r}"
            )
        return by_counts

    # ------------------------------------------------------------------
    # serialization and dunder plumbing
    # ------------------------------------------------------------------

    def to_record(self) -> dict:
        """Canonical invariant record (the ``info`` command's payload)."""
        record = {
            "generators": list(self._gens),
            "multiplicity": self._m,
            "frobenius": self.frobenius,
            "conductor": self._conductor,
            "genus": self.genus,
            "delta": self.delta,
            "embedding_dimension": self.embedding_dimension,
        }
        if not self.is_naturals:
            record["type"] = self.type_of()
        record["symmetric"] = self.is_symmetric()
        return record

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gens == other._gens

    def __hash__(self) -> int:
        return hash(self._gens)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self._gens))})"

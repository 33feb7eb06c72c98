"""Two-generator semigroups: lattice coordinates and closed-form gap Wilf numbers.

Every gap g of the semigroup generated by coprime alpha < beta has a unique
writing g = alpha*beta - a*alpha - b*beta with 1 <= a < beta, 1 <= b < alpha;
in these coordinates the Wilf number of the gap, the conductor and delta of
the {0, g} semimodule, and the sign-flip mirror symmetry all have closed
forms.  This module provides the object-level functions (each one asserted
against the union-sieve semimodule implementation) and a bulk verifier that
checks every closed form for every gap of every coprime pair with
alpha*beta below a bound, using packed-word scans and one exact big-integer
correlation per pair.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from functools import lru_cache

import gmpy2
import numpy as np

from .errors import InternalInconsistency, NotAGap, NotCoprime
from .semigroup import NumericalSemigroup
from .semimodule import gap_semimodule, wilf_gap

__all__ = [
    "LatticeGap",
    "VerificationReport",
    "check_symmetry",
    "check_two_gen_family",
    "coords_to_gap",
    "gap_coords",
    "in_gap_triangle",
    "in_right_subtriangle",
    "in_upper_subtriangle",
    "min_gamma_intersection",
    "semimodule_closed_forms",
    "two_gen_semigroup",
    "verify_closed_forms",
    "verify_pair",
    "wilf_gap_closed_form",
]


def _validate_pair(alpha: int, beta: int) -> tuple[int, int]:
    alpha = operator.index(alpha)
    beta = operator.index(beta)
    if not 2 <= alpha < beta:
        raise ValueError(f"need 2 <= alpha < beta, got ({alpha}, {beta})")
    if math.gcd(alpha, beta) != 1:
        raise NotCoprime(f"({alpha}, {beta}) are not coprime")
    return alpha, beta


@lru_cache(maxsize=256)
def two_gen_semigroup(alpha: int, beta: int) -> NumericalSemigroup:
    """Cached semigroup generated by a validated coprime pair."""
    alpha, beta = _validate_pair(alpha, beta)
    return NumericalSemigroup.from_generators((alpha, beta))


@dataclass(frozen=True)
class LatticeGap:
    """A gap of the (alpha, beta) semigroup in its unique lattice coordinates."""

    alpha: int
    beta: int
    a: int
    b: int
    gap_value: int

    def __post_init__(self):
        _validate_pair(self.alpha, self.beta)
        if not 1 <= self.a <= self.beta - 1:
            raise ValueError(f"a = {self.a} outside [1, beta-1]")
        if not 1 <= self.b <= self.alpha - 1:
            raise ValueError(f"b = {self.b} outside [1, alpha-1]")
        expected = self.alpha * self.beta - self.a * self.alpha - self.b * self.beta
        if self.gap_value != expected:
            raise ValueError(
                f"gap value {self.gap_value} != coordinate value {expected}"
            )
        if self.gap_value <= 0:
            raise ValueError(f"coordinates ({self.a}, {self.b}) lie outside the triangle")


def gap_coords(alpha: int, beta: int, g: int) -> LatticeGap:
    """Lattice coordinates of a gap: the unique (a, b) with g = ab-aa-bb form."""
    alpha, beta = _validate_pair(alpha, beta)
    g = operator.index(g)
    if g <= 0 or two_gen_semigroup(alpha, beta).contains(g):
        raise NotAGap(f"{g} is not a gap of the ({alpha}, {beta}) semigroup")
    a = (-g * pow(alpha, -1, beta)) % beta
    b, rem = divmod(alpha * beta - a * alpha - g, beta)
    if rem != 0:
        raise InternalInconsistency(f"no lattice coordinates for gap {g}")
    return LatticeGap(alpha=alpha, beta=beta, a=a, b=b, gap_value=g)


def coords_to_gap(lg: LatticeGap) -> int:
    """The gap value of a lattice point (round-trips with gap_coords)."""
    ns = two_gen_semigroup(lg.alpha, lg.beta)
    if ns.contains(lg.gap_value):
        raise NotAGap(f"{lg.gap_value} is not a gap")
    return lg.gap_value


def in_gap_triangle(alpha: int, beta: int, a: int, b: int) -> bool:
    """Whether (a, b) is a valid lattice point: positive, below the diagonal.

    Boundary convention: strict on the diagonal a*alpha + b*beta = alpha*beta
    (no integer gap lies on it), inclusive on the half-lines a >= 1, b >= 1.
    """
    _validate_pair(alpha, beta)
    return a >= 1 and b >= 1 and a * alpha + b * beta < alpha * beta


def in_right_subtriangle(lg: LatticeGap) -> bool:
    """Points with a*alpha > b*beta (mirrored horizontally to (beta-a, b)).

    Equality a*alpha = b*beta never holds for valid coordinates, so the two
    subtriangles partition the gap triangle with no boundary cases.
    """
    return lg.a * lg.alpha > lg.b * lg.beta


def in_upper_subtriangle(lg: LatticeGap) -> bool:
    """Points with b*beta > a*alpha (mirrored vertically to (a, alpha-b))."""
    return lg.b * lg.beta > lg.a * lg.alpha


def min_gamma_intersection(ns: NumericalSemigroup, g: int) -> int:
    """Least element of the intersection of ns with its g-translate.

    Only defined here for two-generator semigroups, where the minimum is
    asserted to be one of alpha*beta - a*alpha and alpha*beta - b*beta.
    """
    if ns.embedding_dimension != 2:
        raise ValueError("minimal intersection is a two-generator operation")
    g = operator.index(g)
    if g <= 0 or ns.contains(g):
        raise NotAGap(f"{g} is not a gap of {ns!r}")
    window = g + ns.conductor + 1
    ext = ns.member_bits_extended(window)
    inter = ext & (ext << g) & ((1 << window) - 1)
    if inter == 0:
        raise InternalInconsistency(f"empty translate intersection for gap {g}")
    mini = (inter & -inter).bit_length() - 1
    alpha, beta = ns.minimal_generators
    lg = gap_coords(alpha, beta, g)
    candidates = {alpha * beta - lg.a * alpha, alpha * beta - lg.b * beta}
    if mini not in candidates:
        raise InternalInconsistency(
            f"minimal intersection {mini} for gap {g} not among {sorted(candidates)}"
        )
    return mini


def wilf_gap_closed_form(lg: LatticeGap) -> int:
    """Closed-form Wilf number of a lattice gap, asserted against the sieve.

    With M = min of the translate intersection: -W = a*alpha - 2ab when
    M = alpha*beta - b*beta, and -W = b*beta - 2ab when M = alpha*beta - a*alpha.
    """
    ns = two_gen_semigroup(lg.alpha, lg.beta)
    mini = min_gamma_intersection(ns, lg.gap_value)
    ab = lg.a * lg.b
    if mini == lg.alpha * lg.beta - lg.b * lg.beta:
        minus_w = lg.a * lg.alpha - 2 * ab
    else:
        minus_w = lg.b * lg.beta - 2 * ab
    value = -minus_w
    sieved = wilf_gap(ns, lg.gap_value)
    if value != sieved:
        raise InternalInconsistency(
            f"closed form {value} != sieve {sieved} for gap {lg.gap_value} "
            f"of ({lg.alpha}, {lg.beta})"
        )
    return value


def semimodule_closed_forms(lg: LatticeGap) -> dict:
    """Closed-form conductor and delta of the {0, g} semimodule.

    conductor = c - a*alpha or c - b*beta (per the translate-minimum branch);
    delta = conductor - delta(base) + a*b.  Both asserted against the sieve.
    """
    ns = two_gen_semigroup(lg.alpha, lg.beta)
    mini = min_gamma_intersection(ns, lg.gap_value)
    if mini == lg.alpha * lg.beta - lg.b * lg.beta:
        conductor = ns.conductor - lg.a * lg.alpha
    else:
        conductor = ns.conductor - lg.b * lg.beta
    delta = conductor - ns.delta + lg.a * lg.b
    sm = gap_semimodule(ns, lg.gap_value)
    if (conductor, delta) != (sm.conductor, sm.delta):
        raise InternalInconsistency(
            f"closed forms (c={conductor}, delta={delta}) != sieve "
            f"(c={sm.conductor}, delta={sm.delta}) for gap {lg.gap_value}"
        )
    return {"conductor": conductor, "delta": delta}


def check_symmetry(alpha: int, beta: int) -> bool:
    """Assert the sign-flip mirror identity for every gap, via sieve values.

    Each gap (a, b) has exactly one valid mirror — (a, alpha-b) when
    b*beta > a*alpha, else (beta-a, b) — whose gap value is |a*alpha - b*beta|
    and whose Wilf number must be the negation.
    """
    alpha, beta = _validate_pair(alpha, beta)
    ns = two_gen_semigroup(alpha, beta)
    values = {g: wilf_gap(ns, g) for g in ns.gaps}
    for g in ns.gaps:
        lg = gap_coords(alpha, beta, g)
        mirror_value = abs(lg.a * lg.alpha - lg.b * lg.beta)
        mirror = gap_coords(alpha, beta, mirror_value)
        if in_upper_subtriangle(lg):
            expected_coords = (lg.a, alpha - lg.b)
        else:
            expected_coords = (beta - lg.a, lg.b)
        if (mirror.a, mirror.b) != expected_coords:
            raise InternalInconsistency(
                f"mirror of gap {g} is {mirror.a, mirror.b}, expected {expected_coords}"
            )
        if values[mirror_value] != -values[g]:
            raise InternalInconsistency(
                f"sign flip fails: W({mirror_value}) != -W({g}) for ({alpha}, {beta})"
            )
    return True


def check_two_gen_family(alpha: int, beta: int) -> bool:
    """Assert the two-generator semimodule facts over every gap.

    For each gap semimodule: Wilf value at 3 is nonnegative.  Over the gap
    census: max W(g) = -min W(g) < delta(base).  When alpha >= 3, some gap
    has negative Wilf number (so the least k with all values nonnegative is
    exactly 3) and alpha*beta - 2(alpha+beta) + 2 >= 0; when alpha = 2 every
    W(g) is zero and k = 2 already suffices.
    """
    alpha, beta = _validate_pair(alpha, beta)
    ns = two_gen_semigroup(alpha, beta)
    values = []
    mu_two = 0
    for g in ns.gaps:
        sm = gap_semimodule(ns, g)
        if sm.wilf_value(3) < 0:
            raise InternalInconsistency(
                f"negative Wilf value at 3 for gap {g} of ({alpha}, {beta})"
            )
        values.append(2 * sm.delta - sm.conductor)
        if sm.conductor > 0:
            mu_two = max(mu_two, -(-sm.conductor // sm.delta))
    if max(values) != -min(values):
        raise InternalInconsistency(f"max != -min over gaps of ({alpha}, {beta})")
    if max(values) >= ns.delta:
        raise InternalInconsistency(f"gap Wilf maximum reaches delta for ({alpha}, {beta})")
    if alpha >= 3:
        if alpha * beta - 2 * (alpha + beta) + 2 < 0:
            raise InternalInconsistency(f"triangle arithmetic fails for ({alpha}, {beta})")
        if min(values) >= 0 or mu_two != 3:
            raise InternalInconsistency(
                f"expected a negative gap Wilf number and threshold 3 for ({alpha}, {beta})"
            )
    else:
        if any(values) or mu_two > 2:
            raise InternalInconsistency(
                f"alpha = 2 family must have all-zero gap Wilf numbers, got {values}"
            )
    return True


# ----------------------------------------------------------------------
# bulk verifier
# ----------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Aggregate outcome of the bulk closed-form verification."""

    max_product: int
    pairs_checked: int = 0
    gaps_checked: int = 0
    checks: dict = field(default_factory=dict)

    def count(self, name: str, amount: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + amount


def _pair_arrays(alpha: int, beta: int) -> dict:
    """All per-gap quantities for one pair, by the bulk (non-sieve) method.

    Membership comes from the residue threshold form (n belongs iff
    n >= beta * ((n * beta^-1) mod alpha)); the semimodule genus from an
    exact big-integer autocorrelation of the gap indicator; conductor and
    translate minimum from the packed-word scan kernel.
    """
    from . import _scan

    ab = alpha * beta
    c = (alpha - 1) * (beta - 1)
    delta_gamma = c // 2
    beta_inv = pow(beta, -1, alpha)
    thresholds = (np.arange(alpha, dtype=np.int64) * beta_inv % alpha) * beta
    n = np.arange(ab, dtype=np.int64)
    member = n >= thresholds[n % alpha]
    gap_indicator = ~member[:c]
    gap_values = np.nonzero(gap_indicator)[0].astype(np.int64)

    alpha_inv = pow(alpha, -1, beta)
    a = (-gap_values % beta) * alpha_inv % beta
    b, rem = np.divmod(ab - a * alpha - gap_values, beta)
    if np.any(rem) or not (a.min() >= 1 and a.max() <= beta - 1
                           and b.min() >= 1 and b.max() <= alpha - 1):
        raise InternalInconsistency(f"lattice coordinates failed for ({alpha}, {beta})")

    gap_u8 = gap_indicator.astype(np.uint16)
    fwd = gmpy2.mpz(int.from_bytes(gap_u8.astype("<u2").tobytes(), "little"))
    rev = gmpy2.mpz(int.from_bytes(gap_u8[::-1].astype("<u2").tobytes(), "little"))
    raw = int(fwd * rev).to_bytes(4 * c, "little")
    acf = np.frombuffer(raw, dtype="<u2")
    if int(acf[c - 1]) != delta_gamma:
        raise InternalInconsistency(f"autocorrelation self-check failed for ({alpha}, {beta})")
    gaps_below = np.cumsum(gap_indicator) - gap_indicator
    genus_sm = gaps_below[gap_values] + acf[c - 1 - gap_values].astype(np.int64)

    gap_words = _scan.pack_words(gap_indicator)
    member_words = _scan.pack_words(member)
    cond = np.empty(gap_values.size, dtype=np.int64)
    mini = np.empty(gap_values.size, dtype=np.int64)
    _scan.scan_pair(gap_words, member_words, gap_values, cond, mini)

    delta_sm = cond - genus_sm
    wilf = 2 * delta_sm - cond
    return {
        "alpha": alpha,
        "beta": beta,
        "conductor_gamma": c,
        "delta_gamma": delta_gamma,
        "gaps": gap_values,
        "a": a,
        "b": b,
        "cond": cond,
        "min_intersection": mini,
        "delta": delta_sm,
        "genus": genus_sm,
        "wilf": wilf,
    }


def _check_pair(arrs: dict, report: VerificationReport) -> None:
    """Run every closed-form assertion on one pair's arrays."""
    alpha = arrs["alpha"]
    beta = arrs["beta"]
    ab = alpha * beta
    c = arrs["conductor_gamma"]
    delta_gamma = arrs["delta_gamma"]
    gaps = arrs["gaps"]
    a = arrs["a"]
    b = arrs["b"]
    cond = arrs["cond"]
    mini = arrs["min_intersection"]
    delta_sm = arrs["delta"]
    wilf = arrs["wilf"]

    def fail(name: str, mask) -> None:
        g = int(gaps[np.argmax(mask)])
        raise InternalInconsistency(
            f"{name} fails for gap {g} of ({alpha}, {beta})"
        )

    if gaps.size != delta_gamma:
        raise InternalInconsistency(f"gap census wrong for ({alpha}, {beta})")
    report.count("coords_unique", gaps.size)

    aa = a * alpha
    bb = b * beta
    two_ab = 2 * a * b
    branch_b = mini == ab - bb
    branch_a = mini == ab - aa
    stray = ~(branch_a | branch_b)
    if np.any(stray):
        fail("translate minimum outside candidate set", stray)
    if np.any(branch_a & branch_b):
        fail("ambiguous translate minimum", branch_a & branch_b)
    report.count("min_in_candidates", gaps.size)

    minus_w = np.where(branch_b, aa - two_ab, bb - two_ab)
    bad = minus_w != -wilf
    if np.any(bad):
        fail("closed-form Wilf number", bad)
    report.count("closed_form_wilf", gaps.size)

    cond_form = np.where(branch_b, c - aa, c - bb)
    bad = cond_form != cond
    if np.any(bad):
        fail("closed-form conductor", bad)
    report.count("conductor_form", gaps.size)

    delta_form = cond_form - delta_gamma + a * b
    bad = delta_form != delta_sm
    if np.any(bad):
        fail("closed-form delta", bad)
    report.count("delta_form", gaps.size)

    wilf_by_gap = np.zeros(c, dtype=np.int64)
    wilf_by_gap[gaps] = wilf
    mirror_values = np.abs(aa - bb)
    out_of_range = (mirror_values <= 0) | (mirror_values >= c)
    if np.any(out_of_range):
        fail("mirror value in gap range", out_of_range)
    gap_set = np.zeros(c, dtype=bool)
    gap_set[gaps] = True
    if not np.all(gap_set[mirror_values]):
        fail("mirror point is a gap", ~gap_set[mirror_values])
    bad = wilf_by_gap[mirror_values] != -wilf
    if np.any(bad):
        fail("mirror sign flip", bad)
    report.count("mirror_sign_flip", gaps.size)

    bad = 3 * delta_sm - cond < 0
    if np.any(bad):
        fail("Wilf value at 3 nonnegative", bad)
    report.count("wilf_at_3_nonneg", gaps.size)

    top = int(wilf.max())
    bottom = int(wilf.min())
    if top != -bottom or top >= delta_gamma:
        raise InternalInconsistency(
            f"extremes identity fails for ({alpha}, {beta}): "
            f"max {top}, min {bottom}, delta {delta_gamma}"
        )
    report.count("max_equals_minus_min_below_delta")

    if alpha >= 3:
        if ab - 2 * (alpha + beta) + 2 < 0:
            raise InternalInconsistency(f"triangle arithmetic fails for ({alpha}, {beta})")
        if bottom >= 0:
            raise InternalInconsistency(
                f"no negative gap Wilf number for ({alpha}, {beta}) with alpha >= 3"
            )
    elif top != 0 or bottom != 0:
        raise InternalInconsistency(f"nonzero gap Wilf number for (2, {beta})")
    report.count("family_profile")

    report.pairs_checked += 1
    report.gaps_checked += gaps.size


def verify_pair(alpha: int, beta: int) -> dict:
    """Bulk-method arrays for one pair, with every closed-form check run."""
    alpha, beta = _validate_pair(alpha, beta)
    arrs = _pair_arrays(alpha, beta)
    report = VerificationReport(max_product=alpha * beta)
    _check_pair(arrs, report)
    arrs["checks"] = report.checks
    return arrs


def coprime_pairs(max_product: int):
    """All (alpha, beta) with 2 <= alpha < beta, coprime, alpha*beta <= bound."""
    for alpha in range(2, int(math.isqrt(max_product)) + 1):
        for beta in range(alpha + 1, max_product // alpha + 1):
            if math.gcd(alpha, beta) == 1:
                yield alpha, beta


def verify_closed_forms(max_product: int = 20000, progress=None) -> VerificationReport:
    """Verify every closed form for every coprime pair with product <= bound.

    Raises InternalInconsistency at the first failing check; otherwise
    returns the aggregate report.  ``progress``, if given, is called as
    progress(pairs_done) every 2048 pairs.
    """
    report = VerificationReport(max_product=max_product)
    for alpha, beta in coprime_pairs(max_product):
        _check_pair(_pair_arrays(alpha, beta), report)
        if progress is not None and report.pairs_checked % 2048 == 0:
            progress(report.pairs_checked)
    return report

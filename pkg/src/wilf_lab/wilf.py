"""Wilf-function analysis for numerical semigroups.

Implements the linear Wilf function W(k) = k*delta - c, its first
nonnegative argument mu, interval statistics over the window [0, c), the
double-evaluation inequality check, the extreme-behaviour classification,
the Apéry level deficit B, and the conductor-equality (c = e*delta) report.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .errors import InternalInconsistency, NaturalsUnsupported
from .semigroup import NumericalSemigroup

__all__ = [
    "Classification",
    "IntervalStats",
    "apery_level_deficit",
    "check_wilf_inequality",
    "classify_extreme",
    "conductor_equality_report",
    "interval_stats",
    "max_family_params",
    "mu",
    "mu_report",
    "wilf_report",
    "wilf_value",
]


@dataclass(frozen=True)
class IntervalStats:
    """Occupancy statistics of the length-m blocks I_a = [a*m, (a+1)*m).

    ``L`` is the index of the block containing the Frobenius number, so
    c = L*m + rho with 2 <= rho <= m.  ``n[a]`` counts the elements of the
    a-th block below the Frobenius number, for a = 0..L.  ``eta[j-1]``
    counts the blocks containing exactly j elements (j = 1..m-1);
    ``eps[j-1]`` is the same count restricted to blocks 0..L-1.
    """

    L: int
    rho: int
    n: tuple[int, ...]
    eta: tuple[int, ...]
    eps: tuple[int, ...]


def interval_stats(ns: NumericalSemigroup) -> IntervalStats:
    """Block statistics of ns, cross-checked against the Apéry identity.

    The eta vector is computed both by direct block counting and as the
    consecutive differences floor(w_j/m) - floor(w_{j-1}/m) over the sorted
    Apéry set; disagreement raises InternalInconsistency.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("block statistics need a nonzero conductor")
    m = ns.multiplicity
    c = ns.conductor
    frob = c - 1
    L = frob // m
    rho = c - L * m
    if not 2 <= rho <= m:
        raise InternalInconsistency(f"block remainder {rho} outside [2, {m}]")
    n = []
    block_sizes = []
    for a in range(L + 1):
        lo = a * m
        members = [s for s in range(lo, lo + m) if ns.contains(s)]
        n.append(sum(1 for s in members if s < frob))
        block_sizes.append(len(members))
    n = tuple(n)
    if sum(n) != ns.delta:
        raise InternalInconsistency(f"block counts {n} do not sum to delta")
    if any(not 1 <= v <= m - 1 for v in n):
        raise InternalInconsistency(f"block count outside [1, m-1] in {n}")
    if any(n[a] > n[a + 1] for a in range(L - 1)):
        raise InternalInconsistency(f"block counts {n} not monotone below L")
    for a in range(L):
        if n[a] != block_sizes[a]:
            raise InternalInconsistency(
                f"block {a} census {block_sizes[a]} != below-Frobenius count {n[a]}"
            )
    eta = [0] * (m - 1)
    eps = [0] * (m - 1)
    for a, size in enumerate(block_sizes):
        if 1 <= size <= m - 1:
            eta[size - 1] += 1
            if a <= L - 1:
                eps[size - 1] += 1
    apery = ns.apery_set(m).elements
    eta_from_apery = [apery[j] // m - apery[j - 1] // m for j in range(1, m)]
    if eta != eta_from_apery:
        raise InternalInconsistency(
            f"eta by counting {eta} != eta from Apéry differences {eta_from_apery}"
        )
    if sum((j + 1) * v for j, v in enumerate(eta)) + rho - m != ns.delta:
        raise InternalInconsistency("weighted eta sum does not reproduce delta")
    return IntervalStats(L=L, rho=rho, n=n, eta=tuple(eta), eps=tuple(eps))


def wilf_value(ns: NumericalSemigroup, k: int) -> int:
    """k * delta - c (exact; zero for the full monoid at every k)."""
    k = operator.index(k)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return k * ns.delta - ns.conductor


def wilf_report(ns: NumericalSemigroup, ks) -> list[dict]:
    """One row {k, delta, conductor, wilf_value} per requested k."""
    return [
        {
            "k": operator.index(k),
            "delta": ns.delta,
            "conductor": ns.conductor,
            "wilf_value": wilf_value(ns, k),
        }
        for k in ks
    ]


def mu(ns: NumericalSemigroup) -> int:
    """Least k with wilf_value(ns, k) >= 0; 1 for the full monoid.

    For a proper semigroup this is ceil(c/delta) and always lies in
    [2, multiplicity].
    """
    if ns.is_naturals:
        return 1
    value = -(-ns.conductor // ns.delta)
    if not 2 <= value <= ns.multiplicity:
        raise InternalInconsistency(
            f"mu {value} outside [2, m] for {ns!r}"
        )
    return value


def mu_report(ns: NumericalSemigroup) -> dict:
    """Summary of mu against the embedding dimension."""
    k = mu(ns)
    e = ns.embedding_dimension
    return {
        "mu": k,
        "wilf_at_mu": wilf_value(ns, k),
        "embedding_dimension": e,
        "wilf_at_e": wilf_value(ns, e),
        "gap_e_minus_mu": e - k,
    }


def check_wilf_inequality(ns: NumericalSemigroup, k: int) -> bool:
    """Whether c <= k*delta, evaluated two independent ways.

    Evaluates the direct inequality and the block form
    sum_{a=0..L}(k*n_a - m) + m - rho, which must equal k*delta - c exactly;
    for k = m the single-block rewriting m*sum(n_a - 1) + m - rho is also
    required to agree.  Any mismatch raises InternalInconsistency.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("inequality check needs a nonzero conductor")
    k = operator.index(k)
    stats = interval_stats(ns)
    m = ns.multiplicity
    direct = wilf_value(ns, k)
    block_form = sum(k * v - m for v in stats.n) + m - stats.rho
    if block_form != direct:
        raise InternalInconsistency(
            f"block form {block_form} != direct Wilf value {direct} at k={k}"
        )
    if k == m:
        single = m * sum(v - 1 for v in stats.n) + m - stats.rho
        if single != direct:
            raise InternalInconsistency(
                f"multiplicity rewriting {single} != direct value {direct}"
            )
    return direct >= 0


@dataclass(frozen=True)
class Classification:
    """Extreme-behaviour label with structural parameters.

    label is one of "Naturals", "MaxFamily" (params = (m, q) for the
    semigroup generated by m and qm+1..qm+m-1), "TwoGenSymmetric"
    (params = the two minimal generators), "Other" (params empty).
    """

    label: str
    params: tuple[int, ...] = field(default=())


def max_family_params(ns: NumericalSemigroup) -> tuple[int, int] | None:
    """(m, q) when ns is generated by {m, qm+1, ..., qm+m-1}, else None.

    This is the maximal-embedding-dimension family with conductor q*m; the
    detection is structural (from the minimal generators).  A positive
    detection is cross-checked against the two numeric signatures of the
    family — Wilf value 0 at k = m, and type m - 1.
    """
    if ns.is_naturals:
        return None
    m = ns.multiplicity
    gens = ns.minimal_generators
    if len(gens) != m:
        return None
    q, rem = divmod(gens[1] - 1, m)
    if rem != 0 or q < 1:
        return None
    if gens != (m, *[q * m + i for i in range(1, m)]):
        return None
    if wilf_value(ns, m) != 0:
        raise InternalInconsistency(
            f"structural max family {ns!r} has nonzero Wilf value at m"
        )
    if ns.type_of() != m - 1:
        raise InternalInconsistency(
            f"structural max family {ns!r} has type != m-1"
        )
    return m, q


def classify_extreme(ns: NumericalSemigroup) -> Classification:
    """Label the semigroups whose Wilf function is pinned at an extreme.

    Two-generator semigroups take the TwoGenSymmetric label even when they
    also belong to the maximal family (every <2, odd> does); the structural
    membership remains available through max_family_params.
    """
    if ns.is_naturals:
        return Classification("Naturals")
    if ns.embedding_dimension == 2:
        return Classification("TwoGenSymmetric", ns.minimal_generators)
    params = max_family_params(ns)
    if params is not None:
        return Classification("MaxFamily", params)
    return Classification("Other")


def apery_level_deficit(ns: NumericalSemigroup) -> int:
    """B = (m-1)*floor(w_{m-1}/m) - sum_j floor(w_j/m) over the sorted Apéry set.

    Measures how far the Apéry elements' m-levels are from all sitting at
    the top level; nonnegative, and zero exactly on the maximal family
    (both facts asserted).
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("Apéry level deficit needs a nonzero conductor")
    m = ns.multiplicity
    apery = ns.apery_set(m).elements
    deficit = (m - 1) * (apery[-1] // m) - sum(w // m for w in apery)
    if deficit < 0:
        raise InternalInconsistency(f"negative Apéry level deficit {deficit}")
    if (deficit == 0) != (max_family_params(ns) is not None):
        raise InternalInconsistency(
            f"Apéry level deficit {deficit} disagrees with max-family structure"
        )
    return deficit


def conductor_equality_report(ns: NumericalSemigroup) -> dict:
    """Probe of the equality c = e*delta against its conjectured catalogue.

    The conjecture states the equality holds exactly for two-generator
    semigroups and the maximal family; ``conjecture_consistent`` False is a
    counterexample and is surfaced by surveys rather than raised here.
    """
    if ns.is_naturals:
        raise NaturalsUnsupported("equality report needs a nonzero conductor")
    equality = ns.conductor == ns.embedding_dimension * ns.delta
    two_generated = ns.embedding_dimension == 2
    params = max_family_params(ns)
    return {
        "equality_holds": equality,
        "two_generated": two_generated,
        "max_family": params is not None,
        "max_family_params": None if params is None else list(params),
        "conjecture_consistent": equality == (two_generated or params is not None),
    }

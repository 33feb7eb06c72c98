"""Exact arithmetic for numerical semigroups and their semimodules.

The package computes the classical invariants of a numerical semigroup
(gaps, Frobenius number, conductor, Apéry sets, type), the Wilf function
W(k) = k*delta - c and its zero-crossing threshold mu, Wilf numbers of
semimodules and of individual gaps, closed two-generator lattice formulas
with a bulk verifier, and an exhaustive genus-bounded survey harness that
checks theorem and conjecture predicates over the semigroup tree.
"""

from .errors import (
    EmptyInput,
    InternalInconsistency,
    NaturalsHasNoType,
    NaturalsUnsupported,
    NoSuchSemimodule,
    NotAGap,
    NotAMember,
    NotCofinite,
    NotCoprime,
    ResourceLimit,
    WilfLabError,
)
from .semigroup import AperySet, NumericalSemigroup, parse_generator_spec
from .wilf import (
    Classification,
    IntervalStats,
    apery_level_deficit,
    check_wilf_inequality,
    classify_extreme,
    conductor_equality_report,
    interval_stats,
    max_family_params,
    mu,
    mu_report,
    wilf_report,
    wilf_value,
)
from .semimodule import (
    GammaSemimodule,
    check_bound_conjecture,
    check_gap_wilf_max,
    check_gap_wilf_range,
    enumerate_semimodules,
    gap_semimodule,
    mu_delta_r,
    mu_gamma_delta,
    oracle_semimodules,
    semimodule_from_generators,
    wilf_function_semimodule,
    wilf_gap,
    wilf_gap_extremes,
)
from .lattice import (
    LatticeGap,
    VerificationReport,
    check_symmetry,
    check_two_gen_family,
    coords_to_gap,
    gap_coords,
    in_gap_triangle,
    in_right_subtriangle,
    in_upper_subtriangle,
    min_gamma_intersection,
    semimodule_closed_forms,
    two_gen_semigroup,
    verify_closed_forms,
    verify_pair,
    wilf_gap_closed_form,
)
from .enumeration import (
    CONJECTURE_PREDICATES,
    DEFAULT_NODE_BUDGET,
    DEFAULT_REGISTRY,
    THEOREM_PREDICATES,
    Predicate,
    SemigroupFacts,
    SurveyReport,
    enumerate_genus,
    genus_counts,
    mu_histogram_csv,
    oracle_enumerate,
    survey,
)

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "CONJECTURE_PREDICATES",
    "Classification",
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_REGISTRY",
    "EmptyInput",
    "GammaSemimodule",
    "IntervalStats",
    "InternalInconsistency",
    "LatticeGap",
    "NaturalsHasNoType",
    "NaturalsUnsupported",
    "NoSuchSemimodule",
    "NotAGap",
    "NotAMember",
    "NotCofinite",
    "NotCoprime",
    "NumericalSemigroup",
    "Predicate",
    "ResourceLimit",
    "SemigroupFacts",
    "SurveyReport",
    "THEOREM_PREDICATES",
    "VerificationReport",
    "WilfLabError",
    "apery_level_deficit",
    "check_bound_conjecture",
    "check_gap_wilf_max",
    "check_gap_wilf_range",
    "check_symmetry",
    "check_two_gen_family",
    "check_wilf_inequality",
    "classify_extreme",
    "conductor_equality_report",
    "coords_to_gap",
    "enumerate_genus",
    "enumerate_semimodules",
    "gap_coords",
    "gap_semimodule",
    "genus_counts",
    "in_gap_triangle",
    "in_right_subtriangle",
    "in_upper_subtriangle",
    "interval_stats",
    "max_family_params",
    "min_gamma_intersection",
    "mu",
    "mu_delta_r",
    "mu_gamma_delta",
    "mu_histogram_csv",
    "mu_report",
    "oracle_enumerate",
    "oracle_semimodules",
    "parse_generator_spec",
    "semimodule_closed_forms",
    "semimodule_from_generators",
    "survey",
    "two_gen_semigroup",
    "verify_closed_forms",
    "verify_pair",
    "wilf_function_semimodule",
    "wilf_gap",
    "wilf_gap_closed_form",
    "wilf_gap_extremes",
    "wilf_report",
    "wilf_value",
]

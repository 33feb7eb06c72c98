"""Genus-bounded enumeration of numerical semigroups and the survey harness.

The enumeration is the standard semigroup tree: the root is the full monoid,
and the children of a node are obtained by removing one minimal generator
exceeding the Frobenius number (depth-first, ascending removed generator),
which visits every semigroup of genus <= bound exactly once.  An independent
gap-subset oracle validates the tree.  The survey harness walks the tree
and applies named predicates — theorems abort on violation, conjectures
record counterexamples and continue, statistics aggregate — streaming one
JSON line per semigroup plus a final summary.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import semimodule as _semimodule
from . import wilf as _wilf
from .errors import InternalInconsistency, ResourceLimit
from .semigroup import NumericalSemigroup

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_REGISTRY",
    "Predicate",
    "SemigroupFacts",
    "SurveyReport",
    "enumerate_genus",
    "genus_counts",
    "mu_histogram_csv",
    "oracle_enumerate",
    "survey",
]

DEFAULT_NODE_BUDGET = 10**8
_BUDGET_ENV = "WILF_LAB_NODE_BUDGET"


def _resolve_budget(explicit: int | None) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_NODE_BUDGET


def enumerate_genus(
    max_genus: int, node_budget: int | None = None
) -> Iterator[NumericalSemigroup]:
    """Yield every numerical semigroup with genus <= max_genus exactly once.

    Deterministic depth-first order, full monoid first, children by
    ascending removed generator.  The node budget (argument, else the
    WILF_LAB_NODE_BUDGET environment variable, else 10**8) bounds the number
    of visited nodes; exceeding it raises ResourceLimit whose ``partial``
    field carries the per-genus counts seen so far.
    """
    if max_genus < 0:
        raise ValueError(f"max_genus must be nonnegative, got {max_genus}")
    budget = _resolve_budget(node_budget)
    counts = [0] * (max_genus + 1)
    visited = 0

    def walk(gap_bits: int) -> Iterator[NumericalSemigroup]:
        nonlocal visited
        if visited >= budget:
            raise ResourceLimit(
                f"node budget {budget} exhausted",
                partial={"visited": visited, "genus_counts": list(counts)},
            )
        visited += 1
        ns = NumericalSemigroup.from_gap_bits(gap_bits)
        counts[ns.genus] += 1
        yield ns
        if ns.genus == max_genus:
            return
        frob = ns.frobenius
        for g in ns.minimal_generators:
            if g > frob:
                yield from walk(gap_bits | (1 << g))

    yield from walk(0)


def genus_counts(max_genus: int, node_budget: int | None = None) -> list[int]:
    """Number of numerical semigroups of each genus 0..max_genus."""
    counts = [0] * (max_genus + 1)
    for ns in enumerate_genus(max_genus, node_budget):
        counts[ns.genus] += 1
    return counts


def oracle_enumerate(max_genus: int) -> dict[int, list[tuple[int, ...]]]:
    """Independent census: per-genus sorted gap sets from a subset sweep.

    Tries every subset of [1, 2*max_genus - 1] as a candidate gap set and
    keeps those whose complement is closed under addition (the largest gap
    of a genus-g semigroup is below 2g, so the window is complete).
    Exponential; refuses beyond genus 10.  Used only to validate the tree.
    """
    if max_genus < 0:
        raise ValueError(f"max_genus must be nonnegative, got {max_genus}")
    if max_genus > 10:
        raise ResourceLimit(f"subset oracle limited to genus <= 10, got {max_genus}")
    result: dict[int, list[tuple[int, ...]]] = {g: [] for g in range(max_genus + 1)}
    if max_genus == 0:
        result[0].append(())
        return result
    top = 2 * max_genus - 1
    for mask in range(1 << top):
        gaps = tuple(i + 1 for i in range(top) if (mask >> i) & 1)
        if len(gaps) > max_genus:
            continue
        gap_set = set(gaps)
        closed = True
        for s in gaps:
            for x in range(1, s // 2 + 1):
                if x not in gap_set and (s - x) not in gap_set:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            result[len(gaps)].append(gaps)
    for listing in result.values():
        listing.sort()
    return result


# ----------------------------------------------------------------------
# survey harness
# ----------------------------------------------------------------------


class SemigroupFacts:
    """Everything the predicates and the JSON stream need about one semigroup."""

    __slots__ = (
        "ns",
        "generators",
        "m",
        "e",
        "conductor",
        "delta",
        "genus",
        "type",
        "mu",
        "symmetric",
        "wilf_at_2",
        "wilf_at_4",
        "wilf_at_m",
        "wilf_at_e",
        "max_family",
        "min_wg",
        "max_wg",
        "bound",
        "frogo",
    )

    def __init__(self, ns: NumericalSemigroup):
        self.ns = ns
        self.generators = ns.minimal_generators
        self.m = ns.multiplicity
        self.e = ns.embedding_dimension
        self.conductor = ns.conductor
        self.delta = ns.delta
        self.genus = ns.genus
        self.type = ns.type_of()
        self.mu = _wilf.mu(ns)
        self.symmetric = ns.is_symmetric()
        self.wilf_at_2 = _wilf.wilf_value(ns, 2)
        self.wilf_at_4 = _wilf.wilf_value(ns, 4)
        self.wilf_at_m = _wilf.wilf_value(ns, self.m)
        self.wilf_at_e = _wilf.wilf_value(ns, self.e)
        self.max_family = _wilf.max_family_params(ns)
        extremes = _semimodule.wilf_gap_extremes(ns)
        self.min_wg = extremes["min"]
        self.max_wg = extremes["max"]
        self.bound = _semimodule.check_bound_conjecture(ns)
        self.frogo = _wilf.conductor_equality_report(ns)

    def wilf_at(self, k: int) -> int:
        return _wilf.wilf_value(self.ns, k)


@dataclass(frozen=True)
class Predicate:
    """A named check applied to every surveyed semigroup.

    kind "theorem": a False result aborts the survey (implementation bug).
    kind "conjecture": a False result is recorded as a counterexample.
    kind "stat": no verdict; the survey aggregates a statistic instead.
    The check returns None when the predicate does not apply to a node.
    """

    name: str
    kind: str
    check: Callable[[SemigroupFacts], bool | None] | None = None


def _pred_wilf(f: SemigroupFacts) -> bool:
    return f.wilf_at_e >= 0


def _pred_bound(f: SemigroupFacts) -> bool:
    return bool(f.bound["holds"])


def _pred_frogo(f: SemigroupFacts) -> bool:
    return bool(f.frogo["conjecture_consistent"])


def _pred_symmetric2(f: SemigroupFacts) -> bool:
    return f.wilf_at_2 <= 0 and (f.wilf_at_2 == 0) == f.symmetric


def _pred_wilf_at_m(f: SemigroupFacts) -> bool:
    return f.wilf_at_m >= 0 and (f.wilf_at_m == 0) == (f.max_family is not None)


def _pred_mu_type(f: SemigroupFacts) -> bool:
    return f.mu <= f.type + 1


def _pred_interval(f: SemigroupFacts) -> bool:
    for k in range(2, f.m + 1):
        expected = f.wilf_at(k) >= 0
        if _wilf.check_wilf_inequality(f.ns, k) != expected:
            return False
    _wilf.apery_level_deficit(f.ns)
    if f.conductor % f.delta == 0 and f.conductor // f.delta > f.m:
        return False
    return True


def _pred_gap_max(f: SemigroupFacts) -> bool:
    if f.max_wg > f.wilf_at_4:
        return False
    if f.e >= 4 and f.max_wg >= 0 and f.wilf_at_4 < 0:
        return False
    if f.e >= 3 and f.max_wg >= -f.wilf_at(f.e - 2) and f.min_wg < -f.wilf_at_e:
        return False
    return True


def _pred_gap_range(f: SemigroupFacts) -> bool:
    return f.max_wg - f.min_wg < 2 * f.delta


def _pred_twogen_mu3(f: SemigroupFacts) -> bool | None:
    if f.e != 2:
        return None
    from . import lattice as _lattice

    alpha, beta = f.generators
    return _lattice.check_two_gen_family(alpha, beta)


DEFAULT_REGISTRY: dict[str, Predicate] = {
    p.name: p
    for p in (
        Predicate("wilf", "conjecture", _pred_wilf),
        Predicate("bound", "conjecture", _pred_bound),
        Predicate("frogo", "conjecture", _pred_frogo),
        Predicate("symmetric2", "theorem", _pred_symmetric2),
        Predicate("wilf_at_m", "theorem", _pred_wilf_at_m),
        Predicate("mu_type", "theorem", _pred_mu_type),
        Predicate("interval", "theorem", _pred_interval),
        Predicate("gap_max", "theorem", _pred_gap_max),
        Predicate("gap_range", "theorem", _pred_gap_range),
        Predicate("twogen_mu3", "theorem", _pred_twogen_mu3),
        Predicate("mu_hist", "stat"),
    )
}

THEOREM_PREDICATES = tuple(
    name for name, p in DEFAULT_REGISTRY.items() if p.kind == "theorem"
)
CONJECTURE_PREDICATES = tuple(
    name for name, p in DEFAULT_REGISTRY.items() if p.kind == "conjecture"
)


@dataclass
class SurveyReport:
    """Aggregated survey outcome (the JSON summary mirrors this)."""

    max_genus: int
    predicates: tuple[str, ...]
    genus_counts: list[int] = field(default_factory=list)
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    mu_histogram: dict = field(default_factory=dict)
    nodes_visited: int = 0

    def tally(self, name: str) -> dict:
        return self.tallies.setdefault(
            name, {"checked": 0, "satisfied": 0, "violated": 0}
        )

    def validate(self) -> None:
        for name, t in self.tallies.items():
            if t["checked"] != t["satisfied"] + t["violated"]:
                raise InternalInconsistency(f"tally for {name} does not add up: {t}")

    def summary(self) -> dict:
        self.validate()
        witnesses: dict[str, list] = {name: [] for name in self.tallies}
        for ce in self.counterexamples:
            witnesses[ce["predicate"]].append(ce["generators"])
        return {
            "summary": {
                "max_genus": self.max_genus,
                "semigroups": sum(self.genus_counts),
                "genus_counts": self.genus_counts,
                "predicates": {
                    name: {**self.tallies[name], "witnesses": witnesses[name]}
                    for name in self.tallies
                },
                "mu_histogram": [
                    [mu, e, t1, count]
                    for (mu, e, t1), count in sorted(self.mu_histogram.items())
                ],
                "nodes_visited": self.nodes_visited,
            }
        }


def _json_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _record(facts: SemigroupFacts | None, ns: NumericalSemigroup, verdicts: dict) -> dict:
    if facts is None:
        return {
            "generators": list(ns.minimal_generators),
            "genus": ns.genus,
            "conductor": ns.conductor,
            "delta": ns.delta,
            "e": ns.embedding_dimension,
            "m": ns.multiplicity,
            "type": None,
            "mu": _wilf.mu(ns),
            "wilf_at_e": 0,
            "min_wg": None,
            "max_wg": None,
            "verdicts": {},
        }
    return {
        "generators": list(facts.generators),
        "genus": facts.genus,
        "conductor": facts.conductor,
        "delta": facts.delta,
        "e": facts.e,
        "m": facts.m,
        "type": facts.type,
        "mu": facts.mu,
        "wilf_at_e": facts.wilf_at_e,
        "min_wg": facts.min_wg,
        "max_wg": facts.max_wg,
        "verdicts": verdicts,
    }


def _apply_predicates(
    facts: SemigroupFacts,
    names: tuple[str, ...],
    registry: dict[str, Predicate],
    report: SurveyReport,
) -> dict:
    """Run the selected predicates on one proper semigroup; returns verdicts."""
    verdicts = {}
    for name in names:
        pred = registry[name]
        if pred.kind == "stat":
            continue
        result = pred.check(facts)
        if result is None:
            continue
        t = report.tally(name)
        t["checked"] += 1
        if result:
            t["satisfied"] += 1
        else:
            t["violated"] += 1
            if pred.kind == "theorem":
                raise InternalInconsistency(
                    f"theorem predicate {name} violated by {list(facts.generators)}"
                )
            report.counterexamples.append(
                {"predicate": name, "generators": list(facts.generators)}
            )
        verdicts[name] = bool(result)
    if "mu_hist" in names:
        key = (facts.mu, facts.e, facts.type + 1)
        report.mu_histogram[key] = report.mu_histogram.get(key, 0) + 1
    return verdicts


def _survey_walk(
    gap_bits: int,
    max_genus: int,
    names: tuple[str, ...],
    registry: dict[str, Predicate],
    report: SurveyReport,
    lines: list[str],
    budget: int,
    *,
    include_root: bool = True,
    stop_at_genus: int | None = None,
    frontier: list[int] | None = None,
    markers: list | None = None,
) -> None:
    """Depth-first survey walk from one gap mask.

    With ``stop_at_genus`` set, nodes at that genus are not expanded;
    instead their gap masks go to ``frontier`` and a splice marker goes to
    ``markers`` (used by the parallel driver to keep DFS output order).
    """
    if report.nodes_visited >= budget:
        raise ResourceLimit(
            f"node budget {budget} exhausted",
            partial={
                "visited": report.nodes_visited,
                "genus_counts": list(report.genus_counts),
            },
        )
    report.nodes_visited += 1
    ns = NumericalSemigroup.from_gap_bits(gap_bits)
    if include_root:
        report.genus_counts[ns.genus] += 1
        if ns.is_naturals:
            line = _json_line(_record(None, ns, {}))
        else:
            facts = SemigroupFacts(ns)
            verdicts = _apply_predicates(facts, names, registry, report)
            line = _json_line(_record(facts, ns, verdicts))
        lines.append(line)
        if markers is not None:
            markers.append(("line", line))
    if ns.genus == max_genus:
        return
    if stop_at_genus is not None and ns.genus == stop_at_genus:
        frontier.append(gap_bits)
        markers.append(("splice", len(frontier) - 1))
        return
    frob = ns.frobenius
    for g in ns.minimal_generators:
        if g > frob:
            _survey_walk(
                gap_bits | (1 << g),
                max_genus,
                names,
                registry,
                report,
                lines,
                budget,
                stop_at_genus=stop_at_genus,
                frontier=frontier,
                markers=markers,
            )


def _survey_subtree(args) -> dict:
    """Worker: survey all strict descendants of one frontier node."""
    root_bits, max_genus, names, budget = args
    report = SurveyReport(max_genus=max_genus, predicates=names)
    report.genus_counts = [0] * (max_genus + 1)
    lines: list[str] = []
    root = NumericalSemigroup.from_gap_bits(root_bits)
    frob = root.frobenius
    for g in root.minimal_generators:
        if g > frob:
            _survey_walk(
                root_bits | (1 << g),
                max_genus,
                names,
                DEFAULT_REGISTRY,
                report,
                lines,
                budget,
            )
    return {
        "lines": lines,
        "genus_counts": report.genus_counts,
        "tallies": report.tallies,
        "counterexamples": report.counterexamples,
        "mu_histogram": report.mu_histogram,
        "visited": report.nodes_visited,
    }


def survey(
    max_genus: int,
    predicates=CONJECTURE_PREDICATES,
    *,
    jobs: int = 1,
    sink=None,
    registry: dict[str, Predicate] | None = None,
    node_budget: int | None = None,
) -> SurveyReport:
    """Apply the selected predicates to every semigroup with genus <= max_genus.

    Streams one compact JSON line per semigroup (the full monoid gets null
    statistics and no verdicts) plus a final summary line to ``sink`` when
    given.  Theorem violations raise InternalInconsistency; conjecture
    violations are recorded and the walk continues.  ``jobs`` > 1 splits the
    tree at a fixed depth across processes and splices worker output back in
    depth-first order, so the stream is byte-identical for every jobs value;
    a custom ``registry`` (used by tests to inject violations) always runs
    sequentially.  The node budget is shared exactly in sequential mode and
    granted per worker in parallel mode.
    """
    if max_genus < 1:
        raise ValueError(f"max_genus must be >= 1, got {max_genus}")
    active_registry = DEFAULT_REGISTRY if registry is None else registry
    names = tuple(predicates)
    unknown = [n for n in names if n not in active_registry]
    if unknown:
        raise ValueError(f"unknown predicates: {unknown}")
    budget = _resolve_budget(node_budget)
    report = SurveyReport(max_genus=max_genus, predicates=names)
    report.genus_counts = [0] * (max_genus + 1)
    for name in names:
        if active_registry[name].kind != "stat":
            report.tally(name)
    lines: list[str] = []

    parallel = jobs > 1 and registry is None and max_genus >= 2
    if not parallel:
        _survey_walk(0, max_genus, names, active_registry, report, lines, budget)
    else:
        split = min(4, max_genus - 1)
        frontier: list[int] = []
        markers: list = []
        _survey_walk(
            0,
            max_genus,
            names,
            active_registry,
            report,
            [],
            budget,
            stop_at_genus=split,
            frontier=frontier,
            markers=markers,
        )
        import multiprocessing

        remaining = budget - report.nodes_visited
        tasks = [(bits, max_genus, names, remaining) for bits in frontier]
        with multiprocessing.Pool(processes=jobs) as pool:
            results = pool.map(_survey_subtree, tasks)
        for kind, payload in markers:
            if kind == "line":
                lines.append(payload)
            else:
                sub = results[payload]
                lines.extend(sub["lines"])
                for g, cnt in enumerate(sub["genus_counts"]):
                    report.genus_counts[g] += cnt
                for name, t in sub["tallies"].items():
                    mine = report.tally(name)
                    for key in ("checked", "satisfied", "violated"):
                        mine[key] += t[key]
                report.counterexamples.extend(sub["counterexamples"])
                for key, cnt in sub["mu_histogram"].items():
                    report.mu_histogram[key] = report.mu_histogram.get(key, 0) + cnt
                report.nodes_visited += sub["visited"]
        # prefix-walk counterexamples were recorded before the worker ones;
        # rebuild the list in stream (depth-first) order from the verdicts
        ordered = []
        for line in lines:
            row = json.loads(line)
            for name in names:
                if row["verdicts"].get(name) is False:
                    ordered.append(
                        {"predicate": name, "generators": row["generators"]}
                    )
        report.counterexamples = ordered

    report.validate()
    if sink is not None:
        for line in lines:
            sink.write(line)
        sink.write(_json_line(report.summary()))
    return report


def mu_histogram_csv(report: SurveyReport) -> str:
    """CSV rows mu,e,type_plus_1,count of the survey's mu statistic."""
    out = ["mu,e,type_plus_1,count"]
    for (mu_v, e, t1), count in sorted(report.mu_histogram.items()):
        out.append(f"{mu_v},{e},{t1},{count}")
    return "\n".join(out) + "\n"

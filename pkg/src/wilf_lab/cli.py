"""Command-line front end: info, wilf, mu, apery, gapwilf, semimodule,
lattice, survey, and tables subcommands.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal
inconsistency (a checked invariant failed, i.e. the build is broken).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import enumeration
from .errors import WilfLabError
from .semigroup import NumericalSemigroup, parse_generator_spec
from .semimodule import gap_semimodule, semimodule_from_generators, wilf_gap
from .wilf import mu_report, wilf_value
from . import lattice as lattice_mod

__all__ = ["main"]

# The five benchmark semigroups reproduced by `tables --which 1`, given as
# (generators, threshold) in the "adjoin everything >= r" construction.
TABLE_1_INPUTS = (
    ((162, 1114, 1115), 9879),
    ((222, 1532, 1533), 16647),
    ((172, 327, 328), 3437),
    ((88, 100, 102), 566),
    ((88, 100, 343, 345, 346, 351, 361, 679, 680, 681, 687, 693), 700),
)

TABLE_2_GENERATORS = (6, 8, 35)

_SVG_CELL = 16
_SVG_MARGIN = 8
_SVG_POSITIVE = "#2166ac"
_SVG_NEGATIVE = "#b2182b"
_SVG_ZERO = "#e0e0e0"


def _semigroup_from_text(text: str) -> NumericalSemigroup:
    gens, threshold = parse_generator_spec(text)
    if threshold is None:
        return NumericalSemigroup.from_generators(gens)
    return NumericalSemigroup.from_generators_with_threshold(gens, threshold)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return str(value)


def _print_record(record: dict, out) -> None:
    for key, value in record.items():
        print(f"{key} = {_format_value(value)}", file=out)


def _cmd_info(args, out) -> int:
    record = _semigroup_from_text(args.spec).to_record()
    if args.json:
        print(json.dumps(record), file=out)
    elif args.csv:
        fields = [
            "generators", "multiplicity", "frobenius", "conductor",
            "genus", "delta", "embedding_dimension", "type", "symmetric",
        ]
        row = dict(record)
        row["generators"] = " ".join(str(g) for g in record["generators"])
        row["symmetric"] = _format_value(record["symmetric"])
        row.setdefault("type", "")
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
    else:
        _print_record(record, out)
    return 0


def _parse_k(token: str, ns: NumericalSemigroup) -> int:
    if token == "m":
        return ns.multiplicity
    if token == "e":
        return ns.embedding_dimension
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"bad k value {token!r}: expected integer, 'm' or 'e'")


def _cmd_wilf(args, out) -> int:
    ns = _semigroup_from_text(args.spec)
    if args.k is not None:
        print(wilf_value(ns, _parse_k(args.k, ns)), file=out)
        return 0
    lo_text, sep, hi_text = args.range.partition("..")
    if not sep:
        raise ValueError(f"bad range {args.range!r}: expected LO..HI")
    lo, hi = _parse_k(lo_text, ns), _parse_k(hi_text, ns)
    for k in range(lo, hi + 1):
        print(f"W({k}) = {wilf_value(ns, k)}", file=out)
    return 0


def _cmd_mu(args, out) -> int:
    report = mu_report(_semigroup_from_text(args.spec))
    print(f"mu = {report['mu']}", file=out)
    print(f"W(mu) = {report['wilf_at_mu']}", file=out)
    print(f"embedding_dimension = {report['embedding_dimension']}", file=out)
    print(f"W(e) = {report['wilf_at_e']}", file=out)
    print(f"e - mu = {report['gap_e_minus_mu']}", file=out)
    return 0


def _cmd_apery(args, out) -> int:
    ns = _semigroup_from_text(args.spec)
    s = args.s if args.s is not None else ns.multiplicity
    apery = ns.apery_set(s)
    print(" ".join(str(w) for w in apery.elements), file=out)
    return 0


def _print_gap_wilf_table(ns: NumericalSemigroup, out) -> None:
    print("g W(g)", file=out)
    for g in ns.gaps:
        print(f"{g} {wilf_gap(ns, g)}", file=out)


def _cmd_gapwilf(args, out) -> int:
    _print_gap_wilf_table(_semigroup_from_text(args.spec), out)
    return 0


def _cmd_semimodule(args, out) -> int:
    ns = _semigroup_from_text(args.spec)
    gens = tuple(int(tok) for tok in args.gens.split(","))
    sm = semimodule_from_generators(ns, gens)
    _print_record(sm.to_record(), out)
    if args.k is not None:
        print(f"W({args.k}) = {sm.wilf_value(args.k)}", file=out)
    return 0


def _lattice_rows(ns: NumericalSemigroup):
    alpha, beta = ns.minimal_generators
    for g in ns.gaps:
        coords = lattice_mod.gap_coords(alpha, beta, g)
        yield coords.a, coords.b, g, wilf_gap(ns, g)


def _write_lattice_svg(path: str, alpha: int, beta: int, rows) -> None:
    width = 2 * _SVG_MARGIN + (beta - 1) * _SVG_CELL
    height = 2 * _SVG_MARGIN + (alpha - 1) * _SVG_CELL
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for a, b, gap, wilf in sorted(rows):
        x = _SVG_MARGIN + (a - 1) * _SVG_CELL
        y = _SVG_MARGIN + (alpha - 1 - b) * _SVG_CELL
        if wilf > 0:
            fill = _SVG_POSITIVE
        elif wilf < 0:
            fill = _SVG_NEGATIVE
        else:
            fill = _SVG_ZERO
        parts.append(
            f'<rect x="{x}" y="{y}" width="{_SVG_CELL}" height="{_SVG_CELL}" '
            f'fill="{fill}"><title>a={a} b={b} g={gap} W={wilf}</title></rect>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(parts) + "\n")


def _cmd_lattice(args, out) -> int:
    ns = _semigroup_from_text(args.spec)
    if ns.embedding_dimension != 2:
        raise WilfLabError(
            f"lattice coordinates need exactly two minimal generators, "
            f"got {ns.minimal_generators}"
        )
    rows = sorted(_lattice_rows(ns), key=lambda r: r[2])
    with open(args.csv, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["a", "b", "gap", "wilf"])
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.csv}", file=out)
    if args.svg is not None:
        alpha, beta = ns.minimal_generators
        _write_lattice_svg(args.svg, alpha, beta, rows)
        print(f"wrote heatmap to {args.svg}", file=out)
    return 0


def _cmd_survey(args, out) -> int:
    if args.check is None:
        tokens = enumeration.CONJECTURE_PREDICATES
    else:
        tokens = tuple(tok.strip() for tok in args.check.split(",") if tok.strip())
        unknown = [tok for tok in tokens if tok not in enumeration.DEFAULT_REGISTRY]
        if unknown:
            known = ", ".join(sorted(enumeration.DEFAULT_REGISTRY))
            raise ValueError(
                f"unknown predicate(s) {', '.join(unknown)}; choose from {known}"
            )
    if args.out is not None:
        sink = open(args.out, "w", encoding="utf-8")
    else:
        sink = out
    try:
        report = enumeration.survey(args.max_genus, tokens, jobs=args.jobs, sink=sink)
    finally:
        if args.out is not None:
            sink.close()
    if args.mu_hist is not None:
        with open(args.mu_hist, "w", encoding="utf-8") as handle:
            handle.write(enumeration.mu_histogram_csv(report))
    for witness in report.counterexamples:
        gens = ",".join(str(g) for g in witness["generators"])
        print(
            f"counterexample: predicate={witness['predicate']} generators={gens}",
            file=sys.stderr,
        )
    if report.counterexamples:
        print(f"counterexamples: {len(report.counterexamples)}", file=sys.stderr)
    return 0


def _cmd_tables(args, out) -> int:
    if args.which == 1:
        print("i delta c e mu e-mu W(e) W(mu)", file=out)
        for i, (gens, threshold) in enumerate(TABLE_1_INPUTS, start=1):
            ns = NumericalSemigroup.from_generators_with_threshold(gens, threshold)
            report = mu_report(ns)
            print(
                f"{i} {ns.delta} {ns.conductor} {report['embedding_dimension']} "
                f"{report['mu']} {report['gap_e_minus_mu']} "
                f"{report['wilf_at_e']} {report['wilf_at_mu']}",
                file=out,
            )
    else:
        ns = NumericalSemigroup.from_generators(TABLE_2_GENERATORS)
        _print_gap_wilf_table(ns, out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilf-lab",
        description="Numerical-semigroup invariants, Wilf functions, and surveys.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    spec_help = "generators, e.g. '6,8,35' or '162,1114,1115@9879'"

    p = sub.add_parser("info", help="canonical invariant record")
    p.add_argument("spec", help=spec_help)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser("wilf", help="Wilf function values W(k) = k*delta - c")
    p.add_argument("spec", help=spec_help)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", help="single k (integer, 'm' or 'e')")
    which.add_argument("--range", help="inclusive range LO..HI, e.g. 2..m")
    p.set_defaults(handler=_cmd_wilf)

    p = sub.add_parser("mu", help="least k with W(k) >= 0, compared to e")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(handler=_cmd_mu)

    p = sub.add_parser("apery", help="sorted Apery set")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--s", type=int, help="member to reduce by (default multiplicity)")
    p.set_defaults(handler=_cmd_apery)

    p = sub.add_parser("gapwilf", help="Wilf number of every gap")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(handler=_cmd_gapwilf)

    p = sub.add_parser("semimodule", help="semimodule invariants over the semigroup")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--gens", required=True, help="semimodule generators, e.g. 0,7")
    p.add_argument("--k", type=int, help="also evaluate the Wilf function at k")
    p.set_defaults(handler=_cmd_semimodule)

    p = sub.add_parser("lattice", help="two-generator lattice coordinates of gaps")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--csv", required=True, help="output CSV path (a,b,gap,wilf)")
    p.add_argument("--svg", help="optional heatmap SVG path")
    p.set_defaults(handler=_cmd_lattice)

    p = sub.add_parser("survey", help="apply predicates over all genus <= N")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--check", help="comma-separated predicate names")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSONL output path (default stdout)")
    p.add_argument("--mu-hist", help="also write the mu histogram CSV here")
    p.set_defaults(handler=_cmd_survey)

    p = sub.add_parser("tables", help="reproduce the benchmark tables")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.set_defaults(handler=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args, sys.stdout)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WilfLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

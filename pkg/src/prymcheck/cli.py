"""Command-line front end.

Subcommands:
  check       full analysis of one graph document, ending with the
              indeterminacy headline ("YES" exactly when condition (*)
              fails); the exit code reports analysis success, not the
              verdict
  classify    rank and edge-orbit classification only
  fs          Friedman-Smith degeneration search at one threshold
  verify      enumerate all small graphs within bounds and cross-check
              every property; exit 4 when any counterexample is found
  components  genus splittings of the two components for given total
              genus and half the node count

Exit codes: 0 analysis/verification succeeded; 2 unreadable or invalid
input (including bad arguments); 3 an enumeration cap was exceeded;
4 verification found a counterexample.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from .dicing import (
    DicingVerdict,
    dicing_report,
    is_dicing,
    star_matrix,
    star_star_matrix,
)
from .errors import CapExceededError, GraphFormatError, InvalidGraphError
from .fs import FSWitness, fs_component_genera, fs_report, is_fs_degeneration
from .graphs import auto_orient, load_graph, validate
from .homology import anti_invariant_lattice, classification_report, classify_edges
from .verify import GenSpec, run_suite

SCHEMA_VERSION = 1

__all__ = ["main", "SCHEMA_VERSION"]


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w") as fh:
            fh.write(text + "\n")


def _emit_structured(payload: dict, output: str | None) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    _emit(json.dumps(payload, sort_keys=True, indent=2), output)


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _verdict_obj(verdict: DicingVerdict) -> dict:
    obj = {
        "holds": verdict.is_dicing,
        "d": verdict.d,
        "rows": verdict.n_rows,
        "witness": None,
    }
    if verdict.witness is not None:
        w = verdict.witness
        obj["witness"] = {
            "rows": list(w.row_subset),
            "determinant": w.determinant,
            "unit_rhs_row": w.row_subset[w.rhs],
            "point_doubled": {
                eid: _fraction_str(value)
                for eid, value in zip(verdict.edge_ids, w.point)
                if value
            },
            "units": "doubled; multiply by 1/2",
            "defect": w.membership_defect,
        }
    return obj


def _fs_obj(witness: FSWitness | None) -> dict | None:
    if witness is None:
        return None
    return {
        "part1": sorted(witness.part1),
        "part2": sorted(witness.part2),
        "crossing_orbits": [list(pair) for pair in witness.crossing_orbits],
        "crossing_count": witness.crossing_count,
    }


def _classes_obj(og, lattice, classes) -> list[dict]:
    return [
        {
            "orbit": [cls.orbit_rep, cls.partner],
            "type": cls.type,
            "multiplier": cls.multiplier,
            "gcd": lattice.edge_gcds[cls.orbit_rep],
        }
        for cls in classes
    ]


def cmd_check(args) -> int:
    g = load_graph(args.input)
    og = auto_orient(g)
    report = validate(og)
    lattice = anti_invariant_lattice(og)
    classes = classify_edges(og, lattice)
    star_verdict = is_dicing(star_matrix(lattice, classes))
    starstar_verdict = is_dicing(star_star_matrix(lattice, classes))
    indeterminacy = not star_verdict.is_dicing

    if args.format == "structured":
        _emit_structured(
            {
                "command": "check",
                "valid": True,
                "vertices": len(og.vertices),
                "edges": len(og.edges),
                "n_e": report.n_e,
                "c_e": report.c_e,
                "d": lattice.rank,
                "edge_classes": _classes_obj(og, lattice, classes),
                "conditions": {
                    "star": _verdict_obj(star_verdict),
                    "starstar": _verdict_obj(starstar_verdict),
                },
                "fs": {
                    "min2": _fs_obj(is_fs_degeneration(og, 2)),
                    "min4": _fs_obj(is_fs_degeneration(og, 4)),
                },
                "indeterminacy": indeterminacy,
            },
            args.output,
        )
        return 0

    lines = [
        f"valid: yes ({len(og.vertices)} vertices, {len(og.edges)} edges; "
        f"bold: {len(report.bold_vertices)} vertices, {len(report.bold_edges)} edges)",
        classification_report(og),
        dicing_report(star_verdict),
        dicing_report(starstar_verdict),
        fs_report(og),
        f"indeterminacy: {'YES' if indeterminacy else 'NO'}",
    ]
    _emit("\n".join(lines), args.output)
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args.input)
    og = auto_orient(g)
    if args.format == "structured":
        lattice = anti_invariant_lattice(og)
        classes = classify_edges(og, lattice)
        _emit_structured(
            {
                "command": "classify",
                "d": lattice.rank,
                "edge_classes": _classes_obj(og, lattice, classes),
            },
            args.output,
        )
        return 0
    _emit(classification_report(og), args.output)
    return 0


def cmd_fs(args) -> int:
    g = load_graph(args.input)
    og = auto_orient(g)
    witness = is_fs_degeneration(og, args.min_fs_edges)
    if args.format == "structured":
        _emit_structured(
            {
                "command": "fs",
                "min_edges": args.min_fs_edges,
                "found": witness is not None,
                "witness": _fs_obj(witness),
            },
            args.output,
        )
        return 0
    lines = [fs_report(og)]
    found = "YES" if witness is not None else "no"
    lines.append(
        f"friedman-smith degeneration with >= {args.min_fs_edges} crossing edges: {found}"
    )
    _emit("\n".join(lines), args.output)
    return 0


def cmd_verify(args) -> int:
    spec = GenSpec(
        max_fixed_vertices=args.max_fixed_vertices,
        max_vertex_pairs=args.max_vertex_pairs,
        max_fixed_edges=args.max_fixed_edges,
        max_edge_pairs=args.max_edge_pairs,
        max_edge_orbits=args.max_edge_orbits,
        allow_loops=args.allow_loops,
        dedup=args.dedup,
    )
    report = run_suite(spec, args.output, mutate_starstar=args.mutant_starstar)
    if args.format == "structured":
        payload = {
            "command": "verify",
            "spec": dataclasses.asdict(spec),
            "graphs": report.n_graphs,
            "failed_graphs": report.n_failed_graphs,
            "failed_checks": report.n_failed_checks,
            "per_check": {
                name: {"pass": p, "fail": f}
                for name, (p, f) in report.per_check.items()
            },
            "ok": report.ok,
            "report_path": report.report_path,
            "counterexamples_path": report.counterexamples_path,
            "summary_path": report.summary_path,
        }
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload},
                         sort_keys=True, indent=2))
    else:
        print(f"graphs checked: {report.n_graphs}")
        for name, (passed, failed) in report.per_check.items():
            print(f"  {name}: pass {passed}, fail {failed}")
        print(f"failed checks: {report.n_failed_checks}")
        print(f"report: {report.report_path}")
        print(f"counterexamples: {report.counterexamples_path}")
        print(f"summary: {report.summary_path}")
    return 0 if report.ok else 4


def cmd_components(args) -> int:
    splittings = fs_component_genera(args.genus, args.n)
    if args.format == "structured":
        _emit_structured(
            {
                "command": "components",
                "genus": args.genus,
                "n": args.n,
                "splittings": [list(pair) for pair in splittings],
                "count": len(splittings),
            },
            args.output,
        )
        return 0
    lines = [
        f"component genus splittings for total genus {args.genus} "
        f"with 2n = {2 * args.n} exchanged nodes:"
    ]
    for low, high in splittings:
        lines.append(f"  ({low}, {high})")
    lines.append(f"count: {len(splittings)}")
    _emit("\n".join(lines), args.output)
    return 0


def _orbit_cap(text: str):
    if text.lower() == "none":
        return None
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prymcheck",
        description="combinatorial indeterminacy analysis for graphs with involution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("--input", required=True, help="graph document (json)")
        p.add_argument("--output", default=None, help="write the result here instead of stdout")
        p.add_argument(
            "--format", choices=("human", "structured"), default="human"
        )

    p_check = sub.add_parser("check", help="full analysis of one graph")
    add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="rank and edge-orbit types")
    add_common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_fs = sub.add_parser("fs", help="friedman-smith degeneration search")
    add_common(p_fs)
    p_fs.add_argument(
        "--min-fs-edges", type=int, choices=(2, 4), default=4,
        help="required number of crossing edges",
    )
    p_fs.set_defaults(func=cmd_fs)

    p_verify = sub.add_parser(
        "verify", help="exhaustive cross-check over all small graphs"
    )
    p_verify.add_argument("--max-fixed-vertices", type=int, default=2)
    p_verify.add_argument("--max-vertex-pairs", type=int, default=1)
    p_verify.add_argument("--max-fixed-edges", type=int, default=4)
    p_verify.add_argument("--max-edge-pairs", type=int, default=4)
    p_verify.add_argument(
        "--max-edge-orbits", type=_orbit_cap, default=4,
        help="total edge-orbit cap, or 'none'",
    )
    p_verify.add_argument(
        "--allow-loops", action=argparse.BooleanOptionalAction, default=True
    )
    p_verify.add_argument(
        "--dedup", action=argparse.BooleanOptionalAction, default=True
    )
    p_verify.add_argument(
        "--output", default="verify_report.ndjson",
        help="newline-delimited record file; counterexample and summary "
        "files are derived from this name",
    )
    p_verify.add_argument(
        "--format", choices=("human", "structured"), default="human"
    )
    p_verify.add_argument(
        "--mutant-starstar", action="store_true", help=argparse.SUPPRESS
    )
    p_verify.set_defaults(func=cmd_verify)

    p_components = sub.add_parser(
        "components", help="genus splittings of a friedman-smith curve"
    )
    p_components.add_argument("genus", type=int)
    p_components.add_argument("n", type=int)
    p_components.add_argument("--output", default=None)
    p_components.add_argument(
        "--format", choices=("human", "structured"), default="human"
    )
    p_components.set_defaults(func=cmd_components)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidGraphError as exc:
        print(f"error: invalid graph: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

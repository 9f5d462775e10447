"""Exhaustive cross-checking of the dicing criteria on small graphs.

Enumerates every connected equivariant multigraph within user-chosen
bounds (optionally one representative per equivariant-isomorphism class)
and runs the whole pipeline on each: rank formula, edge classification by
both routes, conditions (*) and (**) by minors and by the definitional
brute force, the deletion criterion against row independence, witness
soundness, and the equivalences

    (*)  <=>  no Friedman-Smith degeneration with >= 4 crossing edges
    (**) <=>  no Friedman-Smith degeneration with >= 2 crossing edges
    (**) <=>  (*) and no type-2 orbit

Every graph yields a ConsistencyRecord; run_suite streams the records to
a newline-delimited report and persists any counterexample in full.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import linalg
from .dicing import (
    dicing_bruteforce,
    deletion_criterion,
    is_dicing,
    star_matrix,
    star_star_matrix,
    witness_is_sound,
)
from .errors import CapExceededError
from .fs import is_fs_degeneration
from .graphs import (
    EquivariantGraph,
    Involution,
    OrientedEdge,
    Vertex,
    auto_orient,
    canonical_json,
    validate,
)
from .homology import (
    anti_invariant_lattice,
    classify_edge_by_cycles,
    classify_edges,
    involution_on_chain,
)

__all__ = [
    "GenSpec",
    "ConsistencyRecord",
    "SuiteReport",
    "enumerate_graphs",
    "isomorphism_key",
    "check_graph",
    "run_suite",
    "MAX_DEDUP_VERTICES",
    "ORACLE_MAX_D",
]

# Brute-force canonical labeling walks all vertex permutations.
MAX_DEDUP_VERTICES = 8

# The definitional dicing oracle is only consulted up to this rank.
ORACLE_MAX_D = 4


@dataclass(frozen=True)
class GenSpec:
    """Bounds for the enumeration.

    Vertices: up to max_fixed_vertices fixed ones plus up to
    max_vertex_pairs exchanged pairs.  Edge orbits: up to max_fixed_edges
    bold edges (between fixed vertices) and max_edge_pairs exchanged
    pairs, with max_edge_orbits capping the total (None = no cap).  The
    defaults cover every graph with at most 4 vertices and 4 edge orbits.
    """

    max_fixed_vertices: int = 2
    max_vertex_pairs: int = 1
    max_fixed_edges: int = 4
    max_edge_pairs: int = 4
    max_edge_orbits: int | None = 4
    allow_loops: bool = True
    dedup: bool = True

    def __post_init__(self):
        for name in (
            "max_fixed_vertices",
            "max_vertex_pairs",
            "max_fixed_edges",
            "max_edge_pairs",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.max_edge_orbits is not None and self.max_edge_orbits < 0:
            raise ValueError("max_edge_orbits must be >= 0 or None")


@dataclass(frozen=True)
class ConsistencyRecord:
    """All verdicts for one graph plus the pass/fail map of every check."""

    graph_encoding: str
    d: int
    n_e: int
    c_e: int
    star: bool
    starstar: bool
    fs2: bool
    fs4: bool
    has_type2: bool
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failing_checks(self) -> tuple[str, ...]:
        return tuple(sorted(k for k, v in self.checks.items() if not v))


@dataclass(frozen=True)
class SuiteReport:
    n_graphs: int
    n_failed_graphs: int
    n_failed_checks: int
    per_check: dict[str, tuple[int, int]]
    report_path: str
    counterexamples_path: str
    summary_path: str

    @property
    def ok(self) -> bool:
        return self.n_failed_checks == 0


def _vertex_layout(n_fixed: int, n_pairs: int):
    fixed = [f"u{k + 1}" for k in range(n_fixed)]
    pairs = [(f"v{k + 1}a", f"v{k + 1}b") for k in range(n_pairs)]
    vmap = {u: u for u in fixed}
    for a, b in pairs:
        vmap[a] = b
        vmap[b] = a
    ids = fixed + [v for ab in pairs for v in ab]
    return ids, vmap


def _edge_slots(ids, vmap, allow_loops: bool):
    fixed_ids = [v for v in ids if vmap[v] == v]
    bold_slots = []
    for i, x in enumerate(fixed_ids):
        for y in fixed_ids[i:]:
            if x == y and not allow_loops:
                continue
            bold_slots.append((x, y))
    pair_slots = []
    seen = set()
    for i, x in enumerate(ids):
        for y in ids[i:]:
            if x == y and not allow_loops:
                continue
            ends = tuple(sorted((x, y)))
            mirrored = tuple(sorted((vmap[x], vmap[y])))
            slot = min(ends, mirrored)
            if slot in seen:
                continue
            seen.add(slot)
            pair_slots.append(slot)
    return bold_slots, pair_slots


def _assemble(ids, vmap, bold_choice, pair_choice) -> EquivariantGraph:
    vertices = tuple(Vertex(v) for v in ids)
    edges = []
    emap = {}
    for k, (x, y) in enumerate(bold_choice, start=1):
        eid = f"s{k}"
        edges.append(OrientedEdge(eid, x, y))
        emap[eid] = eid
    for k, (x, y) in enumerate(pair_choice, start=1):
        first, second = f"e{k}a", f"e{k}b"
        edges.append(OrientedEdge(first, x, y))
        edges.append(OrientedEdge(second, vmap[x], vmap[y]))
        emap[first] = second
        emap[second] = first
    return EquivariantGraph(vertices, tuple(edges), Involution(dict(vmap), emap))


def isomorphism_key(g: EquivariantGraph):
    """Canonical form under equivariant isomorphism, by brute force.

    Minimizes, over all vertex relabelings to 0..n-1, the triple
    (involution as a permutation, sorted bold endpoint pairs, sorted
    exchanged-orbit endpoint pairs normalized within each orbit).  Two
    graphs get the same key exactly when some vertex bijection matches
    the involutions and both edge multisets.
    """
    n = len(g.vertices)
    if n > MAX_DEDUP_VERTICES:
        raise CapExceededError(
            f"canonical labeling walks n! permutations; refusing n = {n} > "
            f"{MAX_DEDUP_VERTICES} vertices"
        )
    ids = g.vertex_ids
    vmap = g.involution.vertices
    bold_ends = []
    orbit_ends = []
    seen = set()
    for e in g.edges:
        if g.is_bold_edge(e.id):
            bold_ends.append((e.tail, e.head))
        elif e.id not in seen:
            seen.update((e.id, g.emap(e.id)))
            orbit_ends.append((e.tail, e.head))
    best = None
    for perm in itertools.permutations(range(n)):
        pos = dict(zip(ids, perm))
        tau = [0] * n
        for vid in ids:
            tau[pos[vid]] = pos[vmap[vid]]
        bold_key = tuple(
            sorted(tuple(sorted((pos[x], pos[y]))) for x, y in bold_ends)
        )
        orbit_key = tuple(
            sorted(
                min(
                    tuple(sorted((pos[x], pos[y]))),
                    tuple(sorted((pos[vmap[x]], pos[vmap[y]]))),
                )
                for x, y in orbit_ends
            )
        )
        key = (tuple(tau), bold_key, orbit_key)
        if best is None or key < best:
            best = key
    return (n, best)


def enumerate_graphs(spec: GenSpec) -> Iterator[EquivariantGraph]:
    """All connected equivariant multigraphs within the bounds, in a fixed
    deterministic order; with spec.dedup, one per isomorphism class.

    Dedup needs canonical labeling, so it refuses up front any spec that
    admits more than MAX_DEDUP_VERTICES vertices; pass dedup=False for
    larger (duplicate-containing) enumerations.
    """
    max_vertices = spec.max_fixed_vertices + 2 * spec.max_vertex_pairs
    if spec.dedup and max_vertices > MAX_DEDUP_VERTICES:
        raise CapExceededError(
            f"dedup would need canonical labeling on up to {max_vertices} "
            f"vertices (cap {MAX_DEDUP_VERTICES}); rerun without dedup"
        )
    seen_keys = set()
    for n_fixed in range(spec.max_fixed_vertices + 1):
        for n_pairs in range(spec.max_vertex_pairs + 1):
            if n_fixed + 2 * n_pairs == 0:
                continue
            ids, vmap = _vertex_layout(n_fixed, n_pairs)
            bold_slots, pair_slots = _edge_slots(ids, vmap, spec.allow_loops)
            for n_bold in range(spec.max_fixed_edges + 1):
                for n_pair in range(spec.max_edge_pairs + 1):
                    if (
                        spec.max_edge_orbits is not None
                        and n_bold + n_pair > spec.max_edge_orbits
                    ):
                        continue
                    for bold_choice in itertools.combinations_with_replacement(
                        bold_slots, n_bold
                    ):
                        for pair_choice in itertools.combinations_with_replacement(
                            pair_slots, n_pair
                        ):
                            g = _assemble(ids, vmap, bold_choice, pair_choice)
                            report = validate(g)
                            if not report.ok:
                                if any(
                                    code != "not-connected"
                                    for code, _ in report.violations
                                ):
                                    raise RuntimeError(
                                        "enumeration produced an invalid graph: "
                                        f"{report.violations}"
                                    )
                                continue
                            if spec.dedup:
                                key = isomorphism_key(g)
                                if key in seen_keys:
                                    continue
                                seen_keys.add(key)
                            yield g


def check_graph(g: EquivariantGraph, *, mutate_starstar: bool = False) -> ConsistencyRecord:
    """Run the whole pipeline on one valid graph and record every check.

    A failing check is recorded, never raised.  mutate_starstar is the
    harness self-test hook: it doubles every row of the (**) matrix, which
    must produce recorded theorem2 failures on suitable graphs.
    """
    og = auto_orient(g)
    report = validate(og)
    lattice = anti_invariant_lattice(og)
    d = lattice.rank
    classes = classify_edges(og, lattice)
    has_type2 = any(c.type == 2 for c in classes)

    m_star = star_matrix(lattice, classes)
    m_starstar = star_star_matrix(lattice, classes)
    if mutate_starstar:
        m_starstar = dataclasses.replace(
            m_starstar,
            rows=tuple(
                (rep, tuple(2 * v for v in vec)) for rep, vec in m_starstar.rows
            ),
        )
    star_verdict = is_dicing(m_star)
    starstar_verdict = is_dicing(m_starstar)
    star = star_verdict.is_dicing
    starstar = starstar_verdict.is_dicing

    fs2 = is_fs_degeneration(og, 2) is not None
    fs4 = is_fs_degeneration(og, 4) is not None

    checks = {
        "theorem1": star == (not fs4),
        "theorem2_i_iii": starstar == (not fs2),
        "theorem2_ii_iii": starstar == (star and not has_type2),
        "rank": d == report.n_e - report.c_e,
        "antisymmetry": all(
            involution_on_chain(og, chain) == chain.scale(-1)
            for chain in lattice.basis
        ),
        "gcd_bound": all(v in (0, 1, 2) for v in lattice.edge_gcds.values())
        and all(c.type == 1 for c in classes if og.is_bold_edge(c.orbit_rep)),
        "classifier_agreement": all(
            classify_edge_by_cycles(og, c.orbit_rep) == c.type
            and classify_edge_by_cycles(og, c.partner) == c.type
            for c in classes
        ),
    }
    if d <= ORACLE_MAX_D:
        checks["oracle_dicing"] = (
            dicing_bruteforce(m_star) == star
            and dicing_bruteforce(m_starstar) == starstar
        )

    rows_by_rep = dict(m_star.rows)
    nontrivial = [c.orbit_rep for c in classes if c.type != 1]
    deletion_ok = True
    for subset in itertools.combinations(nontrivial, d):
        independent = linalg.det([list(rows_by_rep[rep]) for rep in subset]) != 0
        if deletion_criterion(og, subset) != independent:
            deletion_ok = False
            break
    checks["deletion"] = deletion_ok

    sound = True
    if not star:
        sound = sound and witness_is_sound(m_star, star_verdict)
    if not starstar:
        sound = sound and witness_is_sound(m_starstar, starstar_verdict)
    checks["witness_soundness"] = sound

    return ConsistencyRecord(
        graph_encoding=canonical_json(og),
        d=d,
        n_e=report.n_e,
        c_e=report.c_e,
        star=star,
        starstar=starstar,
        fs2=fs2,
        fs4=fs4,
        has_type2=has_type2,
        checks=checks,
    )


def record_as_object(record: ConsistencyRecord) -> dict:
    """The record as one self-contained plain object (one report line)."""
    return {
        "graph": json.loads(record.graph_encoding),
        "d": record.d,
        "n_e": record.n_e,
        "c_e": record.c_e,
        "star": record.star,
        "starstar": record.starstar,
        "fs2": record.fs2,
        "fs4": record.fs4,
        "has_type2": record.has_type2,
        "checks": record.checks,
    }


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run_suite(
    spec: GenSpec, out_path, *, mutate_starstar: bool = False
) -> SuiteReport:
    """Stream every ConsistencyRecord to out_path (newline-delimited),
    every failing graph to <stem>.counterexamples.ndjson (graph document
    plus the failing check names), and a summary to <stem>.summary.json.

    Byte-identical across reruns with the same spec.
    """
    out = Path(out_path)
    base = out.with_suffix("") if out.suffix else out
    counter_path = base.with_name(base.name + ".counterexamples.ndjson")
    summary_path = base.with_name(base.name + ".summary.json")

    n_graphs = 0
    n_failed_graphs = 0
    n_failed_checks = 0
    per_check: dict[str, list[int]] = {}
    with open(out, "w") as report_fh, open(counter_path, "w") as counter_fh:
        for g in enumerate_graphs(spec):
            record = check_graph(g, mutate_starstar=mutate_starstar)
            n_graphs += 1
            report_fh.write(_dumps(record_as_object(record)) + "\n")
            for name, passed in record.checks.items():
                tally = per_check.setdefault(name, [0, 0])
                tally[0 if passed else 1] += 1
            failing = record.failing_checks()
            if failing:
                n_failed_graphs += 1
                n_failed_checks += len(failing)
                doc = json.loads(record.graph_encoding)
                doc["failing_checks"] = list(failing)
                counter_fh.write(_dumps(doc) + "\n")

    summary = {
        "spec": dataclasses.asdict(spec),
        "graphs": n_graphs,
        "failed_graphs": n_failed_graphs,
        "failed_checks": n_failed_checks,
        "per_check": {
            name: {"pass": tally[0], "fail": tally[1]}
            for name, tally in sorted(per_check.items())
        },
        "ok": n_failed_checks == 0,
    }
    summary_path.write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n")

    return SuiteReport(
        n_graphs=n_graphs,
        n_failed_graphs=n_failed_graphs,
        n_failed_checks=n_failed_checks,
        per_check={k: (v[0], v[1]) for k, v in sorted(per_check.items())},
        report_path=str(out),
        counterexamples_path=str(counter_path),
        summary_path=str(summary_path),
    )

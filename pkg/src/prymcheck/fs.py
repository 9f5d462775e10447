"""Friedman-Smith degenerations: equivariant bipartitions whose crossing
edges are all ordinary.

A Friedman-Smith witness is a bipartition of the vertices into two
nonempty, involution-invariant parts, each inducing a connected subgraph,
such that no crossing edge is bold.  Crossing edges then come in exchanged
pairs, so the crossing count is even; a witness with count 2n corresponds
to two curve components meeting in 2n points swapped in pairs.

complete_subgraph_pair grows a pair of disjoint connected equivariant
subgraphs into a full witness: absorb the bold components meeting each
part, then absorb every complement component attached to one part only;
what remains attached to both parts stays outside and the second part
finally takes all remaining vertices.  This cannot decrease the number of
ordinary edges connecting the two parts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CapExceededError
from .graphs import EquivariantGraph, bold_subgraph, require_valid

__all__ = [
    "DEFAULT_ORBIT_CAP",
    "FSWitness",
    "SubgraphPair",
    "fs_bipartitions",
    "is_fs_degeneration",
    "complete_subgraph_pair",
    "fs_component_genera",
    "fs_report",
]

DEFAULT_ORBIT_CAP = 20


@dataclass(frozen=True)
class FSWitness:
    """An equivariant bipartition with ordinary crossings only; part1 is
    the side produced first by the deterministic enumeration (for
    enumerated witnesses: the side holding the smallest vertex id)."""

    part1: frozenset[str]
    part2: frozenset[str]
    crossing_orbits: tuple[tuple[str, str], ...]
    crossing_count: int


@dataclass(frozen=True)
class SubgraphPair:
    """Two disjoint vertex/edge sets, each meant to induce a connected
    equivariant subgraph; input to complete_subgraph_pair."""

    vertices1: frozenset[str]
    edges1: frozenset[str]
    vertices2: frozenset[str]
    edges2: frozenset[str]


def _induced_connected(g: EquivariantGraph, part) -> bool:
    edges = [e for e in g.edges if e.tail in part and e.head in part]
    if not part:
        return False
    adjacency = {v: [] for v in part}
    for e in edges:
        adjacency[e.tail].append(e.head)
        adjacency[e.head].append(e.tail)
    start = min(part)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(part)


def _crossings(g: EquivariantGraph, part1):
    """Crossing edge ids for the bipartition (part1, rest)."""
    return [
        e.id for e in g.edges if (e.tail in part1) != (e.head in part1)
    ]


def _crossing_orbits(g: EquivariantGraph, crossing):
    emap = g.involution.edges
    orbits = set()
    for eid in crossing:
        partner = emap[eid]
        orbits.add((eid, partner) if eid <= partner else (partner, eid))
    return tuple(sorted(orbits))


def fs_bipartitions(g: EquivariantGraph, orbit_cap: int = DEFAULT_ORBIT_CAP):
    """All Friedman-Smith witnesses, in a deterministic order.

    Enumerates subsets of vertex orbits (part1 always contains the orbit of
    the smallest vertex id, so each bipartition appears once) and keeps
    those where both sides are connected and no crossing edge is bold.
    """
    require_valid(g)
    orbits = g.vertex_orbits()
    if len(orbits) > orbit_cap:
        raise CapExceededError(
            f"{len(orbits)} vertex orbits exceed the cap {orbit_cap}"
        )
    emap = g.involution.edges
    out = []
    full = (1 << len(orbits)) - 1
    for mask in range(1, full, 2):
        part1 = frozenset(
            v for bit, orbit in enumerate(orbits) if mask >> bit & 1 for v in orbit
        )
        part2 = frozenset(g.vertex_ids) - part1
        if not _induced_connected(g, part1) or not _induced_connected(g, part2):
            continue
        crossing = _crossings(g, part1)
        if any(emap[eid] == eid for eid in crossing):
            continue
        out.append(
            FSWitness(part1, part2, _crossing_orbits(g, crossing), len(crossing))
        )
    return tuple(out)


def is_fs_degeneration(
    g: EquivariantGraph, min_edges: int = 4, orbit_cap: int = DEFAULT_ORBIT_CAP
):
    """The witness with the most crossings among those with at least
    min_edges, or None; ties go to the first in enumeration order."""
    if min_edges < 2 or min_edges % 2:
        raise ValueError("min_edges must be an even number >= 2")
    best = None
    for witness in fs_bipartitions(g, orbit_cap):
        if witness.crossing_count >= min_edges:
            if best is None or witness.crossing_count > best.crossing_count:
                best = witness
    return best


def _check_pair(g: EquivariantGraph, pair: SubgraphPair):
    vmap = g.involution.vertices
    emap = g.involution.edges
    problems = []
    sides = (
        ("first", pair.vertices1, pair.edges1),
        ("second", pair.vertices2, pair.edges2),
    )
    for label, verts, edges in sides:
        if not verts:
            problems.append(f"{label} part has no vertices")
            continue
        unknown = sorted(v for v in verts if v not in vmap)
        if unknown:
            problems.append(f"{label} part: unknown vertices {unknown}")
            continue
        if {vmap[v] for v in verts} != set(verts):
            problems.append(f"{label} part is not involution-invariant")
        bad_edges = sorted(e for e in edges if e not in emap)
        if bad_edges:
            problems.append(f"{label} part: unknown edges {bad_edges}")
            continue
        if {emap[e] for e in edges} != set(edges):
            problems.append(f"{label} part: edge set is not involution-invariant")
        outside = sorted(
            e for e in edges if g.edge(e).tail not in verts or g.edge(e).head not in verts
        )
        if outside:
            problems.append(f"{label} part: edges {outside} leave its vertex set")
        elif not _subgraph_connected(g, verts, edges):
            problems.append(f"{label} part is not connected")
    if pair.vertices1 & pair.vertices2:
        problems.append("parts share vertices")
    if problems:
        raise ValueError("malformed subgraph pair: " + "; ".join(problems))


def _subgraph_connected(g: EquivariantGraph, verts, edges) -> bool:
    adjacency = {v: [] for v in verts}
    for eid in edges:
        e = g.edge(eid)
        adjacency[e.tail].append(e.head)
        adjacency[e.head].append(e.tail)
    start = min(verts)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(verts)


def complete_subgraph_pair(
    g: EquivariantGraph, pair: SubgraphPair, min_edges: int = 4
) -> FSWitness:
    """Grow a valid pair into a full Friedman-Smith witness.

    Preconditions: the parts are connected by at least min_edges ordinary
    edges and by no bold path.  The returned witness keeps the input sides:
    part1 contains vertices1, part2 contains vertices2 and every vertex not
    absorbed into part1.
    """
    if min_edges < 2 or min_edges % 2:
        raise ValueError("min_edges must be an even number >= 2")
    require_valid(g)
    _check_pair(g, pair)
    emap = g.involution.edges

    direct = [
        e.id
        for e in g.edges
        if (e.tail in pair.vertices1 and e.head in pair.vertices2)
        or (e.tail in pair.vertices2 and e.head in pair.vertices1)
    ]
    ordinary_direct = [eid for eid in direct if emap[eid] != eid]
    if len(ordinary_direct) < min_edges:
        raise ValueError(
            f"parts are connected by only {len(ordinary_direct)} ordinary "
            f"edges, need at least {min_edges}"
        )

    bold = bold_subgraph(g)
    for comp in bold.components:
        if comp.vertices & pair.vertices1 and comp.vertices & pair.vertices2:
            raise ValueError(
                "parts are connected by a bold path through "
                f"{sorted(comp.vertices)}"
            )

    verts1 = set(pair.vertices1)
    edges1 = set(pair.edges1)
    verts2 = set(pair.vertices2)
    edges2 = set(pair.edges2)
    for comp in bold.components:
        if comp.vertices & verts1:
            verts1 |= comp.vertices
            edges1 |= comp.edges
        elif comp.vertices & verts2:
            verts2 |= comp.vertices
            edges2 |= comp.edges

    outside = set(g.vertex_ids) - verts1 - verts2
    complement = [e.id for e in g.edges if e.id not in edges1 and e.id not in edges2]
    incident = {v: [] for v in outside}
    for eid in complement:
        e = g.edge(eid)
        for v in (e.tail, e.head):
            if v in outside:
                incident[v].append(eid)

    unseen = set(complement)
    for seed in sorted(complement):
        if seed not in unseen:
            continue
        comp_edges = {seed}
        comp_verts = set()
        unseen.discard(seed)
        stack = [seed]
        while stack:
            eid = stack.pop()
            e = g.edge(eid)
            for v in (e.tail, e.head):
                if v in outside and v not in comp_verts:
                    comp_verts.add(v)
                    for other in incident[v]:
                        if other in unseen:
                            unseen.discard(other)
                            comp_edges.add(other)
                            stack.append(other)
        touches1 = any(
            v in verts1 for eid in comp_edges for v in (g.edge(eid).tail, g.edge(eid).head)
        )
        touches2 = any(
            v in verts2 for eid in comp_edges for v in (g.edge(eid).tail, g.edge(eid).head)
        )
        if touches1 and not touches2:
            verts1 |= comp_verts
            edges1 |= comp_edges
        elif touches2 and not touches1:
            verts2 |= comp_verts
            edges2 |= comp_edges
        elif not touches1 and not touches2:
            raise RuntimeError(
                "complement component attached to neither part; the graph "
                "should be connected"
            )

    part1 = frozenset(verts1)
    part2 = frozenset(g.vertex_ids) - part1
    crossing = _crossings(g, part1)
    if any(emap[eid] == eid for eid in crossing):
        raise RuntimeError("completion left a bold crossing edge; this is a bug")
    if len(crossing) < len(ordinary_direct):
        raise RuntimeError("completion lost connecting edges; this is a bug")
    if not _induced_connected(g, part1) or not _induced_connected(g, part2):
        raise RuntimeError("completion produced a disconnected part; this is a bug")
    return FSWitness(part1, part2, _crossing_orbits(g, crossing), len(crossing))


def fs_component_genera(genus: int, n: int):
    """Genus splittings (k, genus - n + 1 - k) of the two components of a
    Friedman-Smith curve with 2n intersection points; there are
    floor((genus - n + 1) / 2) + 1 of them."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if genus < n - 1:
        raise ValueError("genus must be at least n - 1")
    total = genus - n + 1
    return tuple((k, total - k) for k in range(total // 2 + 1))


def fs_report(g: EquivariantGraph) -> str:
    """Human-readable Friedman-Smith summary at thresholds 2 and 4."""
    witnesses = fs_bipartitions(g)
    lines = [f"friedman-smith bipartitions with ordinary crossings: {len(witnesses)}"]
    for threshold in (2, 4):
        best = is_fs_degeneration(g, threshold)
        if best is None:
            lines.append(f"  threshold {threshold}: no")
        else:
            orbit_text = ", ".join(f"{a}~{b}" for a, b in best.crossing_orbits)
            lines.append(
                f"  threshold {threshold}: YES - parts "
                f"{{{', '.join(sorted(best.part1))}}} | {{{', '.join(sorted(best.part2))}}}, "
                f"crossing orbits {orbit_text}, count {best.crossing_count}"
            )
    return "\n".join(lines)

"""Cycle space and the anti-invariant lattice of an equivariant graph.

Units convention (used everywhere downstream): chain coordinates are stored
DOUBLED, i.e. the stored integer is twice the true coefficient.  An integral
cycle therefore has even stored entries, and the generators (omega - i
omega)/2 of the anti-invariant lattice X^- stay integral in stored form.
Reports print stored values together with a "multiply by 1/2" legend.

The first homology of the graph is the cycle space; a deterministic BFS
spanning tree (lexicographic roots, edges explored in id order) gives one
fundamental cycle per chord, with coefficient +1 on the chord.  X^- is the
image of (1 - i)/2 on the cycle lattice; its canonical basis is the
row-style Hermite normal form of the generator matrix, with columns indexed
by sorted edge ids.

Edge classification: for an edge j, the linear function z_j reads off the
true j-coordinate of a lattice element.  With G_j = gcd of the stored basis
column at j: G_j = 0 means z_j vanishes on X^- (type 1, every bold edge is
such); G_j = 2 means z_j takes integer values (type 2, multiplier m = 1);
G_j = 1 means z_j takes genuinely half-integer values (type 3, m = 2).  No
other gcd can occur.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from . import linalg
from .errors import CapExceededError
from .graphs import EquivariantGraph, auto_orient, require_valid

__all__ = [
    "DEFAULT_CYCLE_CAP",
    "Chain",
    "CycleBasis",
    "AntiInvariantLattice",
    "EdgeClass",
    "fundamental_cycles",
    "involution_on_chain",
    "simple_cycles",
    "anti_invariant_lattice",
    "rank_formula",
    "classify_edges",
    "classify_edge_by_cycles",
    "classification_report",
]

DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class Chain:
    """An integer edge vector in doubled units; zero entries are dropped,
    so equal chains compare equal."""

    coords: dict[str, int]

    def __post_init__(self):
        object.__setattr__(
            self, "coords", {k: v for k, v in sorted(self.coords.items()) if v}
        )

    def __getitem__(self, edge_id: str) -> int:
        return self.coords.get(edge_id, 0)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def vector(self, edge_ids) -> list[int]:
        return [self.coords.get(e, 0) for e in edge_ids]

    def __add__(self, other: "Chain") -> "Chain":
        merged = dict(self.coords)
        for k, v in other.coords.items():
            merged[k] = merged.get(k, 0) + v
        return Chain(merged)

    def __neg__(self) -> "Chain":
        return Chain({k: -v for k, v in self.coords.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, factor: int) -> "Chain":
        return Chain({k: factor * v for k, v in self.coords.items()})


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a deterministic spanning forest; one chain per
    chord, with stored coefficient +2 (true +1) on the chord."""

    chains: tuple[Chain, ...]
    tree_edges: frozenset[str]


@dataclass(frozen=True)
class AntiInvariantLattice:
    """Canonical data of X^-: HNF basis rows (doubled units) over sorted
    edge-id columns, the rank d, and the per-edge column gcds."""

    edge_ids: tuple[str, ...]
    basis: tuple[Chain, ...]
    rank: int
    edge_gcds: dict[str, int]

    def matrix(self) -> list[list[int]]:
        return [chain.vector(self.edge_ids) for chain in self.basis]


@dataclass(frozen=True)
class EdgeClass:
    """Classification of one edge orbit; multiplier is the m with
    image(z_j) = (1/m) Z, absent for type 1."""

    orbit_rep: str
    partner: str
    type: int
    multiplier: int | None


def _require_oriented(g: EquivariantGraph):
    require_valid(g)
    if not g.oriented:
        raise ValueError(
            "graph orientation is not normalized; call auto_orient first"
        )


def _adjacency(g: EquivariantGraph):
    adj = {vid: [] for vid in g.vertex_ids}
    for eid in g.edge_ids:
        e = g.edge(eid)
        adj[e.tail].append((eid, e.head, 1))
        adj[e.head].append((eid, e.tail, -1))
    for lst in adj.values():
        lst.sort()
    return adj


def _cycle_data(g: EquivariantGraph):
    """BFS forest plus fundamental chord chains (doubled units).  Works on
    disconnected graphs (one tree per component)."""
    adj = _adjacency(g)
    path = {}
    tree = set()
    for root in g.vertex_ids:
        if root in path:
            continue
        path[root] = {}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for eid, w, sign in adj[v]:
                if w in path:
                    continue
                step = dict(path[v])
                step[eid] = step.get(eid, 0) + sign
                path[w] = step
                tree.add(eid)
                queue.append(w)
    chains = []
    for eid in g.edge_ids:
        if eid in tree:
            continue
        e = g.edge(eid)
        coords = {eid: 1}
        for k, v in path[e.tail].items():
            coords[k] = coords.get(k, 0) + v
        for k, v in path[e.head].items():
            coords[k] = coords.get(k, 0) - v
        chains.append(Chain({k: 2 * v for k, v in coords.items()}))
    return chains, tree


def fundamental_cycles(g: EquivariantGraph) -> CycleBasis:
    """Cycle space basis from the deterministic spanning tree.

    Requires a valid graph with normalized orientation.  For a connected
    graph the basis has #edges - #vertices + 1 chains.
    """
    _require_oriented(g)
    chains, tree = _cycle_data(g)
    return CycleBasis(tuple(chains), frozenset(tree))


def involution_on_chain(g: EquivariantGraph, chain: Chain) -> Chain:
    """Push a chain forward along the involution: the coordinate of the
    image at edge i(j) equals the coordinate of the input at edge j.  Only
    meaningful once the orientation is normalized."""
    emap = g.involution.edges
    return Chain({emap[k]: v for k, v in chain.coords.items()})


def simple_cycles(g: EquivariantGraph, cap: int = DEFAULT_CYCLE_CAP):
    """All simple cycles as doubled chains, each exactly once up to sign and
    rotation, in a deterministic order.

    A loop is a cycle of length 1 and appears only as such.  Every other
    cycle visits distinct vertices.  The representative traverses the
    smallest edge id forward from its tail.  Raises CapExceededError when
    more than cap cycles would be produced.
    """
    require_valid(g)
    adj = _adjacency(g)
    out = []

    def emit(coords):
        if len(out) >= cap:
            raise CapExceededError(f"more than {cap} simple cycles")
        out.append(Chain({k: 2 * v for k, v in coords.items()}))

    for anchor_id in g.edge_ids:
        anchor = g.edge(anchor_id)
        if anchor.tail == anchor.head:
            emit({anchor_id: 1})
            continue
        start = anchor.tail
        coords = {anchor_id: 1}
        visited = {anchor.tail, anchor.head}

        def walk(v):
            for eid, w, sign in adj[v]:
                if eid <= anchor_id or eid in coords or w == v:
                    continue
                if w == start:
                    coords[eid] = sign
                    emit(coords)
                    del coords[eid]
                elif w not in visited:
                    coords[eid] = sign
                    visited.add(w)
                    walk(w)
                    del coords[eid]
                    visited.discard(w)

        walk(anchor.head)
    return tuple(out)


def _anti_rows(g: EquivariantGraph):
    """Generator rows of X^- (doubled units) over sorted edge-id columns."""
    chains, _ = _cycle_data(g)
    edge_ids = list(g.edge_ids)
    rows = []
    for omega in chains:
        image = involution_on_chain(g, omega)
        row = []
        for eid in edge_ids:
            diff = omega[eid] - image[eid]
            assert diff % 2 == 0
            row.append(diff // 2)
        rows.append(row)
    return rows


def anti_invariant_lattice(g: EquivariantGraph) -> AntiInvariantLattice:
    """The lattice X^- = image of (1 - i)/2 on integral cycles, with its
    canonical HNF basis in doubled units."""
    _require_oriented(g)
    edge_ids = g.edge_ids
    basis_rows = linalg.hnf_rows(_anti_rows(g))
    basis = tuple(
        Chain(dict(zip(edge_ids, row))) for row in basis_rows
    )
    gcds = {}
    for col, eid in enumerate(edge_ids):
        gcds[eid] = math.gcd(*(row[col] for row in basis_rows)) if basis_rows else 0
    return AntiInvariantLattice(edge_ids, basis, len(basis), gcds)


def rank_formula(g: EquivariantGraph) -> int:
    """Predicted rank of X^-: (exchanged edge pairs) - (exchanged vertex
    pairs), straight from the counts of a valid graph."""
    report = require_valid(g)
    return report.n_e - report.c_e


def classify_edges(g: EquivariantGraph, lattice: AntiInvariantLattice | None = None):
    """Classify every edge orbit by the column gcd of the X^- basis.

    If lattice is given it must be anti_invariant_lattice(auto_orient(g)).
    Returns EdgeClass entries sorted by orbit representative.
    """
    og = auto_orient(g)
    lat = lattice if lattice is not None else anti_invariant_lattice(og)
    out = []
    for rep, partner in og.edge_orbits():
        gcd = lat.edge_gcds[rep]
        if gcd == 0:
            out.append(EdgeClass(rep, partner, 1, None))
        elif gcd == 2:
            out.append(EdgeClass(rep, partner, 2, 1))
        elif gcd == 1:
            out.append(EdgeClass(rep, partner, 3, 2))
        else:
            raise RuntimeError(
                f"edge {rep!r}: basis column gcd {gcd} outside {{0,1,2}}; "
                "this contradicts a proved invariant and means a bug upstream"
            )
    return tuple(out)


def classify_edge_by_cycles(
    g: EquivariantGraph, edge_id: str, cap: int = DEFAULT_CYCLE_CAP
) -> int:
    """Independent classification of one edge via simple cycles.

    Type 3 iff some simple cycle runs through the edge exactly once while
    missing its partner; type 1 iff (omega - i omega)/2 has zero coordinate
    at the edge for every simple cycle omega; type 2 otherwise.
    """
    og = auto_orient(g)
    if edge_id not in og.involution.edges:
        raise KeyError(edge_id)
    partner = og.emap(edge_id)
    saw_unit_alone = False
    saw_nonzero = False
    for cycle in simple_cycles(og, cap):
        a = cycle[edge_id]
        b = cycle[partner]
        if abs(a) == 2 and b == 0:
            saw_unit_alone = True
        if a != b:
            saw_nonzero = True
    if saw_unit_alone:
        return 3
    return 2 if saw_nonzero else 1


def classification_report(g: EquivariantGraph) -> str:
    """Human-readable classification of all edge orbits."""
    og = auto_orient(g)
    lat = anti_invariant_lattice(og)
    classes = classify_edges(og, lat)
    report = require_valid(og)
    lines = [
        f"rank d = {lat.rank} (exchanged edge pairs {report.n_e} - exchanged vertex pairs {report.c_e})",
        "edge orbits (basis values in doubled units; multiply by 1/2 for true coordinates):",
    ]
    for cls in classes:
        values = [chain[cls.orbit_rep] for chain in lat.basis]
        label = (
            f"{cls.orbit_rep} (fixed)"
            if cls.orbit_rep == cls.partner
            else f"{cls.orbit_rep} ~ {cls.partner}"
        )
        mult = f", m = {cls.multiplier}" if cls.multiplier is not None else ""
        lines.append(
            f"  {label}: type {cls.type}{mult}, G = {lat.edge_gcds[cls.orbit_rep]}, values = {values}"
        )
    return "\n".join(lines)

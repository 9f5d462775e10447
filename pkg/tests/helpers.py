"""Builders shared across test modules."""

from __future__ import annotations

import random
from pathlib import Path

from prymcheck.graphs import EquivariantGraph, Involution, OrientedEdge, Vertex, parse_graph

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return parse_graph((FIXTURES / f"{name}.json").read_text())


def make_graph(vertex_spec, edge_spec, vswaps=(), eswaps=(), oriented=False):
    """Compact graph builder.

    vertex_spec: iterable of id or (id, genus); edge_spec: iterable of
    (id, tail, head); vswaps/eswaps: iterable of (a, b) exchanged pairs,
    everything else fixed.
    """
    vertices = []
    for item in vertex_spec:
        if isinstance(item, str):
            vertices.append(Vertex(item))
        else:
            vertices.append(Vertex(item[0], item[1]))
    edges = [OrientedEdge(*spec) for spec in edge_spec]
    vmap = {v.id: v.id for v in vertices}
    for a, b in vswaps:
        vmap[a] = b
        vmap[b] = a
    emap = {e.id: e.id for e in edges}
    for a, b in eswaps:
        emap[a] = b
        emap[b] = a
    return EquivariantGraph(tuple(vertices), tuple(edges), Involution(vmap, emap), oriented)


def relabel(g: EquivariantGraph, rng: random.Random) -> EquivariantGraph:
    """Structure-preserving random renaming of all vertex and edge ids."""
    vnames = [f"x{k}" for k in range(len(g.vertices))]
    enames = [f"y{k}" for k in range(len(g.edges))]
    rng.shuffle(vnames)
    rng.shuffle(enames)
    vsub = dict(zip(g.vertex_ids, vnames))
    esub = dict(zip(g.edge_ids, enames))
    return EquivariantGraph(
        tuple(Vertex(vsub[v.id], v.genus) for v in g.vertices),
        tuple(
            OrientedEdge(esub[e.id], vsub[e.tail], vsub[e.head]) for e in g.edges
        ),
        Involution(
            {vsub[a]: vsub[b] for a, b in g.involution.vertices.items()},
            {esub[a]: esub[b] for a, b in g.involution.edges.items()},
        ),
    )


def fs_chain(n_pairs, tail_edges=0):
    """FS(2k) banana graph: two fixed vertices joined by k exchanged pairs,
    optionally extended by a path of fixed (bold) edges hanging off v2."""
    names = "abcdefgh"
    vertices = ["v1", "v2"]
    edges = []
    eswaps = []
    for k in range(n_pairs):
        e1, e2 = f"{names[k]}1", f"{names[k]}2"
        edges.append((e1, "v1", "v2"))
        edges.append((e2, "v1", "v2"))
        eswaps.append((e1, e2))
    for t in range(tail_edges):
        vertices.append(f"v{t + 3}")
        edges.append((f"t{t + 1}", f"v{t + 2}", f"v{t + 3}"))
    return make_graph(vertices, edges, eswaps=eswaps)

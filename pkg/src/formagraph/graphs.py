"""Non-F-graphs, generating graphs, connectivity and planarity.

Graphs live on element indices of one group and keep one bitset row per
element (rows of excluded vertices are 0).  Since ``<g, h>`` is the join of
``<g>`` and ``<h>``, edges are decided once per pair of cyclic subgroups and
then stamped onto all generators of the two cyclic subgroups.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable
from xml.sax.saxutils import escape

import networkx as nx

from . import bits as B
from . import formations as FM
from . import structure as S
from .core import FiniteGroup

FULL_NONF = "full_nonF"
PRUNED_NONF = "pruned_nonF"
GENERATING_FULL = "generating_full"
GENERATING_PRUNED = "generating_pruned"


@dataclass(frozen=True)
class ElementGraph:
    vertex_bits: int
    adjacency: tuple[int, ...]
    kind: str
    labels: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def vertices(self) -> list[int]:
        return list(B.iter_bits(self.vertex_bits))

    @property
    def vertex_count(self) -> int:
        return self.vertex_bits.bit_count()

    @property
    def edge_count(self) -> int:
        return sum(self.adjacency[v].bit_count() for v in self.vertices()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in self.vertices():
            for w in B.iter_bits(self.adjacency[v] >> (v + 1) << (v + 1)):
                out.append((v, w))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()


def _rows_from_pairs(G: FiniteGroup, pairs) -> tuple[int, ...]:
    """Rows of the graph whose edges join all generators of cyclic i and j."""
    _, _, gens = S.cyclic_index(G)
    nbr = [0] * len(gens)
    for i, j in pairs:
        nbr[i] |= gens[j]
        nbr[j] |= gens[i]
    rows = [0] * G.order
    for i, g in enumerate(gens):
        if nbr[i]:
            for x in B.iter_bits(g):
                rows[x] = nbr[i] & ~(1 << x)
    return tuple(rows)


def build_nonf_graph(G: FiniteGroup, F: FM.FormationSpec) -> ElementGraph:
    """Full non-F graph: g ~ h iff <g, h> is not in F."""
    memo = G.cache.setdefault("nonf_graph", {})
    if F in memo:
        return memo[F]
    pairs = []
    if not (F.hereditary and FM.is_member(G, F)):
        for bits, ps in S.joins_by_subgroup(G).items():
            if not FM.is_member_bits(G, bits, F):
                pairs.extend(ps)
    rows = _rows_from_pairs(G, pairs) if pairs else (0,) * G.order
    graph = ElementGraph(G.all_bits, rows, FULL_NONF, G.labels)
    memo[F] = graph
    return graph


def build_generating_graph(G: FiniteGroup) -> ElementGraph:
    """Full generating graph: g ~ h iff <g, h> = G."""
    pairs = S.joins_by_subgroup(G).get(G.all_bits, [])
    return ElementGraph(G.all_bits, _rows_from_pairs(G, pairs), GENERATING_FULL, G.labels)


def isolated_set(graph: ElementGraph) -> set[int]:
    return {v for v in graph.vertices() if graph.adjacency[v] == 0}


def isolated_bits(graph: ElementGraph) -> int:
    return B.from_indices(isolated_set(graph))


def prune(graph: ElementGraph) -> ElementGraph:
    keep = graph.vertex_bits & ~isolated_bits(graph)
    kind = PRUNED_NONF if graph.kind in (FULL_NONF, PRUNED_NONF) else GENERATING_PRUNED
    rows = tuple(r & keep if keep >> v & 1 else 0 for v, r in enumerate(graph.adjacency))
    return ElementGraph(keep, rows, kind, graph.labels)


def from_edges(n: int, edges: Iterable[tuple[int, int]], kind: str = PRUNED_NONF,
               vertices: Iterable[int] | None = None) -> ElementGraph:
    """Synthetic graph on ``range(n)`` (or the given vertices)."""
    rows = [0] * n
    for u, v in edges:
        if u != v:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    vbits = (1 << n) - 1 if vertices is None else B.from_indices(vertices)
    return ElementGraph(vbits, tuple(rows), kind, tuple(str(i) for i in range(n)))


# -------------------------------------------------------------- components


@dataclass(frozen=True)
class ComponentDecomposition:
    component_of: dict[int, int]
    count: int
    sizes: tuple[int, ...]


def components(graph: ElementGraph) -> ComponentDecomposition:
    """Breadth-first decomposition over bitset rows; ids in order of least vertex."""
    remaining = graph.vertex_bits
    comp_of: dict[int, int] = {}
    sizes = []
    cid = 0
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in B.iter_bits(frontier):
                nxt |= graph.adjacency[v]
            frontier = nxt & ~seen
            seen |= frontier
        for v in B.iter_bits(seen):
            comp_of[v] = cid
        sizes.append(seen.bit_count())
        remaining &= ~seen
        cid += 1
    return ComponentDecomposition(comp_of, cid, tuple(sizes))


def is_connected(graph: ElementGraph) -> bool:
    # the empty graph counts as connected
    return components(graph).count <= 1


# ---------------------------------------------------------------- planarity


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    certificate: str

    def __bool__(self):
        return self.planar


def to_networkx(graph: ElementGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices())
    g.add_edges_from(graph.edges())
    return g


def is_planar(graph: ElementGraph) -> PlanarityVerdict:
    """Exact planarity: Euler edge bound first, then the left-right test."""
    v = graph.vertex_count
    e = graph.edge_count
    if v >= 3 and e > 3 * v - 6:
        return PlanarityVerdict(False, "euler-bound")
    if v <= 4:
        return PlanarityVerdict(True, "at-most-4-vertices")
    planar, _ = nx.check_planarity(to_networkx(graph))
    return PlanarityVerdict(bool(planar), "left-right")


def contains_complete_bipartite(graph: ElementGraph, part_a, part_b) -> bool:
    a = B.from_indices(part_a)
    b = B.from_indices(part_b)
    if a & b:
        return False
    return all(graph.adjacency[x] & b == b for x in B.iter_bits(a))


# ------------------------------------------------------------------- export


def to_dot(graph: ElementGraph, include_isolated: bool = False, name: str = "G") -> str:
    verts = graph.vertices() if include_isolated else \
        [v for v in graph.vertices() if graph.adjacency[v]]
    lines = [f'graph "{name}" {{']
    for v in verts:
        label = graph.labels[v] if graph.labels else str(v)
        lines.append(f'  {v} [label="{_dot_escape(label)}"];')
    for u, w in graph.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_graphml(graph: ElementGraph, include_isolated: bool = False) -> str:
    verts = graph.vertices() if include_isolated else \
        [v for v in graph.vertices() if graph.adjacency[v]]
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
           '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
           '  <graph id="G" edgedefault="undirected">']
    for v in verts:
        label = graph.labels[v] if graph.labels else str(v)
        out.append(f'    <node id="n{v}"><data key="label">{escape(label)}</data></node>')
    for k, (u, w) in enumerate(graph.edges()):
        out.append(f'    <edge id="e{k}" source="n{u}" target="n{w}"/>')
    out += ["  </graph>", "</graphml>"]
    return "\n".join(out) + "\n"

"""Difference-constraint graphs over region vertices, and their solution.

Every positive-orientation edge u -> v of the region contributes the arc
(u, v, +1), bounding h(v) - h(u) <= 1.  Every boundary or constraint
edge also contributes the reverse arc (v, u, -1), which together with
the +1 arc pins h(v) - h(u) = 1 exactly, i.e. forbids overlapping that
edge.  Every x2 edge additionally contributes a 0-weight arc pair
between its two lateral vertices, forcing them to equal heights, which
is exactly the orientation-contrast condition on the two lozenges
beside the edge.

A height assignment satisfying all arcs and congruent to the geometric
height mod 3 is equivalent to a tiling; the system is solvable iff the
graph has no negative cycle.
"""

from dataclasses import dataclass

import numpy as np

from .grid import Edge, Vertex, edge_endpoints, height, lateral_vertices
from .instances import TilingInstance

POSITIVE = "positive"
BOUNDARY_NEG = "boundary-neg"
X1_NEG = "x1-neg"
X2_NEG = "x2-neg"
LATERAL = "lateral"
DISTANCE = "distance"

Arc = tuple[int, int, int, str]  # (from index, to index, weight, tag)


class ConstraintGraph:
    def __init__(self, vertices: list[Vertex], arcs: list[Arc]):
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.arcs = arcs
        self._out = None
        self._in = None

    @property
    def out_arcs(self) -> list[list[tuple[int, int]]]:
        if self._out is None:
            out = [[] for _ in self.vertices]
            for u, v, w, _ in self.arcs:
                out[u].append((v, w))
            self._out = out
        return self._out

    @property
    def in_arcs(self) -> list[list[tuple[int, int]]]:
        if self._in is None:
            inc = [[] for _ in self.vertices]
            for u, v, w, _ in self.arcs:
                inc[v].append((u, w))
            self._in = inc
        return self._in

    def arc_count(self, tag: str | None = None) -> int:
        if tag is None:
            return len(self.arcs)
        return sum(1 for a in self.arcs if a[3] == tag)


def build_dc(instance: TilingInstance) -> ConstraintGraph:
    """The difference-constraint graph of a bounded instance."""
    region = instance.region
    region._need_bounded()
    vertices = region.vertex_list
    index = region.vertex_index
    arcs: list[Arc] = []

    def reverse_arcs(edges: frozenset[Edge], tag: str):
        for e in sorted(edges):
            u, v = edge_endpoints(e)
            arcs.append((index[v], index[u], -1, tag))

    for e in region.edge_list:
        u, v = edge_endpoints(e)
        arcs.append((index[u], index[v], 1, POSITIVE))
    reverse_arcs(region.boundary, BOUNDARY_NEG)
    reverse_arcs(instance.x1, X1_NEG)
    reverse_arcs(instance.x2, X2_NEG)
    for e in sorted(instance.x2):
        w1, w2 = lateral_vertices(e)
        arcs.append((index[w1], index[w2], 0, LATERAL))
        arcs.append((index[w2], index[w1], 0, LATERAL))
    return ConstraintGraph(vertices, arcs)


@dataclass(frozen=True)
class HeightField:
    """Integer heights per vertex, anchored so h(source) == 0."""

    values: dict[Vertex, int]
    source: Vertex

    def __getitem__(self, v: Vertex) -> int:
        return self.values[v]

    def to_json_rows(self) -> list[list[int]]:
        return [[x, y, z, h] for (x, y, z), h in sorted(self.values.items())]


@dataclass(frozen=True)
class NegativeCycleCertificate:
    """A closed walk whose arc weights sum strictly below zero."""

    arcs: tuple[tuple[Vertex, Vertex, int, str], ...]
    total_weight: int

    @property
    def vertices(self) -> list[Vertex]:
        return [a[0] for a in self.arcs]

    def to_json_rows(self) -> list[list[int]]:
        return [list(v) for v in self.vertices]


@dataclass(frozen=True)
class HeightDefect:
    """Why a height assignment is not a valid solution."""

    kind: str  # "arc" | "congruence"
    u: Vertex
    v: Vertex | None = None
    weight: int | None = None


@dataclass(frozen=True)
class BellmanFordRun:
    heights: HeightField | None
    certificate: NegativeCycleCertificate | None
    relaxations: int

    @property
    def feasible(self) -> bool:
        return self.heights is not None


def bellman_ford(graph: ConstraintGraph, source: Vertex) -> BellmanFordRun:
    """Queue-based relaxation from a source vertex.

    Feasible systems yield the pointwise-maximal heights with
    h(source) = 0 (shortest-path distances).  A relaxation whose
    witnessing path reaches |V| arcs proves a negative cycle; the
    certificate is recovered from the predecessor graph and re-summed
    before being returned.
    """
    from collections import deque

    n = len(graph.vertices)
    src = graph.index[source]
    INF = float("inf")
    dist = [INF] * n
    hops = [0] * n
    pred: list[Arc | None] = [None] * n
    in_queue = [False] * n
    dist[src] = 0
    queue = deque([src])
    in_queue[src] = True
    out = graph.out_arcs
    relaxations = 0

    while queue:
        u = queue.popleft()
        in_queue[u] = False
        du = dist[u]
        for v, w in out[u]:
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                hops[v] = hops[u] + 1
                pred[v] = (u, v, w, "")
                relaxations += 1
                if hops[v] >= n:
                    cert = _extract_cycle(graph, pred, v)
                    return BellmanFordRun(None, cert, relaxations)
                if not in_queue[v]:
                    queue.append(v)
                    in_queue[v] = True

    unreachable = [graph.vertices[i] for i in range(n) if dist[i] == INF]
    if unreachable:
        raise ValueError(f"vertex {unreachable[0]} unreachable from source {source}")
    values = {graph.vertices[i]: int(dist[i]) for i in range(n)}
    return BellmanFordRun(HeightField(values, source), None, relaxations)


def bellman_ford_rounds(graph: ConstraintGraph, source: Vertex) -> BellmanFordRun:
    """Textbook Bellman-Ford: |V| synchronized relaxation sweeps, no early exit.

    Same contract as ``bellman_ford`` but always Theta(|V|*|E|): each sweep
    relaxes every arc against the previous sweep's distances, which |V|-1
    sweeps bound for any simple path; an improvement on the one extra sweep
    proves a negative cycle (the sweep map has reached no fixpoint, so
    distances diverge).  The certificate is then recovered by the queue-based
    variant, which is also the one to pick when speed matters.
    """
    n = len(graph.vertices)
    src = graph.index[source]
    if not graph.arcs:
        if n > 1:
            other = next(x for x in graph.vertices if x != source)
            raise ValueError(f"vertex {other} unreachable from source {source}")
        return BellmanFordRun(HeightField({source: 0}, source), None, 0)

    m = len(graph.arcs)
    u = np.fromiter((a[0] for a in graph.arcs), dtype=np.int64, count=m)
    v = np.fromiter((a[1] for a in graph.arcs), dtype=np.int64, count=m)
    w = np.fromiter((a[2] for a in graph.arcs), dtype=np.int64, count=m)
    order = np.argsort(v, kind="stable")  # group arcs by head for segment minima
    u, v, w = u[order], v[order], w[order]
    heads, starts = np.unique(v, return_index=True)

    INF = np.int64(1) << 40
    dist = np.full(n, INF, dtype=np.int64)
    dist[src] = 0
    relaxations = 0
    last_improved = False
    for _ in range(n):
        nd = np.minimum.reduceat(dist[u] + w, starts)
        # improvements via a not-yet-reached tail are noise, not relaxations
        improved = (nd < dist[heads]) & (nd < INF // 2)
        last_improved = bool(improved.any())
        if last_improved:
            relaxations += int(np.count_nonzero(improved))
            dist[heads] = np.where(improved, nd, dist[heads])
    if last_improved:
        run = bellman_ford(graph, source)
        assert not run.feasible
        return BellmanFordRun(None, run.certificate, relaxations)

    if bool((dist >= INF // 2).any()):
        i = int(np.argmax(dist >= INF // 2))
        raise ValueError(f"vertex {graph.vertices[i]} unreachable from source {source}")
    values = {graph.vertices[i]: int(dist[i]) for i in range(n)}
    return BellmanFordRun(HeightField(values, source), None, relaxations)


def _arc_tags(graph: ConstraintGraph) -> dict[tuple[int, int, int], str]:
    return {(u, v, w): tag for u, v, w, tag in graph.arcs}


def _collect_loop(graph, pred, start) -> NegativeCycleCertificate | None:
    # pred[x] is the arc that set x's label; following sources from `start`
    # must eventually revisit a vertex, and that loop is the candidate cycle
    tags = _arc_tags(graph)
    pos: dict[int, int] = {}
    arcs = []
    at = start
    while at not in pos:
        pos[at] = len(arcs)
        if pred[at] is None:
            return None
        arcs.append(pred[at])
        at = pred[at][0]
    loop = arcs[pos[at]:]
    loop.reverse()
    total = sum(a[2] for a in loop)
    if not loop or total >= 0:
        return None
    verts = graph.vertices
    rows = tuple((verts[u], verts[v], w, tags.get((u, v, w), "")) for u, v, w, _ in loop)
    return NegativeCycleCertificate(rows, total)


def _extract_cycle(graph: ConstraintGraph, pred, trigger: int) -> NegativeCycleCertificate:
    n = len(graph.vertices)
    at = trigger
    for _ in range(n):
        if pred[at] is None:
            break
        at = pred[at][0]
    cert = _collect_loop(graph, pred, at)
    if cert is None:
        cert = _cycle_by_rounds(graph)
    if cert is None or cert.total_weight >= 0:
        raise AssertionError("negative-cycle trigger fired but no cycle was recovered")
    return cert


def _cycle_by_rounds(graph: ConstraintGraph) -> NegativeCycleCertificate | None:
    """Classic all-vertices relaxation sweep; finds a cycle if one exists."""
    n = len(graph.vertices)
    dist = [0] * n
    pred: list[Arc | None] = [None] * n
    marked = None
    for _ in range(n):
        marked = None
        for u, v, w, tag in graph.arcs:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = (u, v, w, tag)
                marked = v
        if marked is None:
            return None
    at = marked
    for _ in range(n):
        at = pred[at][0]
    return _collect_loop(graph, pred, at)


def check_heights(graph: ConstraintGraph, field: HeightField) -> HeightDefect | None:
    """Verify every arc inequality plus the mod-3 height congruence."""
    idx = graph.index
    values = field.values
    for u, v, w, _ in graph.arcs:
        vu, vv = graph.vertices[u], graph.vertices[v]
        if values[vv] - values[vu] > w:
            return HeightDefect("arc", vu, vv, w)
    h0 = height(field.source)
    base = values[field.source]
    for v in graph.vertices:
        if (values[v] - base - (height(v) - h0)) % 3 != 0:
            return HeightDefect("congruence", v)
    return None

"""Tilability of the whole triangular grid under finite constraint sets.

Constraint edges see only finitely many vertices: the endpoints of X1
and X2 edges plus the lateral vertices of X2 edges.  Restricted to those,
any grid-wide height function satisfies h(v) - h(u) <= d+(u, v) for every
ordered pair, where d+ counts the steps of the shortest walk from u to v
along positive edge orientations; conversely an assignment satisfying the
dense distance bounds extends to the whole grid by

    h(v) = min over reduced u of (h(u) + d+(u, v)),

a pointwise minimum of congruent cones, hence again a valid surface that
agrees with the assignment on every reduced vertex.  Deciding tilability
is then one Bellman-Ford run on a graph with <= 2|X1| + 4|X2| vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .constraints import (
    DISTANCE,
    LATERAL,
    X1_NEG,
    X2_NEG,
    BellmanFordRun,
    ConstraintGraph,
    HeightField,
    bellman_ford,
)
from .grid import (
    Edge,
    Triangle,
    Vertex,
    edge_endpoints,
    edge_triangles,
    lateral_vertices,
    neighbors,
    triangle_edges,
    triangle_vertices,
)
from .instances import INFINITE, Region, Tiling, TilingInstance, triangle_region
from .solvers import SolveOutcome, SolveStats

ORIGIN: Vertex = (0, 0, 0)


def directed_distance(u: Vertex, v: Vertex) -> int:
    """Steps of the shortest walk from u to v along positive orientations.

    Closed form: with deltas d = v - u componentwise, the answer is
    sum(d) - 3*min(d) — lift the walk to take max(d) - d_i steps along
    the two axes other than i.  Invariant under representative shifts.
    """
    d = (v[0] - u[0], v[1] - u[1], v[2] - u[2])
    return d[0] + d[1] + d[2] - 3 * min(d)


def build_reduced_graph(x1=(), x2=()) -> ConstraintGraph:
    """The finite constraint graph whose feasibility decides the grid.

    Reverse -1 arcs per constraint edge, 0-weight lateral pairs per x2
    edge, and a dense distance arc for every ordered vertex pair.  With
    no constraints at all, the origin stands in as the single vertex.
    """
    x1, x2 = frozenset(x1), frozenset(x2)
    verts: set[Vertex] = set()
    for e in x1 | x2:
        verts.update(edge_endpoints(e))
    for e in x2:
        verts.update(lateral_vertices(e))
    if not verts:
        verts.add(ORIGIN)
    vertices = sorted(verts)
    index = {v: i for i, v in enumerate(vertices)}
    arcs = []
    for e in sorted(x1):
        u, v = edge_endpoints(e)
        arcs.append((index[v], index[u], -1, X1_NEG))
    for e in sorted(x2):
        u, v = edge_endpoints(e)
        arcs.append((index[v], index[u], -1, X2_NEG))
        w1, w2 = lateral_vertices(e)
        arcs.append((index[w1], index[w2], 0, LATERAL))
        arcs.append((index[w2], index[w1], 0, LATERAL))
    for a in vertices:
        for b in vertices:
            if a != b:
                arcs.append((index[a], index[b], directed_distance(a, b), DISTANCE))
    return ConstraintGraph(vertices, arcs)


def decide_infinite(x1=(), x2=()) -> BellmanFordRun:
    """Feasibility of tiling the whole grid under the given constraints.

    The distance arcs make the reduced graph strongly connected, so a
    single run from its smallest vertex decides it; feasible runs carry
    heights on the reduced vertices, infeasible ones a negative cycle.
    """
    graph = build_reduced_graph(x1, x2)
    return bellman_ford(graph, graph.vertices[0])


def window_vertices(center: Vertex = ORIGIN, radius: int = 5) -> set[Vertex]:
    """All vertices within graph distance radius of the center."""
    seen = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for w, _ in neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def window_triangles(center: Vertex = ORIGIN, radius: int = 5) -> list[Triangle]:
    """All triangles whose vertices lie within radius of the center."""
    ball = window_vertices(center, radius)
    return sorted(
        (v, side)
        for v in ball
        for side in ("L", "R")
        if all(tv in ball for tv in triangle_vertices((v, side)))
    )


@dataclass(frozen=True)
class WindowTiling:
    """A finite excerpt of a grid tiling.

    The region is the requested window plus the partner triangles of any
    lozenge straddling its boundary, so the tiling covers it exactly.
    """

    region: Region
    tiling: Tiling
    heights: HeightField


def window_tiling(x1=(), x2=(), window=None) -> WindowTiling:
    """Extract the minimal-surface tiling on a window of the grid.

    Raises ValueError when the constraints admit no tiling at all.
    """
    if window is None:
        window = window_triangles()
    run = decide_infinite(x1, x2)
    if not run.feasible:
        raise ValueError("the constraints admit no tiling of the grid")
    anchors = sorted(run.heights.values.items())

    def extend(v: Vertex) -> int:
        return min(h + directed_distance(u, v) for u, h in anchors)

    region = triangle_region(window)
    h = {v: extend(v) for v in region.vertex_list}
    lozenges: set[Edge] = set()
    extra: set[Triangle] = set()
    for t in region.triangles:
        overlapped = [
            e
            for e in triangle_edges(t)
            if h[edge_endpoints(e)[1]] - h[edge_endpoints(e)[0]] == -2
        ]
        assert len(overlapped) == 1  # a valid surface overlaps one edge per triangle
        e = overlapped[0]
        lozenges.add(e)
        for partner in edge_triangles(e):
            if not region.contains_triangle(partner):
                extra.add(partner)
    if extra:
        region = triangle_region(set(region.triangles) | extra)
        h = {v: extend(v) for v in region.vertex_list}
    source = region.vertex_list[0]
    base = h[source]
    field = HeightField({v: hv - base for v, hv in h.items()}, source)
    return WindowTiling(region, Tiling(frozenset(lozenges)), field)


def solve_infinite(
    instance: TilingInstance,
    center: Vertex = ORIGIN,
    radius: int | None = None,
) -> SolveOutcome:
    """Adapter giving the infinite decision the common outcome shape.

    Without a radius the outcome carries heights on the reduced vertices
    only; with one it carries the tiling and heights of that window.
    """
    if instance.region.kind != INFINITE:
        raise ValueError("the infinite solver takes instances on the infinite grid")
    t0 = time.perf_counter()
    graph = build_reduced_graph(instance.x1, instance.x2)
    run = bellman_ford(graph, graph.vertices[0])
    tiling = heights = None
    if run.feasible:
        heights = run.heights
        if radius is not None:
            wt = window_tiling(instance.x1, instance.x2, window_triangles(center, radius))
            tiling, heights = wt.tiling, wt.heights
    stats = SolveStats(
        vertices=len(graph.vertices),
        arcs=len(graph.arcs),
        relaxations=run.relaxations,
        elapsed=(time.perf_counter() - t0) * 1000.0,
    )
    status = "tiled" if run.feasible else "infeasible"
    return SolveOutcome(status, tiling, heights, run.certificate, stats)

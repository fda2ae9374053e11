"""Tiling solvers built on the difference-constraint formulation.

Three engines are provided:

* ``solve_bf`` runs Bellman-Ford on the full constraint graph.  Shortest
  distances from a fixed source vertex are the pointwise-maximal height
  function; a negative cycle is an infeasibility certificate.
* ``solve_advancing`` starts from the minimal surface of the bare region and
  raises vertices (always in steps of 3) until every constraint arc holds.
  It detects infeasibility when a vertex is pushed above the maximal surface.
* ``solve_thurston`` handles unconstrained regions only: it anchors heights
  along the boundary walk and derives the minimal/maximal surfaces by
  shortest-path sweeps over the drawn-edge orientation.

A height function h determines the tiling: every region edge u -> v gets the
increment h(v) - h(u), which is +1 (edge drawn) or -2 (edge overlapped by a
lozenge); the overlapped edges are the lozenges.
"""

from __future__ import annotations

import heapq
import logging
import random
import time
from collections import deque
from dataclasses import dataclass

from .constraints import (
    HeightField,
    NegativeCycleCertificate,
    bellman_ford,
    bellman_ford_rounds,
    build_dc,
)
from .grid import (
    AXES,
    X,
    Y,
    Z,
    Edge,
    Vertex,
    edge_endpoints,
    edge_triangles,
    height,
    make_edge,
    shift,
)
from .instances import (
    Region,
    Tiling,
    TilingInstance,
    boundary_cycle,
    edge_to_json,
    hexagon,
    make_instance,
)

log = logging.getLogger(__name__)

AXIS_COLOR = {X: "blue", Y: "red", Z: "yellow"}


class HeightError(ValueError):
    """A height assignment whose increments do not describe a tiling."""


def extract_tiling(region: Region, heights: HeightField) -> Tiling:
    """The lozenges of a feasible height function: its increment -2 edges."""
    h = heights.values
    lozenges = []
    for e in region.edge_list:
        u, v = edge_endpoints(e)
        d = h[v] - h[u]
        if d == -2:
            lozenges.append(e)
        elif d != 1:
            raise HeightError(f"edge {e} has increment {d}, expected +1 or -2")
    return Tiling(frozenset(lozenges))


@dataclass(frozen=True)
class SolveStats:
    vertices: int
    arcs: int
    relaxations: int
    elapsed: float  # milliseconds


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "tiled" | "infeasible"
    tiling: Tiling | None
    heights: HeightField | None
    certificate: NegativeCycleCertificate | None
    stats: SolveStats

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.tiling is not None:
            out["lozenges"] = [edge_to_json(e) for e in sorted(self.tiling.lozenges)]
        if self.heights is not None:
            out["heights"] = self.heights.to_json_rows()
        if self.certificate is not None:
            out["cycle"] = self.certificate.to_json_rows()
        out["stats"] = {
            "vertices": self.stats.vertices,
            "arcs": self.stats.arcs,
            "relaxations": self.stats.relaxations,
            "elapsed": self.stats.elapsed,
        }
        return out


@dataclass(frozen=True)
class HeightEnvelope:
    """Pointwise-minimal and -maximal surfaces over a tilable region."""

    hmin: dict[Vertex, int]
    hmax: dict[Vertex, int]


def _cone(region: Region, init: dict[Vertex, int], reverse: bool) -> dict[Vertex, int]:
    # dist(v) = min over seeds b of init[b] + (positive-path length b -> v),
    # walking edges against their orientation when reverse is set.
    adj: dict[Vertex, list[Vertex]] = {v: [] for v in region.vertex_list}
    for e in region.edge_list:
        u, v = edge_endpoints(e)
        if reverse:
            adj[v].append(u)
        else:
            adj[u].append(v)
    dist: dict[Vertex, int] = {}
    heap = [(d, v) for v, d in sorted(init.items())]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if v in dist:
            continue
        dist[v] = d
        for w in adj[v]:
            if w not in dist:
                heapq.heappush(heap, (d + 1, w))
    if len(dist) != len(region.vertex_list):
        raise ValueError("region is not edge-connected")
    return dist


def solve_thurston(region: Region) -> HeightEnvelope | None:
    """Height envelope of an unconstrained region, or None when untilable.

    Boundary heights are forced: walking the boundary, a drawn edge steps
    +1 along its orientation.  The walk is anchored at the geometric height
    x+y+z of its first vertex, so the envelope is unique.
    """
    walk = boundary_cycle(region)
    hb: dict[Vertex, int] = {}
    cur = height(walk[0].frm)
    for step in walk:
        hb[step.frm] = cur
        cur += step.sign
    if cur != hb[walk[0].frm]:
        return None  # boundary walk does not close up
    hmax = _cone(region, hb, reverse=False)
    up = _cone(region, {b: -h for b, h in hb.items()}, reverse=True)
    hmin = {v: -d for v, d in up.items()}
    for b, h in hb.items():
        if hmax[b] != h or hmin[b] != h:
            return None  # a positive path undercuts the boundary heights
    if any(hmin[v] > hmax[v] for v in region.vertex_list):
        return None
    return HeightEnvelope(hmin, hmax)


def _anchored(values: dict[Vertex, int], source: Vertex) -> HeightField:
    base = values[source]
    return HeightField({v: h - base for v, h in values.items()}, source)


def solve_bf(instance: TilingInstance) -> SolveOutcome:
    """Decide an instance by Bellman-Ford over its constraint graph.

    Uses the round-based variant; the queue-based one is kept for
    certificate extraction inside ``solve_advancing``.
    """
    t0 = time.perf_counter()
    graph = build_dc(instance)
    run = bellman_ford_rounds(graph, instance.region.vertex_list[0])
    stats = SolveStats(
        vertices=len(graph.vertices),
        arcs=len(graph.arcs),
        relaxations=run.relaxations,
        elapsed=(time.perf_counter() - t0) * 1000.0,
    )
    if not run.feasible:
        return SolveOutcome("infeasible", None, None, run.certificate, stats)
    tiling = extract_tiling(instance.region, run.heights)
    return SolveOutcome("tiled", tiling, run.heights, None, stats)


def solve_advancing(instance: TilingInstance) -> SolveOutcome:
    """Decide an instance by raising the minimal surface to a fixpoint.

    Every constraint arc a -> u demands h(a) >= h(u) - w.  Starting from the
    minimal surface, violated demands only ever push heights up, each push a
    multiple of 3, so the first fixpoint is the least solution; pushing any
    vertex above the maximal surface proves there is none.
    """
    t0 = time.perf_counter()
    region = instance.region
    graph = build_dc(instance)
    verts = graph.vertices
    source = verts[0]

    def infeasible() -> SolveOutcome:
        run = bellman_ford(graph, source)
        assert not run.feasible
        stats = SolveStats(
            vertices=len(verts),
            arcs=len(graph.arcs),
            relaxations=raises,
            elapsed=(time.perf_counter() - t0) * 1000.0,
        )
        return SolveOutcome("infeasible", None, None, run.certificate, stats)

    raises = 0
    env = solve_thurston(region)
    if env is None:
        return infeasible()
    h = [env.hmin[v] for v in verts]
    hmax = [env.hmax[v] for v in verts]
    in_arcs = graph.in_arcs
    queue = deque(range(len(verts)))
    in_queue = [True] * len(verts)
    while queue:
        u = queue.popleft()
        in_queue[u] = False
        hu = h[u]
        for a, w in in_arcs[u]:
            req = hu - w
            if h[a] < req:
                if req > hmax[a]:
                    return infeasible()
                h[a] = req
                raises += 1
                if not in_queue[a]:
                    in_queue[a] = True
                    queue.append(a)
    field = _anchored({v: h[i] for i, v in enumerate(verts)}, source)
    stats = SolveStats(
        vertices=len(verts),
        arcs=len(graph.arcs),
        relaxations=raises,
        elapsed=(time.perf_counter() - t0) * 1000.0,
    )
    return SolveOutcome("tiled", extract_tiling(region, field), field, None, stats)


def solve_thurston_outcome(instance: TilingInstance) -> SolveOutcome:
    """Adapter giving the boundary-walk solver the common outcome shape."""
    if instance.x1 or instance.x2:
        raise ValueError("the boundary-walk solver takes unconstrained regions only")
    t0 = time.perf_counter()
    region = instance.region
    env = solve_thurston(region)
    if env is None:
        return solve_bf(instance)  # reuse its negative-cycle certificate
    field = _anchored(env.hmin, region.vertex_list[0])
    stats = SolveStats(
        vertices=len(region.vertex_list),
        arcs=len(region.edge_list),
        relaxations=0,
        elapsed=(time.perf_counter() - t0) * 1000.0,
    )
    return SolveOutcome("tiled", extract_tiling(region, field), field, None, stats)


def random_tiling(region: Region, flips: int, seed: int = 0) -> HeightField:
    """A tiling sampled by raising random local minima of the minimal surface.

    A vertex is liftable when all three of its incoming edges are interior
    with increment -2; raising it by 3 flips the surrounding three lozenges.
    Stops early once no vertex is liftable.
    """
    env = solve_thurston(region)
    if env is None:
        raise ValueError("region is untilable")
    rng = random.Random(seed)
    h = dict(env.hmin)

    def liftable(v: Vertex) -> bool:
        for axis in AXES:
            e = make_edge(v, axis, -1)
            if not region.interior_edge(e):
                return False
            u, _ = edge_endpoints(e)
            if h[v] - h[u] != -2:
                return False
        return True

    pool = [v for v in region.vertex_list if liftable(v)]
    pos = {v: i for i, v in enumerate(pool)}
    for _ in range(flips):
        if not pool:
            break
        v = pool[rng.randrange(len(pool))]
        h[v] += 3
        # the six edges at v changed increment; recheck the vertices they enter
        for w in [v] + [shift(v, axis) for axis in AXES]:
            now = w in h and liftable(w)
            if now and w not in pos:
                pos[w] = len(pool)
                pool.append(w)
            elif not now and w in pos:
                i = pos.pop(w)
                last = pool.pop()
                if last != w:
                    pool[i] = last
                    pos[last] = i
    return _anchored(h, region.vertex_list[0])


def salient_drawn_edges(region: Region, tiling: Tiling) -> list[Edge]:
    """Interior drawn edges whose two flanking lozenges differ in axis."""
    axis_of = {}
    for e in tiling.lozenges:
        for t in edge_triangles(e):
            axis_of[t] = e[1]
    out = []
    for e in region.edge_list:
        if e in tiling.lozenges or not region.interior_edge(e):
            continue
        t1, t2 = edge_triangles(e)
        if axis_of[t1] != axis_of[t2]:
            out.append(e)
    return out


FLIP_CAP = 100_000


def generate_instance(n: int, k: int, seed: int = 0) -> TilingInstance:
    """A feasible instance: k salient-edge constraints read off a random
    tiling of the side-n hexagon."""
    rng = random.Random(seed)
    region = hexagon(n)
    flips = min(rng.randrange(n**3 + 1), FLIP_CAP)
    field = random_tiling(region, flips, seed=rng.randrange(1 << 30))
    tiling = extract_tiling(region, field)
    candidates = salient_drawn_edges(region, tiling)
    if len(candidates) < k:
        log.warning(
            "only %d salient drawn edges for k=%d; keeping them all",
            len(candidates),
            k,
        )
        x2 = candidates
    else:
        x2 = rng.sample(candidates, k)
    return make_instance(region, x2=x2)

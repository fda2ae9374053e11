"""Regions of the triangular grid, puzzle instances, and their JSON forms.

Instance JSON:

    {"region": {"type": "hexagon", "n": 2}
             | {"type": "triangles", "triangles": [[x, y, z, "L"], ...]}
             | {"type": "infinite"},
     "x1": [[x, y, z, "Z"], ...],
     "x2": [[x, y, z, "Z"], ...]}

x1 edges must not be overlapped by a lozenge; x2 edges additionally
require the two lozenges beside them to differ in orientation.  Tiling
JSON is {"lozenges": [[x, y, z, axis], ...]} listing overlapped edges.
Serialization is canonical: edges sorted, bases canonical, two-space
indent, so serialize(parse(text)) is a stable normal form.
"""

import json
import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

from .grid import (
    AXES,
    Edge,
    Triangle,
    Vertex,
    axis_from_name,
    axis_name,
    canon,
    edge_endpoints,
    edge_triangles,
    embed,
    shift,
    triangle_edges,
    triangle_vertices,
)

log = logging.getLogger("calisson")

HEXAGON, TRIANGLES, INFINITE = "hexagon", "triangles", "infinite"


class InstanceFormatError(ValueError):
    """Raised when instance or tiling JSON cannot be interpreted."""

    def __init__(self, message: str, code: str = "invalid-instance"):
        super().__init__(message)
        self.code = code


class UnboundedRegionError(ValueError):
    """Raised when an operation needs a bounded region."""


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    edge: Edge | None = None

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.edge is not None:
            out["edge"] = edge_to_json(self.edge)
        return out


class Region:
    """A set of unit triangles (or the whole infinite grid)."""

    def __init__(self, kind: str, n: int | None = None, triangles=None):
        self.kind = kind
        self.n = n
        if kind == TRIANGLES:
            self._triangles = frozenset(triangles)
        elif kind == HEXAGON:
            if n is None or n < 1:
                raise ValueError("hexagon size must be a positive integer")
            self._triangles = None
        elif kind == INFINITE:
            self._triangles = None
        else:
            raise ValueError(f"unknown region type {kind!r}")

    @property
    def bounded(self) -> bool:
        return self.kind != INFINITE

    def _need_bounded(self):
        if not self.bounded:
            raise UnboundedRegionError("operation requires a bounded region")

    @cached_property
    def triangles(self) -> frozenset[Triangle]:
        self._need_bounded()
        if self.kind == TRIANGLES:
            return self._triangles
        n = self.n
        verts = self.vertices
        out = []
        for v in verts:
            for side in ("L", "R"):
                t = (v, side)
                if all(w in verts for w in triangle_vertices(t)):
                    out.append(t)
        return frozenset(out)

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        self._need_bounded()
        if self.kind == HEXAGON:
            n = self.n
            return frozenset(
                (x, y, z)
                for x in range(n + 1)
                for y in range(n + 1)
                for z in range(n + 1)
                if x == 0 or y == 0 or z == 0
            )
        return frozenset(v for t in self._triangles for v in triangle_vertices(t))

    @cached_property
    def edge_counts(self) -> dict[Edge, int]:
        """How many region triangles contain each edge (1 or 2)."""
        self._need_bounded()
        counts: Counter = Counter()
        for t in self.triangles:
            counts.update(triangle_edges(t))
        return dict(counts)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(self.edge_counts)

    @cached_property
    def boundary(self) -> frozenset[Edge]:
        return frozenset(e for e, c in self.edge_counts.items() if c == 1)

    @cached_property
    def vertex_list(self) -> list[Vertex]:
        return sorted(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertex_list)}

    @cached_property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def contains_vertex(self, v: Vertex) -> bool:
        if self.kind == INFINITE:
            return True
        if self.kind == HEXAGON:
            return max(v) <= self.n and min(v) == 0
        return v in self.vertices

    def contains_edge(self, e: Edge) -> bool:
        if self.kind == INFINITE:
            return True
        return e in self.edge_counts

    def contains_triangle(self, t: Triangle) -> bool:
        if self.kind == INFINITE:
            return True
        return t in self.triangles

    def interior_edge(self, e: Edge) -> bool:
        """True when both triangles flanking e lie in the region."""
        if self.kind == INFINITE:
            return True
        return self.edge_counts.get(e) == 2

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == HEXAGON:
            return self.n == other.n
        if self.kind == TRIANGLES:
            return self._triangles == other._triangles
        return True

    def __hash__(self):
        if self.kind == TRIANGLES:
            return hash((self.kind, self._triangles))
        return hash((self.kind, self.n))

    def __repr__(self):
        if self.kind == HEXAGON:
            return f"Region(hexagon, n={self.n})"
        if self.kind == TRIANGLES:
            return f"Region(triangles, {len(self._triangles)} faces)"
        return "Region(infinite)"


def hexagon(n: int) -> Region:
    return Region(HEXAGON, n=n)


def triangle_region(triangles) -> Region:
    return Region(TRIANGLES, triangles=triangles)


def infinite_region() -> Region:
    return Region(INFINITE)


@dataclass(frozen=True)
class TilingInstance:
    region: Region
    x1: frozenset[Edge]
    x2: frozenset[Edge]


def make_instance(region: Region, x1=(), x2=()) -> TilingInstance:
    """Normalized instance: boundary x1 edges are dropped with a warning."""
    x1 = frozenset(x1)
    x2 = frozenset(x2)
    if region.bounded:
        on_boundary = {e for e in x1 if e in region.boundary}
        if on_boundary:
            log.warning(
                "dropping %d x1 edge(s) on the region boundary (already unoverlappable)",
                len(on_boundary),
            )
            x1 -= on_boundary
    return TilingInstance(region, x1, x2)


@dataclass(frozen=True)
class Tiling:
    """A set of overlapped edges; each one stands for the lozenge that covers
    the edge's two flanking triangles."""

    lozenges: frozenset[Edge]

    def to_dict(self) -> dict:
        return {"lozenges": [edge_to_json(e) for e in sorted(self.lozenges)]}


# --- JSON helpers ---


def edge_to_json(e: Edge) -> list:
    (x, y, z), axis = e
    return [x, y, z, axis_name(axis)]


def edge_from_json(item) -> Edge:
    if not (isinstance(item, list) and len(item) == 4):
        raise InstanceFormatError(f"edge must be [x, y, z, axis], got {item!r}")
    x, y, z, name = item
    if not all(isinstance(c, int) for c in (x, y, z)) or not isinstance(name, str):
        raise InstanceFormatError(f"edge must be [x, y, z, axis], got {item!r}")
    try:
        axis = axis_from_name(name)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None
    return (canon(x, y, z), axis)


def triangle_to_json(t: Triangle) -> list:
    (x, y, z), side = t
    return [x, y, z, side]


def triangle_from_json(item) -> Triangle:
    if not (isinstance(item, list) and len(item) == 4):
        raise InstanceFormatError(f"triangle must be [x, y, z, side], got {item!r}")
    x, y, z, side = item
    if not all(isinstance(c, int) for c in (x, y, z)) or side not in ("L", "R"):
        raise InstanceFormatError(f"triangle must be [x, y, z, 'L'|'R'], got {item!r}")
    return (canon(x, y, z), side)


def _edges_from_json(items, label) -> list[Edge]:
    if items is None:
        return []
    if not isinstance(items, list):
        raise InstanceFormatError(f"{label} must be a list of edges")
    return [edge_from_json(it) for it in items]


def region_from_json(obj) -> Region:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InstanceFormatError("region must be an object with a 'type' field")
    kind = obj["type"]
    if kind == HEXAGON:
        n = obj.get("n")
        if not isinstance(n, int) or n < 1:
            raise InstanceFormatError("hexagon region needs a positive integer 'n'")
        return hexagon(n)
    if kind == TRIANGLES:
        items = obj.get("triangles")
        if not isinstance(items, list) or not items:
            raise InstanceFormatError("triangle region needs a nonempty 'triangles' list")
        return triangle_region(triangle_from_json(it) for it in items)
    if kind == INFINITE:
        return infinite_region()
    raise InstanceFormatError(f"unknown region type {kind!r}")


def region_to_json(region: Region) -> dict:
    if region.kind == HEXAGON:
        return {"type": HEXAGON, "n": region.n}
    if region.kind == TRIANGLES:
        return {"type": TRIANGLES, "triangles": [triangle_to_json(t) for t in sorted(region.triangles)]}
    return {"type": INFINITE}


def instance_from_data(obj) -> TilingInstance:
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance must be a JSON object")
    if "region" not in obj:
        raise InstanceFormatError("instance is missing 'region'", code="missing-region")
    region = region_from_json(obj["region"])
    x1 = _edges_from_json(obj.get("x1"), "x1")
    x2 = _edges_from_json(obj.get("x2"), "x2")
    return make_instance(region, x1, x2)


def parse_instance(text: str) -> TilingInstance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from None
    return instance_from_data(obj)


def serialize_instance(instance: TilingInstance) -> str:
    data = {
        "region": region_to_json(instance.region),
        "x1": [edge_to_json(e) for e in sorted(instance.x1)],
        "x2": [edge_to_json(e) for e in sorted(instance.x2)],
    }
    return json.dumps(data, indent=2) + "\n"


def parse_tiling(text: str) -> Tiling:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "lozenges" not in obj:
        raise InstanceFormatError("tiling must be an object with a 'lozenges' list")
    return Tiling(frozenset(edge_from_json(it) for it in obj["lozenges"]))


def serialize_tiling(tiling: Tiling) -> str:
    return json.dumps(tiling.to_dict(), indent=2) + "\n"


# --- validation ---


def validate(instance: TilingInstance) -> list[Violation]:
    """Semantic checks; an empty list means the instance is well-formed."""
    region = instance.region
    out: list[Violation] = []
    if region.kind == TRIANGLES:
        out.extend(_validate_triangle_region(region))
        if out:
            return out

    dup = instance.x1 & instance.x2
    for e in sorted(dup):
        out.append(Violation("duplicate-edge", "edge appears in both x1 and x2", e))

    if region.bounded:
        for e in sorted(instance.x1 | instance.x2):
            if not region.contains_edge(e):
                out.append(Violation("edge-not-in-region", "constraint edge outside the region", e))
        for e in sorted(instance.x2):
            if region.contains_edge(e) and not region.interior_edge(e):
                out.append(
                    Violation(
                        "x2-on-boundary",
                        "x2 edge needs both flanking triangles inside the region",
                        e,
                    )
                )
    return out


def _validate_triangle_region(region: Region) -> list[Violation]:
    tris = region.triangles
    if not tris:
        return [Violation("empty-region", "region has no triangles")]

    # edge-connectivity over shared edges
    by_edge: dict[Edge, list[Triangle]] = {}
    for t in tris:
        for e in triangle_edges(t):
            by_edge.setdefault(e, []).append(t)
    start = next(iter(tris))
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for e in triangle_edges(t):
            for other in by_edge[e]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    if len(seen) != len(tris):
        return [Violation("not-edge-connected", "triangles do not form an edge-connected set")]

    v = len(region.vertices)
    e = len(region.edges)
    f = len(tris)
    if v - e + f != 1:
        return [Violation("not-simply-connected", f"V - E + F = {v - e + f}, expected 1 for a disk")]

    boundary_at: Counter = Counter()
    for edge in region.boundary:
        for p in edge_endpoints(edge):
            boundary_at[p] += 1
    bad = sorted(p for p, c in boundary_at.items() if c > 2)
    if bad:
        return [
            Violation(
                "self-touching-boundary",
                f"boundary passes through vertex {bad[0]} more than once",
            )
        ]
    return []


# --- boundary walk ---


@dataclass(frozen=True)
class BoundaryStep:
    frm: Vertex
    to: Vertex
    edge: Edge
    sign: int  # +1 when the step follows the edge's positive orientation


def boundary_cycle(region: Region) -> list[BoundaryStep]:
    """The region's boundary as one closed counterclockwise edge walk."""
    region._need_bounded()
    incident: dict[Vertex, list[Edge]] = {}
    for e in region.boundary:
        for p in edge_endpoints(e):
            incident.setdefault(p, []).append(e)

    start = min(incident)
    walk: list[BoundaryStep] = []
    at = start
    prev_edge = None
    while True:
        e = min(e for e in incident[at] if e != prev_edge)
        u, v = edge_endpoints(e)
        to = v if u == at else u
        sign = 1 if u == at else -1
        walk.append(BoundaryStep(at, to, e, sign))
        prev_edge = e
        at = to
        if at == start:
            break

    area = 0.0
    points = [embed(s.frm) for s in walk]
    for i, (px, py) in enumerate(points):
        qx, qy = points[(i + 1) % len(points)]
        area += px * qy - qx * py
    if area < 0:
        walk = [BoundaryStep(s.to, s.frm, s.edge, -s.sign) for s in reversed(walk)]
    return walk

"""Triangular-grid geometry in homogeneous integer coordinates.

A grid vertex is an integer triple (x, y, z) understood modulo the
all-ones vector: (x, y, z) and (x+k, y+k, z+k) name the same point.  The
canonical representative is the one with min(x, y, z) == 0.  The sum
x + y + z of the canonical representative is the vertex's geometric
height; moving one unit along any positive axis raises it by 1 (mod 3 it
is representative-independent).

Projected to the page, the positive unit steps +X, +Y, +Z point at
8, 4 and 12 o'clock respectively (so -X, -Y, -Z point at 2, 10 and 6).

Edges are stored in positive orientation as (base, axis), the unit edge
from base to base + e_axis, with base canonical.  Every unit triangle
has exactly one vertical edge; the triangle is keyed by that edge's
lower endpoint plus a side letter: L(v) lies left of v -> v + e_z and
has third vertex v - e_y, R(v) lies right of it with third vertex
v - e_x.  The positive orientations of any triangle's three edges form
a directed 3-cycle.
"""

X, Y, Z = 0, 1, 2
AXES = (X, Y, Z)
AXIS_NAMES = "XYZ"
SIDES = ("L", "R")

Vertex = tuple[int, int, int]
Direction = tuple[int, int]          # (axis, sign)
Edge = tuple[Vertex, int]            # (canonical base, axis)
Triangle = tuple[Vertex, str]        # (canonical base, "L" | "R")

_SQRT3_2 = 3 ** 0.5 / 2


def canon(x: int, y: int, z: int) -> Vertex:
    """Canonical representative: subtract the minimum coordinate."""
    m = min(x, y, z)
    return (x - m, y - m, z - m)


def shift(v: Vertex, axis: int, sign: int = 1) -> Vertex:
    """Canonical neighbor of v one unit along +/-axis."""
    x, y, z = v
    if axis == X:
        x += sign
    elif axis == Y:
        y += sign
    else:
        z += sign
    m = x if x < y else y
    if z < m:
        m = z
    return (x - m, y - m, z - m)


def neighbors(v: Vertex) -> list[tuple[Vertex, Direction]]:
    """The six adjacent vertices, each paired with the step that reaches it."""
    return [(shift(v, a, s), (a, s)) for a in AXES for s in (1, -1)]


def height(v: Vertex) -> int:
    """Geometric height of the canonical representative."""
    x, y, z = v
    return x + y + z - 3 * min(x, y, z)


def make_edge(v: Vertex, axis: int, sign: int = 1) -> Edge:
    """Canonical edge through v along +/-axis, re-based to positive orientation."""
    if sign > 0:
        return (canon(*v), axis)
    return (shift(v, axis, -1), axis)


def edge_endpoints(e: Edge) -> tuple[Vertex, Vertex]:
    base, axis = e
    return (base, shift(base, axis))


def lateral_vertices(e: Edge) -> tuple[Vertex, Vertex]:
    """The two common neighbors of an edge's endpoints, sorted.

    For edge (b, a) they are b + e_a + e_p and b + e_a + e_q where p, q
    are the other two axes; each is the apex of one of the two triangles
    flanking the edge.
    """
    (x, y, z), axis = e
    if axis == X:
        pair = (canon(x + 1, y + 1, z), canon(x + 1, y, z + 1))
    elif axis == Y:
        pair = (canon(x + 1, y + 1, z), canon(x, y + 1, z + 1))
    else:
        pair = (canon(x + 1, y, z + 1), canon(x, y + 1, z + 1))
    return (pair[0], pair[1]) if pair[0] <= pair[1] else (pair[1], pair[0])


def triangle_vertices(t: Triangle) -> tuple[Vertex, Vertex, Vertex]:
    base, side = t
    if side == "L":
        return (base, shift(base, Z), shift(base, Y, -1))
    return (base, shift(base, Z), shift(base, X, -1))


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    """The three edges of a triangle, each in canonical positive orientation."""
    base, side = t
    if side == "L":
        return ((base, Z), (shift(base, Z), X), (shift(base, Y, -1), Y))
    return ((base, Z), (shift(base, X, -1), X), (shift(base, Z), Y))


def edge_triangles(e: Edge) -> tuple[Triangle, Triangle]:
    """The two unit triangles of the full grid that contain an edge."""
    base, axis = e
    if axis == Z:
        return ((base, "L"), (base, "R"))
    if axis == X:
        return ((shift(base, Z, -1), "L"), (shift(base, X), "R"))
    return ((shift(base, Y), "L"), (shift(base, Z, -1), "R"))


def embed(v: Vertex) -> tuple[float, float]:
    """Planar position (math orientation, +Z straight up)."""
    x, y, z = v
    return (_SQRT3_2 * (y - x), z - 0.5 * (x + y))


def hex_distance(u: Vertex, v: Vertex) -> int:
    """Undirected graph distance between two vertices."""
    a = v[0] - u[0]
    b = v[1] - u[1]
    c = v[2] - u[2]
    k = sorted((a, b, c))[1]
    return abs(a - k) + abs(b - k) + abs(c - k)


def axis_name(axis: int) -> str:
    return AXIS_NAMES[axis]


def axis_from_name(name: str) -> int:
    idx = AXIS_NAMES.find(name)
    if idx < 0:
        raise ValueError(f"unknown axis {name!r}, expected one of X, Y, Z")
    return idx

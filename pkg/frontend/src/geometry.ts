// Triangular-grid geometry mirrored from the solver service.
//
// Vertices are homogeneous integer triples: (x, y, z) and (x+k, y+k, z+k)
// name the same grid point, and the canonical form subtracts the minimum
// coordinate so at least one entry is zero.  Edges are (base vertex, axis)
// with the partner vertex one positive step along the axis.  All functions
// here must stay coordinate-for-coordinate compatible with the service,
// because hit testing runs against the SVG it renders.

export type Vertex = readonly [number, number, number];
export type Axis = 0 | 1 | 2;
export type Edge = readonly [Vertex, Axis];

export const AXES: readonly Axis[] = [0, 1, 2];
export const AXIS_NAMES = ["X", "Y", "Z"] as const;
export type AxisName = (typeof AXIS_NAMES)[number];

// Scale the service renderer uses by default; one grid edge spans this many
// SVG user units, so hit-test distances are computed in the same units.
export const SERVER_SCALE = 40;

const SQRT3_2 = Math.sqrt(3) / 2;

export function canon(v: readonly [number, number, number]): Vertex {
  const m = Math.min(v[0], v[1], v[2]);
  return [v[0] - m, v[1] - m, v[2] - m];
}

export function shift(v: Vertex, axis: Axis, sign = 1): Vertex {
  const moved: [number, number, number] = [v[0], v[1], v[2]];
  moved[axis] += sign;
  return canon(moved);
}

export function edgeEndpoints(edge: Edge): [Vertex, Vertex] {
  const [base, axis] = edge;
  return [canon(base), shift(base, axis)];
}

function compareVertices(a: Vertex, b: Vertex): number {
  return a[0] - b[0] || a[1] - b[1] || a[2] - b[2];
}

export function compareEdges(a: Edge, b: Edge): number {
  return compareVertices(a[0], b[0]) || a[1] - b[1];
}

// The two vertices flanking an edge: corners of the flanking triangles that
// are not endpoints of the edge itself.  Sorted, matching the service.
export function lateralVertices(edge: Edge): [Vertex, Vertex] {
  const [[x, y, z], axis] = edge;
  let pair: [Vertex, Vertex];
  if (axis === 0) {
    pair = [canon([x + 1, y + 1, z]), canon([x + 1, y, z + 1])];
  } else if (axis === 1) {
    pair = [canon([x + 1, y + 1, z]), canon([x, y + 1, z + 1])];
  } else {
    pair = [canon([x + 1, y, z + 1]), canon([x, y + 1, z + 1])];
  }
  return compareVertices(pair[0], pair[1]) <= 0 ? pair : [pair[1], pair[0]];
}

export function vertexKey(v: Vertex): string {
  return `${v[0]},${v[1]},${v[2]}`;
}

export function edgeKey(edge: Edge): string {
  return `${vertexKey(canon(edge[0]))},${AXIS_NAMES[edge[1]]}`;
}

export function edgeToJson(edge: Edge): [number, number, number, AxisName] {
  const [x, y, z] = canon(edge[0]);
  return [x, y, z, AXIS_NAMES[edge[1]]];
}

// Planar embedding used by the service renderer.  Screen coordinates flip
// the y axis so larger heights point up on screen.
export function embed(v: Vertex): [number, number] {
  return [SQRT3_2 * (v[1] - v[0]), v[2] - 0.5 * (v[0] + v[1])];
}

export function screenPoint(v: Vertex, scale: number): [number, number] {
  const [ex, ey] = embed(v);
  return [scale * ex, -scale * ey];
}

export function edgeMidpoint(edge: Edge, scale: number): [number, number] {
  const [a, b] = edgeEndpoints(edge);
  const [ax, ay] = screenPoint(a, scale);
  const [bx, by] = screenPoint(b, scale);
  return [(ax + bx) / 2, (ay + by) / 2];
}

// Hexagonal region with side n: canonical vertices with every coordinate in
// [0, n].
export function hexContains(v: Vertex, n: number): boolean {
  const c = canon(v);
  return Math.max(c[0], c[1], c[2]) <= n && Math.min(c[0], c[1], c[2]) === 0;
}

function hexVertices(n: number): Vertex[] {
  const out: Vertex[] = [];
  for (let x = 0; x <= n; x += 1) {
    for (let y = 0; y <= n; y += 1) {
      for (let z = 0; z <= n; z += 1) {
        if (Math.min(x, y, z) === 0) out.push([x, y, z]);
      }
    }
  }
  return out;
}

// All edges of the hexagon: both endpoints inside the region.
export function hexEdges(n: number): Edge[] {
  const out: Edge[] = [];
  for (const v of hexVertices(n)) {
    for (const axis of AXES) {
      if (hexContains(shift(v, axis), n)) out.push([v, axis]);
    }
  }
  out.sort(compareEdges);
  return out;
}

// Interior edges: both flanking triangles lie inside the region, which for
// the hexagon is equivalent to both lateral vertices being inside.  Only
// these edges accept constraint marks.
export function interiorEdges(n: number): Edge[] {
  return hexEdges(n).filter((edge) =>
    lateralVertices(edge).every((v) => hexContains(v, n)),
  );
}

// Nearest edge whose screen-space midpoint lies within `radius` of `point`,
// or null when nothing is close enough.
export function nearestEdge(
  point: readonly [number, number],
  edges: readonly Edge[],
  scale: number,
  radius: number,
): Edge | null {
  let best: Edge | null = null;
  let bestDist = radius;
  for (const edge of edges) {
    const [mx, my] = edgeMidpoint(edge, scale);
    const dist = Math.hypot(point[0] - mx, point[1] - my);
    if (dist <= bestDist) {
      best = edge;
      bestDist = dist;
    }
  }
  return best;
}

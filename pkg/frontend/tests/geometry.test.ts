import { describe, expect, it } from "vitest";

import {
  canon,
  edgeEndpoints,
  edgeKey,
  edgeMidpoint,
  edgeToJson,
  embed,
  hexContains,
  hexEdges,
  interiorEdges,
  lateralVertices,
  nearestEdge,
  screenPoint,
  shift,
  type Edge,
} from "../src/geometry.js";

const CENTER = [0, 0, 0] as const;

describe("vertex arithmetic", () => {
  it("canonicalizes by subtracting the minimum coordinate", () => {
    expect(canon([2, 3, 2])).toEqual([0, 1, 0]);
    expect(canon([0, 1, 2])).toEqual([0, 1, 2]);
  });

  it("shift steps along an axis and re-canonicalizes", () => {
    expect(shift(CENTER, 2)).toEqual([0, 0, 1]);
    expect(shift(CENTER, 0, -1)).toEqual([0, 1, 1]);
    expect(shift([0, 1, 1], 0)).toEqual([0, 0, 0]);
  });

  it("edge endpoints are the base and its positive neighbor", () => {
    expect(edgeEndpoints([CENTER, 2])).toEqual([
      [0, 0, 0],
      [0, 0, 1],
    ]);
    expect(edgeEndpoints([[1, 1, 0], 2])).toEqual([
      [1, 1, 0],
      [0, 0, 0],
    ]);
  });

  it("lateral vertices match the service convention", () => {
    expect(lateralVertices([CENTER, 2])).toEqual([
      [0, 1, 1],
      [1, 0, 1],
    ]);
    expect(lateralVertices([CENTER, 0])).toEqual([
      [1, 0, 1],
      [1, 1, 0],
    ]);
    expect(lateralVertices([CENTER, 1])).toEqual([
      [0, 1, 1],
      [1, 1, 0],
    ]);
  });

  it("keys and JSON use axis names", () => {
    expect(edgeKey([[1, 1, 0], 2])).toBe("1,1,0,Z");
    expect(edgeToJson([[0, 1, 1], 0])).toEqual([0, 1, 1, "X"]);
  });
});

describe("hexagon region", () => {
  it("membership needs max <= n and min == 0 after canon", () => {
    expect(hexContains([1, 1, 0], 1)).toBe(true);
    expect(hexContains([2, 1, 0], 1)).toBe(false);
    expect(hexContains([5, 5, 5], 1)).toBe(true);
  });

  it("edge and interior counts match the service region", () => {
    expect(hexEdges(1)).toHaveLength(12);
    expect(interiorEdges(1)).toHaveLength(6);
    expect(hexEdges(2)).toHaveLength(42);
    expect(interiorEdges(2)).toHaveLength(30);
    expect(hexEdges(6)).toHaveLength(342);
    expect(interiorEdges(6)).toHaveLength(306);
  });

  it("the unit hexagon's interior edges all touch the center", () => {
    const keys = interiorEdges(1).map(edgeKey);
    expect(keys).toEqual([
      "0,0,0,X",
      "0,0,0,Y",
      "0,0,0,Z",
      "0,1,1,X",
      "1,0,1,Y",
      "1,1,0,Z",
    ]);
  });

  it("boundary edges are in the region but not interior", () => {
    const boundary: Edge = [[0, 0, 1], 0];
    expect(hexEdges(1).some((e) => edgeKey(e) === edgeKey(boundary))).toBe(true);
    expect(interiorEdges(1).some((e) => edgeKey(e) === edgeKey(boundary))).toBe(
      false,
    );
  });
});

describe("screen embedding", () => {
  it("places vertices like the service renderer", () => {
    expect(screenPoint([0, 0, 1], 40)).toEqual([0, -40]);
    const [px, py] = screenPoint([1, 0, 0], 40);
    expect(px).toBeCloseTo(-34.641, 3);
    expect(py).toBeCloseTo(20, 6);
    expect(embed([0, 0, 0])).toEqual([0, 0]);
  });

  it("edge midpoints sit halfway between endpoint screen points", () => {
    expect(edgeMidpoint([CENTER, 2], 40)).toEqual([0, -20]);
  });
});

describe("edge hit testing", () => {
  const edges = hexEdges(1);

  it("finds the nearest edge midpoint within the radius", () => {
    const hit = nearestEdge([1, -19], edges, 40, 14);
    expect(hit).not.toBeNull();
    expect(edgeKey(hit!)).toBe("0,0,0,Z");
  });

  it("returns null when every midpoint is too far", () => {
    expect(nearestEdge([500, 500], edges, 40, 14)).toBeNull();
  });

  it("can hit boundary edges, which callers then reject as marks", () => {
    const [mx, my] = edgeMidpoint([[0, 0, 1], 0], 40);
    const hit = nearestEdge([mx + 2, my - 2], edges, 40, 14);
    expect(hit).not.toBeNull();
    expect(edgeKey(hit!)).toBe("0,0,1,X");
  });
});

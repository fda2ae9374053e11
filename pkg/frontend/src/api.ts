// Typed client for the tiling service's solve endpoint.

import type { AxisName } from "./geometry.js";

export type EdgeJson = [number, number, number, AxisName];

export interface SolveRequestBody {
  instance: {
    region: { type: "hexagon"; n: number };
    x1: EdgeJson[];
    x2: EdgeJson[];
  };
  algo: "advancing";
  includeSvg: true;
}

export interface SolveStats {
  vertices: number;
  arcs: number;
  relaxations: number;
  elapsed: number;
}

export interface SolveResult {
  status: "tiled" | "infeasible";
  lozenges?: EdgeJson[];
  heights?: [number, number, number, number][];
  cycle?: [number, number, number][];
  svg?: string;
  stats: SolveStats;
}

export interface SolveApi {
  solve(body: SolveRequestBody): Promise<SolveResult>;
}

export class HttpSolveApi implements SolveApi {
  constructor(private readonly baseUrl: string = "") {}

  async solve(body: SolveRequestBody): Promise<SolveResult> {
    const response = await fetch(`${this.baseUrl}/api/solve`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new Error(`solve request failed: HTTP ${response.status}`);
    }
    return (await response.json()) as SolveResult;
  }
}

// Board state: mark bookkeeping plus the solve-request lifecycle.
//
// Invariants the pump loop maintains:
//   - at most one request is in flight at any time;
//   - edits during a flight coalesce into exactly one follow-up request;
//   - a response for an out-of-date board revision is never displayed.

import type { EdgeJson, SolveApi, SolveRequestBody, SolveResult } from "./api.js";
import type { Edge } from "./geometry.js";
import { compareEdges, edgeKey, edgeToJson, interiorEdges } from "./geometry.js";

export type Mark = "x2" | "x1";

export type Outcome =
  | { kind: "stale" }
  | { kind: "pending" }
  | { kind: "done"; result: SolveResult }
  | { kind: "error"; message: string };

export const MIN_SIZE = 1;
export const MAX_SIZE = 30;
export const DEBOUNCE_MS = 150;

export interface BoardOptions {
  api: SolveApi;
  n?: number;
  debounceMs?: number;
  onChange?: () => void;
}

export class Board {
  n: number;
  outcome: Outcome = { kind: "stale" };

  private readonly api: SolveApi;
  private readonly debounceMs: number;
  private readonly onChange: () => void;
  private marks = new Map<string, Mark>();
  private interior = new Map<string, Edge>();
  private revision = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private queued = false;

  constructor(options: BoardOptions) {
    this.api = options.api;
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.onChange = options.onChange ?? (() => {});
    this.n = clampSize(options.n ?? 6);
    this.rebuildInterior();
  }

  isInterior(edge: Edge): boolean {
    return this.interior.has(edgeKey(edge));
  }

  markOf(edge: Edge): Mark | "free" {
    return this.marks.get(edgeKey(edge)) ?? "free";
  }

  markedEdges(mark: Mark): Edge[] {
    const out: Edge[] = [];
    for (const [key, value] of this.marks) {
      if (value === mark) out.push(this.interior.get(key)!);
    }
    out.sort(compareEdges);
    return out;
  }

  // Cycle an interior edge free -> x2 -> x1 -> free and schedule a re-solve.
  // Returns false (and changes nothing) for boundary or out-of-region edges.
  toggleEdge(edge: Edge): boolean {
    const key = edgeKey(edge);
    if (!this.interior.has(key)) return false;
    const current = this.marks.get(key);
    if (current === undefined) {
      this.marks.set(key, "x2");
    } else if (current === "x2") {
      this.marks.set(key, "x1");
    } else {
      this.marks.delete(key);
    }
    this.invalidate();
    return true;
  }

  // Clamp to [MIN_SIZE, MAX_SIZE], drop all marks, and schedule a re-solve.
  // Returns the size actually applied so callers can surface the clamping.
  setSize(raw: number): number {
    const clamped = clampSize(raw);
    this.n = clamped;
    this.marks.clear();
    this.rebuildInterior();
    this.invalidate();
    return clamped;
  }

  // Schedule an initial solve of the current (unmarked) board.
  refresh(): void {
    this.invalidate();
  }

  requestBody(): SolveRequestBody {
    const toJson = (mark: Mark): EdgeJson[] =>
      this.markedEdges(mark).map(edgeToJson);
    return {
      instance: {
        region: { type: "hexagon", n: this.n },
        x1: toJson("x1"),
        x2: toJson("x2"),
      },
      algo: "advancing",
      includeSvg: true,
    };
  }

  private rebuildInterior(): void {
    this.interior = new Map(
      interiorEdges(this.n).map((edge) => [edgeKey(edge), edge]),
    );
  }

  private invalidate(): void {
    this.revision += 1;
    this.setOutcome({ kind: "stale" });
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.pump();
    }, this.debounceMs);
  }

  private setOutcome(outcome: Outcome): void {
    this.outcome = outcome;
    this.onChange();
  }

  private async pump(): Promise<void> {
    if (this.inFlight) {
      this.queued = true;
      return;
    }
    this.inFlight = true;
    try {
      do {
        this.queued = false;
        // This iteration sends the latest state, so any debounce timer
        // still pending is redundant.
        if (this.timer !== null) {
          clearTimeout(this.timer);
          this.timer = null;
        }
        const revision = this.revision;
        this.setOutcome({ kind: "pending" });
        let next: Outcome;
        try {
          next = { kind: "done", result: await this.api.solve(this.requestBody()) };
        } catch (error) {
          next = {
            kind: "error",
            message: error instanceof Error ? error.message : String(error),
          };
        }
        if (revision === this.revision) {
          this.setOutcome(next);
        } else {
          // The board changed while this request was in flight; discard the
          // response and go around again with the current marks.
          this.queued = true;
        }
      } while (this.queued);
    } finally {
      this.inFlight = false;
    }
  }
}

function clampSize(raw: number): number {
  const whole = Math.trunc(raw);
  if (!Number.isFinite(whole)) return MIN_SIZE;
  return Math.min(MAX_SIZE, Math.max(MIN_SIZE, whole));
}

export interface OutcomeView {
  banner: string | null;
  busy: boolean;
  svg: string | null;
}

// What the page should show for an outcome.  The service SVG is displayed
// verbatim; for infeasible boards it already carries the conflict-cycle
// overlay, so only the banner is added client-side.
export function describeOutcome(outcome: Outcome): OutcomeView {
  switch (outcome.kind) {
    case "stale":
    case "pending":
      return { banner: null, busy: true, svg: null };
    case "done":
      return {
        banner: outcome.result.status === "infeasible" ? "unsolvable" : null,
        busy: false,
        svg: outcome.result.svg ?? null,
      };
    case "error":
      return {
        banner: `service error: ${outcome.message}`,
        busy: false,
        svg: null,
      };
  }
}

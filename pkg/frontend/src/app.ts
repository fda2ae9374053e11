// DOM wiring: connects the board state to the page.
//
// The solved board is the service's SVG inserted verbatim; clicks are mapped
// from client coordinates through the SVG viewBox into renderer user space,
// then hit-tested against edge midpoints.

import { HttpSolveApi } from "./api.js";
import type { Edge } from "./geometry.js";
import { hexEdges, nearestEdge, SERVER_SCALE } from "./geometry.js";
import { Board, describeOutcome, MAX_SIZE, MIN_SIZE } from "./state.js";

const HIT_RADIUS = 0.35 * SERVER_SCALE;

function clientToUser(
  svg: SVGSVGElement,
  clientX: number,
  clientY: number,
): [number, number] {
  const box = svg.viewBox.baseVal;
  const rect = svg.getBoundingClientRect();
  return [
    box.x + ((clientX - rect.left) * box.width) / rect.width,
    box.y + ((clientY - rect.top) * box.height) / rect.height,
  ];
}

export function initApp(doc: Document): void {
  const boardEl = doc.getElementById("board");
  const bannerEl = doc.getElementById("banner");
  const hintEl = doc.getElementById("hint");
  const sizeEl = doc.getElementById("size") as HTMLInputElement | null;
  if (!boardEl || !bannerEl || !hintEl || !sizeEl) return;

  const baseUrl = doc.body.dataset.api ?? "";
  let edges: Edge[] = [];
  let lastSvg: string | null = null;
  let hintTimer: ReturnType<typeof setTimeout> | null = null;

  const showHint = (message: string): void => {
    hintEl.textContent = message;
    if (hintTimer !== null) clearTimeout(hintTimer);
    hintTimer = setTimeout(() => {
      hintEl.textContent = "";
    }, 2000);
  };

  const render = (): void => {
    const view = describeOutcome(board.outcome);
    if (view.svg !== null && view.svg !== lastSvg) {
      boardEl.innerHTML = view.svg;
      lastSvg = view.svg;
    }
    boardEl.classList.toggle("busy", view.busy);
    bannerEl.textContent = view.banner ?? "";
    bannerEl.classList.toggle("visible", view.banner !== null);
  };

  const board = new Board({
    api: new HttpSolveApi(baseUrl),
    n: Number(sizeEl.value) || 6,
    onChange: render,
  });
  edges = hexEdges(board.n);

  boardEl.addEventListener("click", (event) => {
    const svg = boardEl.querySelector("svg");
    if (!svg) return;
    const point = clientToUser(svg, event.clientX, event.clientY);
    const hit = nearestEdge(point, edges, SERVER_SCALE, HIT_RADIUS);
    if (hit === null) return;
    if (!board.toggleEdge(hit)) {
      showHint("boundary edges cannot be marked");
    }
  });

  sizeEl.addEventListener("change", () => {
    const raw = Number(sizeEl.value);
    const applied = board.setSize(raw);
    if (applied !== raw) {
      showHint(`size must be between ${MIN_SIZE} and ${MAX_SIZE}; using ${applied}`);
    }
    sizeEl.value = String(applied);
    edges = hexEdges(applied);
  });

  board.refresh();
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  initApp(document);
}

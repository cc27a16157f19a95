// SVG hex board: cells drawn at the lattice Euclidean centers, pointy-top,
// with guide overlays for the mirror line and the channel columns.

import { Cell, ViewState, cellKey } from "./session.js";
import { ColorCode } from "./protocol.js";

const SQRT3 = Math.sqrt(3);

export interface BoardGeometry {
  cells: Cell[];
  redArcs?: Cell[][];
  blueArcs?: Cell[][];
  mirrorLine?: boolean;
  channelColumns?: boolean;
}

export interface RenderOptions {
  scale: number;
  onClick?: (cell: Cell) => void;
  /** Oversized windows degrade gracefully: only the maxCells nearest the
   * viewport center are drawn. */
  maxCells?: number;
  viewCenter?: [number, number];
}

export function centerOf(c: Cell): [number, number] {
  return [c.q + c.r / 2, (c.r * SQRT3) / 2];
}

function hexPoints(cx: number, cy: number, scale: number): string {
  const rad = scale / SQRT3;
  const pts: string[] = [];
  for (let k = 0; k < 6; k++) {
    const angle = Math.PI / 6 + (k * Math.PI) / 3;
    pts.push(`${cx + rad * Math.cos(angle)},${cy - rad * Math.sin(angle)}`);
  }
  return pts.join(" ");
}

const FILL: Record<string, string> = {
  R: "#c0392b",
  B: "#2d6cdf",
  empty: "#f2ead9",
  redArc: "#e8b7b0",
  blueArc: "#b9cdf0",
};

export class BoardView {
  private svg: SVGSVGElement;
  private cellNodes = new Map<string, SVGPolygonElement>();
  private geometry: BoardGeometry;
  private options: RenderOptions;

  constructor(host: HTMLElement, geometry: BoardGeometry, options: RenderOptions) {
    this.geometry = geometry;
    this.options = options;
    this.svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
    host.appendChild(this.svg);
    this.layout();
  }

  private layout(): void {
    const { scale } = this.options;
    const limit = this.options.maxCells ?? 2600;
    if (this.geometry.cells.length > limit) {
      const [vx, vy] = this.options.viewCenter ?? [0, 0];
      this.geometry = {
        ...this.geometry,
        cells: [...this.geometry.cells]
          .sort((a, b) => {
            const [ax, ay] = centerOf(a);
            const [bx, by] = centerOf(b);
            return (
              Math.hypot(ax - vx, ay - vy) - Math.hypot(bx - vx, by - vy)
            );
          })
          .slice(0, limit),
      };
    }
    const xs: number[] = [];
    const ys: number[] = [];
    for (const cell of this.geometry.cells) {
      const [x, y] = centerOf(cell);
      xs.push(x * scale);
      ys.push(-y * scale);
    }
    const pad = scale * 1.5;
    const minX = Math.min(...xs) - pad;
    const maxX = Math.max(...xs) + pad;
    const minY = Math.min(...ys) - pad;
    const maxY = Math.max(...ys) + pad;
    this.svg.setAttribute(
      "viewBox",
      `${minX} ${minY} ${maxX - minX} ${maxY - minY}`,
    );
    this.svg.setAttribute("width", "100%");

    const arcTint = new Map<string, string>();
    for (const arc of this.geometry.redArcs ?? []) {
      for (const c of arc) arcTint.set(cellKey(c), FILL.redArc);
    }
    for (const arc of this.geometry.blueArcs ?? []) {
      for (const c of arc) arcTint.set(cellKey(c), FILL.blueArc);
    }

    for (const cell of this.geometry.cells) {
      const [x, y] = centerOf(cell);
      const node = document.createElementNS(
        "http://www.w3.org/2000/svg",
        "polygon",
      );
      node.setAttribute("points", hexPoints(x * scale, -y * scale, scale * 0.96));
      node.setAttribute("fill", arcTint.get(cellKey(cell)) ?? FILL.empty);
      node.setAttribute("stroke", "#8a7f6a");
      node.setAttribute("stroke-width", String(scale * 0.04));
      node.dataset.key = cellKey(cell);
      node.addEventListener("click", () => this.options.onClick?.(cell));
      this.svg.appendChild(node);
      this.cellNodes.set(cellKey(cell), node);
    }

    if (this.geometry.mirrorLine) {
      const y = -(-SQRT3 / 4) * scale;
      const line = document.createElementNS("http://www.w3.org/2000/svg", "line");
      line.setAttribute("x1", String(minX));
      line.setAttribute("x2", String(maxX));
      line.setAttribute("y1", String(y));
      line.setAttribute("y2", String(y));
      line.setAttribute("stroke", "#2e8b57");
      line.setAttribute("stroke-width", String(scale * 0.12));
      line.setAttribute("stroke-dasharray", "6 4");
      line.setAttribute("pointer-events", "none");
      this.svg.appendChild(line);
    }
    if (this.geometry.channelColumns) {
      for (const cell of this.geometry.cells) {
        if (cell.q === 0 || cell.q === 1) {
          const node = this.cellNodes.get(cellKey(cell));
          node?.setAttribute("stroke", "#2e8b57");
          node?.setAttribute("stroke-width", String(scale * 0.1));
        }
      }
    }
  }

  update(view: ViewState): void {
    const last = new Set(view.lastMoves.map(cellKey));
    for (const [key, node] of this.cellNodes) {
      const stone = view.stones.get(key);
      if (stone) {
        node.setAttribute("fill", FILL[stone]);
        node.style.cursor = "default";
      } else {
        node.style.cursor = "pointer";
      }
      node.setAttribute("opacity", last.has(key) ? "0.82" : "1");
    }
  }

  /** Stones placed by the engine appear one after the other. */
  async animate(view: ViewState, moves: Cell[], color: ColorCode, delayMs = 160):
      Promise<void> {
    for (const move of moves) {
      const node = this.cellNodes.get(cellKey(move));
      node?.setAttribute("fill", FILL[color]);
      await new Promise((resolve) => setTimeout(resolve, delayMs));
    }
    this.update(view);
  }
}

// Browser entry: read the configuration from query parameters, open the
// websocket to the bridge, and wire the session to the board.

import { BoardView, BoardGeometry } from "./board.js";
import { EngineLink, LinkCore, OkResponse, VariantSpec, BoardSpec, ColorCode } from "./protocol.js";
import { Cell, GameSession, SessionConfig } from "./session.js";

class SocketLink implements EngineLink {
  private core: LinkCore;

  constructor(private socket: WebSocket) {
    this.core = new LinkCore((line) => socket.send(line.trim()));
    socket.addEventListener("message", (event) => this.core.feed(String(event.data)));
    socket.addEventListener("close", () => this.core.failAll("bridge closed"));
  }

  send(verb: string, payload: Record<string, unknown> = {}): Promise<OkResponse> {
    return this.core.send(verb, payload);
  }

  close(): void {
    this.socket.close();
  }
}

function configFromQuery(): { config: SessionConfig; geometry: BoardGeometry } {
  const params = new URLSearchParams(window.location.search);
  const preset = params.get("board") ?? "channel";
  const humanColor = (params.get("human") ?? "B") as ColorCode;
  const strategy = params.get("strategy") ?? (preset === "mirror" ? "mirroring" : "channel3for1");
  const seed = Number(params.get("seed") ?? 0);

  let board: BoardSpec;
  let variant: VariantSpec;
  const geometry: BoardGeometry = { cells: [] };

  if (preset === "mirror") {
    board = { kind: "window", qmin: -9, qmax: 9, rmin: -8, rmax: 7 };
    variant = { red: 1, blue: 1, first: humanColor };
    geometry.mirrorLine = true;
    fillWindow(geometry, board);
  } else if (preset.startsWith("rhombus")) {
    const n = Number(preset.split(":")[1] ?? 5);
    board = { kind: "rhombus", n };
    variant = { red: 1, blue: 1, first: humanColor };
    for (let q = 0; q < n; q++) for (let r = 0; r < n; r++) geometry.cells.push({ q, r });
    geometry.redArcs = [
      Array.from({ length: n }, (_, q) => ({ q, r: 0 })),
      Array.from({ length: n }, (_, q) => ({ q, r: n - 1 })),
    ];
    geometry.blueArcs = [
      Array.from({ length: n }, (_, r) => ({ q: 0, r })),
      Array.from({ length: n }, (_, r) => ({ q: n - 1, r })),
    ];
  } else {
    // Default: the 41-row channel window for three-for-one play.
    board = { kind: "window", qmin: -8, qmax: 9, rmin: -20, rmax: 20 };
    variant = { red: 3, blue: 1, first: humanColor };
    geometry.channelColumns = true;
    fillWindow(geometry, board);
  }
  return {
    config: { board, variant, humanColor, engineStrategy: strategy, seed },
    geometry,
  };
}

function fillWindow(geometry: BoardGeometry, board: BoardSpec): void {
  const { qmin, qmax, rmin, rmax } = board as unknown as Record<string, number>;
  for (let q = qmin; q <= qmax; q++) {
    for (let r = rmin; r <= rmax; r++) geometry.cells.push({ q, r });
  }
}

function toast(text: string): void {
  const el = document.getElementById("toast")!;
  el.textContent = text;
  el.classList.add("visible");
  setTimeout(() => el.classList.remove("visible"), 1800);
}

async function connect(): Promise<SocketLink> {
  const socket = new WebSocket(`ws://${window.location.host}/engine`);
  await new Promise<void>((resolve, reject) => {
    socket.addEventListener("open", () => resolve());
    socket.addEventListener("error", () => reject(new Error("bridge unreachable")));
  });
  return new SocketLink(socket);
}

/** Fixture gallery: the engine colors a window of the pattern; an optional
 * scan prints the winner per board size underneath. */
async function browseFixture(name: string): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const link = await connect();
  const status = document.getElementById("status")!;
  const span = Number(params.get("span") ?? 20);
  const windowBox = [-span, span, -span, span];
  const reply = await link.send("fixture", { name, window: windowBox });
  const geometry: BoardGeometry = { cells: [] };
  for (let q = -span; q <= span; q++) {
    for (let r = -span; r <= span; r++) geometry.cells.push({ q, r });
  }
  const view = new BoardView(document.getElementById("board")!, geometry, {
    scale: 18,
    maxCells: 3600,
  });
  const stones = new Map<string, ColorCode>();
  for (const [q, r, color] of reply.cells as [number, number, ColorCode][]) {
    stones.set(`${q},${r}`, color);
  }
  view.update({ stones, toMove: "R", remaining: 0, lastMoves: [], status: "fixture" });
  status.textContent = `fixture ${name} on a ${2 * span + 1}-wide window`;

  const sizes = params.get("scansizes");
  if (sizes) {
    const [lo, hi] = sizes.split("..").map(Number);
    const center = (params.get("center") ?? "0,0").split(",").map(Number);
    const scan = await link.send("scan", {
      fixture: name,
      center,
      sizes: { start: lo, stop: hi },
    });
    const rows = (scan.rows as [number, string][])
      .map(([s, w]) => `${s}:${w}`)
      .join("  ");
    status.textContent += ` - scan at (${center}): ${rows}`;
  }
}

async function start(): Promise<void> {
  const fixtureName = new URLSearchParams(window.location.search).get("fixture");
  if (fixtureName) {
    await browseFixture(fixtureName);
    return;
  }
  const { config, geometry } = configFromQuery();
  const link = await connect();
  const session = new GameSession(link, config);
  await session.start();

  const status = document.getElementById("status")!;
  const engineColor = config.humanColor === "R" ? "B" : "R";
  const refresh = () => {
    status.textContent =
      (session.humanTurn
        ? `your move (${config.humanColor})`
        : `engine thinking (${engineColor})`) +
      ` - stones left this turn: ${session.view.remaining}`;
  };

  let busy = false;
  const view = new BoardView(document.getElementById("board")!, geometry, {
    scale: 30,
    onClick: async (cell: Cell) => {
      if (busy || !session.humanTurn) return;
      if (session.view.stones.has(`${cell.q},${cell.r}`)) return;
      busy = true;
      try {
        await session.submitHumanMove(cell);
        view.update(session.view);
        refresh();
        while (!session.humanTurn) {
          const turn = await session.engineTurn();
          await view.animate(session.view, turn.moves, engineColor);
          refresh();
        }
      } catch (err) {
        toast(String(err));
      } finally {
        busy = false;
        view.update(session.view);
        refresh();
      }
    },
  });
  view.update(session.view);
  refresh();

  // An engine that moves first should do so right away.
  if (!session.humanTurn) {
    const turn = await session.engineTurn();
    await view.animate(session.view, turn.moves, engineColor);
    refresh();
  }
}

start().catch((err) => toast(String(err)));

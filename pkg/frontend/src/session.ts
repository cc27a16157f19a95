// Game session state machine: a pure projection of engine responses.
//
// The only game rule implemented here is empty-cell click gating; legality,
// turn accounting, and move generation all come back from the engine.

import { ColorCode, EngineLink, OkResponse, VariantSpec, BoardSpec } from "./protocol.js";

export interface Cell {
  q: number;
  r: number;
}

export const cellKey = (c: Cell) => `${c.q},${c.r}`;

export interface SessionConfig {
  board: BoardSpec;
  variant: VariantSpec;
  humanColor: ColorCode;
  engineStrategy: string;
  seed?: number;
}

export interface ViewState {
  stones: Map<string, ColorCode>;
  toMove: ColorCode;
  remaining: number;
  lastMoves: Cell[];
  status: string;
}

export interface EngineTurn {
  moves: Cell[];
}

export class GameSession {
  view: ViewState;

  constructor(private link: EngineLink, readonly config: SessionConfig) {
    this.view = {
      stones: new Map(),
      toMove: config.variant.first,
      remaining: stonesPerTurn(config.variant, config.variant.first),
      lastMoves: [],
      status: "new",
    };
  }

  get humanTurn(): boolean {
    return this.view.toMove === this.config.humanColor;
  }

  async start(): Promise<void> {
    await this.link.send("newgame", {
      board: this.config.board,
      variant: this.config.variant,
      seed: this.config.seed ?? 0,
    });
    this.view.status = "playing";
  }

  /** Human move: gated locally on emptiness only, then confirmed by the
   * engine before the board changes. */
  async submitHumanMove(cell: Cell): Promise<void> {
    if (!this.humanTurn) throw new Error("not your turn");
    if (this.view.stones.has(cellKey(cell))) throw new Error("cell occupied");
    const reply = await this.link.send("play", {
      color: this.config.humanColor,
      cell: [cell.q, cell.r],
    });
    this.applyConfirmed([cell], this.config.humanColor, reply);
  }

  /** Engine side plays its whole turn; the reply lists every stone. */
  async engineTurn(): Promise<EngineTurn> {
    const reply = await this.link.send("genmove", {
      strategy: this.config.engineStrategy,
    });
    const moves = (reply.moves as [number, number][]).map(([q, r]) => ({ q, r }));
    const engineColor: ColorCode = this.config.humanColor === "R" ? "B" : "R";
    this.applyConfirmed(moves, engineColor, reply);
    return { moves };
  }

  /** Play one human stone, then let the engine finish every turn it owns. */
  async humanMoveAndReplies(cell: Cell): Promise<EngineTurn[]> {
    await this.submitHumanMove(cell);
    const replies: EngineTurn[] = [];
    while (!this.humanTurn) {
      replies.push(await this.engineTurn());
    }
    return replies;
  }

  private applyConfirmed(moves: Cell[], color: ColorCode, reply: OkResponse): void {
    for (const move of moves) this.view.stones.set(cellKey(move), color);
    this.view.lastMoves = moves;
    this.view.toMove = reply.toMove as ColorCode;
    this.view.remaining = reply.remaining as number;
  }
}

export function stonesPerTurn(variant: VariantSpec, color: ColorCode): number {
  return color === "R" ? variant.red : variant.blue;
}

/** Reflection-and-half-shift partner; used for guide overlays and tests. */
export function mirrorPair(c: Cell): Cell {
  if (c.r >= 0) return { q: c.q + c.r, r: -1 - c.r };
  return { q: c.q + c.r + 1, r: -1 - c.r };
}

/** The two cells across the channel assigned to a channel cell. */
export function channelAssignment(c: Cell): [Cell, Cell] {
  if (c.q === 0) return [{ q: 1, r: c.r }, { q: 1, r: c.r - 1 }];
  if (c.q === 1) return [{ q: 0, r: c.r }, { q: 0, r: c.r + 1 }];
  throw new Error(`${cellKey(c)} is not on the channel`);
}

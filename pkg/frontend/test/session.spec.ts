// Scripted session tests against a live engine process: the same session
// module the browser runs, driven headlessly.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { EngineProcess } from "../src/engine.js";
import {
  Cell,
  GameSession,
  cellKey,
  channelAssignment,
  mirrorPair,
} from "../src/session.js";

function newEngine(): EngineProcess {
  return new EngineProcess();
}

describe("channel three-for-one session (41-row window)", () => {
  let engine: EngineProcess;
  let session: GameSession;

  beforeAll(async () => {
    engine = newEngine();
    session = new GameSession(engine, {
      board: { kind: "window", qmin: -8, qmax: 9, rmin: -20, rmax: 20 },
      variant: { red: 3, blue: 1, first: "B" },
      humanColor: "B",
      engineStrategy: "channel3for1",
      seed: 11,
    });
    await session.start();
  });

  afterAll(() => engine.close());

  it("answers channel intrusions with the assigned pair and always three stones", async () => {
    const probes: Cell[] = [
      { q: 0, r: 5 },
      { q: 1, r: -3 },
      { q: -4, r: 10 },
      { q: 0, r: -9 },
      { q: 5, r: 2 },
      { q: 1, r: 14 },
    ];
    for (const probe of probes) {
      const pairWasFree =
        (probe.q === 0 || probe.q === 1) &&
        channelAssignment(probe).every((c) => !session.view.stones.has(cellKey(c)));
      const replies = await session.humanMoveAndReplies(probe);
      expect(replies).toHaveLength(1);
      const moves = replies[0].moves;
      expect(moves).toHaveLength(3);
      if (pairWasFree) {
        const expected = channelAssignment(probe).map(cellKey);
        expect(moves.slice(0, 2).map(cellKey)).toEqual(expected);
      }
      expect(session.humanTurn).toBe(true);
      expect(session.view.remaining).toBe(1);
    }
  });

  it("keeps the view a pure projection of confirmed responses", async () => {
    const stonesBefore = session.view.stones.size;
    await expect(
      session.submitHumanMove({ q: 0, r: 5 }),
    ).rejects.toThrow(/occupied/);
    expect(session.view.stones.size).toBe(stonesBefore);
  });
});

describe("mirroring session", () => {
  let engine: EngineProcess;
  let session: GameSession;

  beforeAll(async () => {
    engine = newEngine();
    session = new GameSession(engine, {
      board: { kind: "window", qmin: -9, qmax: 9, rmin: -8, rmax: 7 },
      variant: { red: 1, blue: 1, first: "R" },
      humanColor: "R",
      engineStrategy: "mirroring",
      seed: 0,
    });
    await session.start();
  });

  afterAll(() => engine.close());

  it("answers every human stone at its mirror partner", async () => {
    const probes: Cell[] = [
      { q: 0, r: 0 },
      { q: 2, r: -3 },
      { q: -4, r: 5 },
      { q: 3, r: 2 },
      { q: -2, r: -2 },
      { q: 5, r: 1 },
      { q: -6, r: 3 },
      { q: 1, r: -5 },
    ];
    for (const probe of probes) {
      const replies = await session.humanMoveAndReplies(probe);
      expect(replies).toHaveLength(1);
      expect(replies[0].moves).toHaveLength(1);
      expect(cellKey(replies[0].moves[0])).toBe(cellKey(mirrorPair(probe)));
    }
    // 8 human stones + 8 mirrored replies on the board.
    expect(session.view.stones.size).toBe(16);
  });

  it("rejects illegal human input locally before any message is sent", async () => {
    await expect(session.submitHumanMove({ q: 0, r: 0 })).rejects.toThrow(/occupied/);
  });
});

describe("engine errors surface cleanly", () => {
  it("reports illegal plays without corrupting the session", async () => {
    const engine = newEngine();
    try {
      const session = new GameSession(engine, {
        board: { kind: "rhombus", n: 3 },
        variant: { red: 1, blue: 1, first: "R" },
        humanColor: "R",
        engineStrategy: "random",
        seed: 4,
      });
      await session.start();
      await session.submitHumanMove({ q: 0, r: 0 });
      // Bypass local gating to prove the engine itself rejects it.
      await expect(
        engine.send("play", { color: "B", cell: [0, 0] }),
      ).rejects.toThrow(/IllegalMove/);
    } finally {
      engine.close();
    }
  });
});

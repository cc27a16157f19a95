// End-to-end through the websocket bridge: browser-side link code talking
// to a live engine process spawned by the bridge.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";
import { LinkCore, OkResponse } from "../src/protocol.js";

const PORT = 8871;

describe("websocket bridge", () => {
  let stop: () => void;

  beforeAll(async () => {
    process.env.PORT = String(PORT);
    const mod = await import("../src/bridge.js");
    stop = () => {};
    void mod;
    await new Promise((resolve) => setTimeout(resolve, 400));
  });

  afterAll(() => stop());

  it("relays a whole session over one socket", async () => {
    const socket = new WebSocket(`ws://127.0.0.1:${PORT}/engine`);
    await new Promise<void>((resolve, reject) => {
      socket.on("open", () => resolve());
      socket.on("error", reject);
    });
    const core = new LinkCore((line) => socket.send(line.trim()));
    socket.on("message", (data) => core.feed(data.toString()));

    const send = (verb: string, payload: Record<string, unknown> = {}) =>
      core.send(verb, payload) as Promise<OkResponse>;

    const hello = await send("newgame", {
      board: { kind: "window", qmin: -6, qmax: 6, rmin: -6, rmax: 5 },
      variant: { red: 1, blue: 1, first: "R" },
    });
    expect(hello.ok).toBe(true);
    await send("play", { color: "R", cell: [0, 0] });
    const reply = await send("genmove", { strategy: "mirroring" });
    expect(reply.moves).toEqual([[0, -1]]);
    const saved = await send("save");
    expect(typeof saved.position).toBe("string");
    socket.close();
  });

  it("serves the page", async () => {
    const res = await fetch(`http://127.0.0.1:${PORT}/`);
    expect(res.status).toBe(200);
    const body = await res.text();
    expect(body).toContain("hexlab");
  });
});

// Spawns the engine's serve mode and exposes it as an EngineLink.
// Used by the websocket bridge and by the scripted tests.

import { spawn, ChildProcessWithoutNullStreams } from "node:child_process";
import { EngineLink, LinkCore, OkResponse } from "./protocol.js";

export interface EngineOptions {
  command?: string;
  args?: string[];
  cwd?: string;
}

export class EngineProcess implements EngineLink {
  private child: ChildProcessWithoutNullStreams;
  private core: LinkCore;
  private buffer = "";

  constructor(options: EngineOptions = {}) {
    const command = options.command ?? "python3";
    const args = options.args ?? ["-m", "hexlab.cli", "serve"];
    this.child = spawn(command, args, {
      cwd: options.cwd,
      stdio: ["pipe", "pipe", "pipe"],
    });
    this.core = new LinkCore((line) => this.child.stdin.write(line));
    this.child.stdout.setEncoding("utf8");
    this.child.stdout.on("data", (chunk: string) => {
      this.buffer += chunk;
      let idx;
      while ((idx = this.buffer.indexOf("\n")) >= 0) {
        const line = this.buffer.slice(0, idx);
        this.buffer = this.buffer.slice(idx + 1);
        this.core.feed(line);
      }
    });
    this.child.on("exit", () => this.core.failAll("engine process exited"));
  }

  send(verb: string, payload: Record<string, unknown> = {}): Promise<OkResponse> {
    return this.core.send(verb, payload);
  }

  close(): void {
    this.core.failAll("engine closed");
    this.child.kill();
  }
}

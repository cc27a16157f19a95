// Thin local bridge: one engine process per websocket client, plus static
// hosting for the page.  The browser speaks the engine protocol verbatim;
// nothing is interpreted here.

import { createServer } from "node:http";
import { readFile } from "node:fs/promises";
import { extname, join, dirname } from "node:path";
import { fileURLToPath } from "node:url";
import { WebSocketServer, WebSocket } from "ws";
import { spawn } from "node:child_process";

const here = dirname(fileURLToPath(import.meta.url));
const publicDir = join(here, "..", "public");
const distDir = join(here, "..", "dist");
const port = Number(process.env.PORT ?? 8695);

const MIME: Record<string, string> = {
  ".html": "text/html",
  ".js": "text/javascript",
  ".css": "text/css",
  ".svg": "image/svg+xml",
};

const http = createServer(async (req, res) => {
  const path = (req.url ?? "/").split("?")[0];
  const file = path === "/" ? "index.html" : path.slice(1);
  for (const root of [publicDir, distDir]) {
    try {
      const body = await readFile(join(root, file));
      res.writeHead(200, { "content-type": MIME[extname(file)] ?? "text/plain" });
      res.end(body);
      return;
    } catch {
      // try the next root
    }
  }
  res.writeHead(404);
  res.end("not found");
});

const wss = new WebSocketServer({ server: http, path: "/engine" });

wss.on("connection", (socket: WebSocket) => {
  const child = spawn(
    process.env.HEXLAB_PYTHON ?? "python3",
    ["-m", "hexlab.cli", "serve"],
    { stdio: ["pipe", "pipe", "inherit"] },
  );
  let buffer = "";
  child.stdout.setEncoding("utf8");
  child.stdout.on("data", (chunk: string) => {
    buffer += chunk;
    let idx;
    while ((idx = buffer.indexOf("\n")) >= 0) {
      const line = buffer.slice(0, idx);
      buffer = buffer.slice(idx + 1);
      if (line.trim() && socket.readyState === WebSocket.OPEN) socket.send(line);
    }
  });
  socket.on("message", (data) => {
    child.stdin.write(data.toString() + "\n");
  });
  const shutdown = () => child.kill();
  socket.on("close", shutdown);
  child.on("exit", () => socket.close());
});

http.listen(port, () => {
  console.log(`hexlab ui on http://localhost:${port}/  (engine at ws /engine)`);
});

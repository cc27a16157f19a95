// Engine protocol types: line-delimited JSON with matching ids.

export type ColorCode = "R" | "B";

export interface BoardSpec {
  kind: "rhombus" | "trapezoid" | "window" | "general" | "biased";
  [key: string]: unknown;
}

export interface VariantSpec {
  red: number;
  blue: number;
  first: ColorCode;
}

export interface Request {
  id: number;
  verb: string;
  [key: string]: unknown;
}

export interface OkResponse {
  id: number;
  ok: true;
  [key: string]: unknown;
}

export interface ErrResponse {
  id: number;
  ok: false;
  error: { kind: string; message: string };
}

export type Response = OkResponse | ErrResponse;

/** Anything that can carry a request to the engine and return its reply. */
export interface EngineLink {
  send(verb: string, payload?: Record<string, unknown>): Promise<OkResponse>;
  close(): void;
}

export class EngineError extends Error {
  kind: string;
  constructor(err: { kind: string; message: string }) {
    super(`${err.kind}: ${err.message}`);
    this.kind = err.kind;
  }
}

/** Request/response correlation over any line-oriented transport. */
export class LinkCore {
  private nextId = 1;
  private pending = new Map<number, {
    resolve: (r: OkResponse) => void;
    reject: (e: Error) => void;
  }>();

  constructor(private write: (line: string) => void) {}

  send(verb: string, payload: Record<string, unknown> = {}): Promise<OkResponse> {
    const id = this.nextId++;
    const msg: Request = { id, verb, ...payload };
    return new Promise((resolve, reject) => {
      this.pending.set(id, { resolve, reject });
      this.write(JSON.stringify(msg) + "\n");
    });
  }

  feed(line: string): void {
    const text = line.trim();
    if (!text) return;
    let parsed: Response;
    try {
      parsed = JSON.parse(text) as Response;
    } catch {
      return;
    }
    const waiter = this.pending.get(parsed.id);
    if (!waiter) return;
    this.pending.delete(parsed.id);
    if (parsed.ok) waiter.resolve(parsed);
    else waiter.reject(new EngineError(parsed.error));
  }

  failAll(reason: string): void {
    for (const [, waiter] of this.pending) waiter.reject(new Error(reason));
    this.pending.clear();
  }
}

// WebSocket session client: one request in flight at a time, strictly
// request/response (the server answers every message in order).

import type { Request, Response } from "./protocol";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onmessage: ((ev: { data: string }) => void) | null;
  onclose: (() => void) | null;
  onerror: ((ev: unknown) => void) | null;
}

export class SessionClient {
  private socket: SocketLike;
  private queue: Array<{
    resolve: (r: Response) => void;
    reject: (e: Error) => void;
  }> = [];
  private closed = false;

  constructor(socket: SocketLike) {
    this.socket = socket;
    socket.onmessage = (ev) => {
      const pending = this.queue.shift();
      if (!pending) return; // unsolicited message: protocol is strict RPC
      try {
        pending.resolve(JSON.parse(ev.data) as Response);
      } catch (err) {
        pending.reject(err instanceof Error ? err : new Error(String(err)));
      }
    };
    socket.onclose = () => this.failAll("connection closed");
    socket.onerror = () => this.failAll("connection error");
  }

  get busy(): boolean {
    return this.queue.length > 0;
  }

  request(msg: Request): Promise<Response> {
    if (this.closed) return Promise.reject(new Error("client closed"));
    return new Promise((resolve, reject) => {
      this.queue.push({ resolve, reject });
      this.socket.send(JSON.stringify(msg));
    });
  }

  close(): void {
    this.closed = true;
    this.socket.close();
    this.failAll("client closed");
  }

  private failAll(reason: string): void {
    const pending = this.queue.splice(0);
    for (const p of pending) p.reject(new Error(reason));
  }
}

export function connect(url: string): Promise<SessionClient> {
  return new Promise((resolve, reject) => {
    const ws = new WebSocket(url);
    ws.onopen = () => resolve(new SessionClient(ws as unknown as SocketLike));
    ws.onerror = () => reject(new Error(`cannot connect to ${url}`));
  });
}

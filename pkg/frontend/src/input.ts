// Keyboard mapping for the robber's half-turn. Axis 1 is horizontal (east
// positive), axis 2 vertical (north positive); axes are 1-based on the wire.

import type { Request, View } from "./protocol";

export type MoveMessage = Extract<Request, { op: "move" }>;

const KEY_MOVES: Record<string, { axis: number; sign: 1 | -1 }> = {
  ArrowRight: { axis: 1, sign: 1 },
  ArrowLeft: { axis: 1, sign: -1 },
  ArrowUp: { axis: 2, sign: 1 },
  ArrowDown: { axis: 2, sign: -1 },
};

export interface KeyLike {
  key: string;
}

// Translate a key press into a move request, or null when the key is not a
// move key, the game is not awaiting a robber move, or a request is already
// in flight (one in-flight request per session: input is locked until the
// server view returns).
export function keyToMove(
  key: KeyLike,
  view: View | null,
  awaitingServer: boolean,
): MoveMessage | null {
  if (view === null || awaitingServer) return null;
  if (view.phase !== "awaiting_robber_move") return null;
  if (key.key === " " || key.key === "Spacebar") {
    return { op: "move", id: view.id, stay: true };
  }
  const step = KEY_MOVES[key.key];
  if (!step) return null;
  return { op: "move", id: view.id, axis: step.axis, sign: step.sign };
}

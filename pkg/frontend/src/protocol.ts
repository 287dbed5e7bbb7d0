// Wire protocol types for the latticecops session server.
// One request object in, one response object out, over a WebSocket.

import type { CopSetSpecJson } from "./copsets";

export type Point = [number, number];

export type DirectionLabel = string; // "X1+", "X1-", "X2+", "X2-"

export type Phase = "awaiting_placement" | "awaiting_robber_move" | "finished";

export type GameStatus = "running" | "captured" | "resigned";

export interface CensusEntryJson {
  kind: "unbounded" | "bounded";
  maxShell?: number | null;
}

export interface VerdictJson {
  outcome: "winning" | "losing";
  census: Record<DirectionLabel, CensusEntryJson>;
  witness: null | {
    direction: DirectionLabel;
    start: number[];
    boundShell: number;
    strategy: string;
  };
}

export interface View {
  id: string;
  turn: number;
  actor: string;
  robber: Point | null;
  cops: Record<DirectionLabel, Point>;
  potentials: Record<DirectionLabel, number>;
  matched: Record<DirectionLabel, boolean>;
  status: GameStatus;
  phase: Phase;
  bound: number;
  verdict: VerdictJson;
  spec: CopSetSpecJson;
  dimension: number;
  capturedBy?: DirectionLabel | "static";
}

export type Request =
  | { op: "create"; preset: string }
  | { op: "create"; spec: CopSetSpecJson }
  | { op: "place"; id: string; point: number[] }
  | { op: "move"; id: string; axis: number; sign: 1 | -1 }
  | { op: "move"; id: string; stay: true }
  | { op: "state"; id: string }
  | { op: "resign"; id: string };

export type ErrorCode = "IllegalMove" | "WrongPhase" | "UnknownSession" | "BadSpec";

export type Response =
  | { ok: true; view: View }
  | { ok: false; error: ErrorCode; detail?: string };

export function isFinished(view: View): boolean {
  return view.phase === "finished";
}

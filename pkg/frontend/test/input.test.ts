import { describe, expect, it } from "vitest";

import { keyToMove } from "../src/input";
import type { View } from "../src/protocol";

function viewInPhase(phase: View["phase"]): View {
  return {
    id: "s1",
    turn: 0,
    actor: "robber",
    robber: [0, 0],
    cops: {},
    potentials: {},
    matched: {},
    status: "running",
    phase,
    bound: 8,
    verdict: { outcome: "winning", census: {}, witness: null },
    spec: { dimension: 2, generators: [] },
    dimension: 2,
  };
}

describe("keyToMove", () => {
  const view = viewInPhase("awaiting_robber_move");

  it("maps arrow keys to 1-based axis steps", () => {
    expect(keyToMove({ key: "ArrowRight" }, view, false)).toEqual({
      op: "move",
      id: "s1",
      axis: 1,
      sign: 1,
    });
    expect(keyToMove({ key: "ArrowLeft" }, view, false)).toEqual({
      op: "move",
      id: "s1",
      axis: 1,
      sign: -1,
    });
    expect(keyToMove({ key: "ArrowUp" }, view, false)).toEqual({
      op: "move",
      id: "s1",
      axis: 2,
      sign: 1,
    });
    expect(keyToMove({ key: "ArrowDown" }, view, false)).toEqual({
      op: "move",
      id: "s1",
      axis: 2,
      sign: -1,
    });
  });

  it("maps space to a stay move", () => {
    expect(keyToMove({ key: " " }, view, false)).toEqual({
      op: "move",
      id: "s1",
      stay: true,
    });
  });

  it("ignores non-move keys", () => {
    expect(keyToMove({ key: "a" }, view, false)).toBeNull();
    expect(keyToMove({ key: "Enter" }, view, false)).toBeNull();
  });

  it("locks input while a request is in flight", () => {
    expect(keyToMove({ key: "ArrowRight" }, view, true)).toBeNull();
  });

  it("ignores input outside the robber-move phase", () => {
    expect(keyToMove({ key: "ArrowRight" }, viewInPhase("awaiting_placement"), false)).toBeNull();
    expect(keyToMove({ key: "ArrowRight" }, viewInPhase("finished"), false)).toBeNull();
    expect(keyToMove({ key: "ArrowRight" }, null, false)).toBeNull();
  });
});

// Wires the canvas, camera, keyboard, and session client together.

import { Camera, makeCamera, pan, screenToWorld, zoomAt } from "./camera";
import { keyToMove } from "./input";
import type { View } from "./protocol";
import { renderScene } from "./render";
import { SessionClient, connect } from "./session";

const DEFAULT_URL = `ws://${location.hostname || "127.0.0.1"}:8642/ws`;

interface App {
  client: SessionClient | null;
  view: View | null;
  cam: Camera;
  awaitingServer: boolean;
}

function main(): void {
  const canvas = document.getElementById("board") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d")!;
  const presetSelect = document.getElementById("preset") as HTMLSelectElement;
  const newGameButton = document.getElementById("new-game") as HTMLButtonElement;
  const stayButton = document.getElementById("stay") as HTMLButtonElement;
  const resignButton = document.getElementById("resign") as HTMLButtonElement;

  const app: App = {
    client: null,
    view: null,
    cam: makeCamera(),
    awaitingServer: false,
  };

  function resize(): void {
    canvas.width = canvas.clientWidth;
    canvas.height = canvas.clientHeight;
    draw();
  }

  function draw(): void {
    renderScene(ctx, app.view, app.cam, canvas.width, canvas.height);
  }

  async function send(msg: Parameters<SessionClient["request"]>[0]): Promise<void> {
    if (!app.client || app.awaitingServer) return;
    app.awaitingServer = true;
    try {
      const resp = await app.client.request(msg);
      if (resp.ok) {
        app.view = resp.view;
      } else {
        console.warn(`server: ${resp.error}`, resp.detail);
      }
    } finally {
      app.awaitingServer = false;
      draw();
    }
  }

  async function newGame(): Promise<void> {
    if (!app.client) {
      app.client = await connect(DEFAULT_URL);
    }
    app.view = null;
    app.awaitingServer = false;
    await send({ op: "create", preset: presetSelect.value });
  }

  newGameButton.addEventListener("click", () => void newGame());
  stayButton.addEventListener("click", () => {
    const msg = keyToMove({ key: " " }, app.view, app.awaitingServer);
    if (msg) void send(msg);
  });
  resignButton.addEventListener("click", () => {
    if (app.view && app.view.phase !== "finished") {
      void send({ op: "resign", id: app.view.id });
    }
  });

  window.addEventListener("keydown", (ev) => {
    const msg = keyToMove(ev, app.view, app.awaitingServer);
    if (msg) {
      ev.preventDefault();
      void send(msg);
    }
  });

  canvas.addEventListener("click", (ev) => {
    if (!app.view || app.view.phase !== "awaiting_placement") return;
    const [wx, wy] = screenToWorld(
      app.cam,
      canvas.width,
      canvas.height,
      ev.offsetX,
      ev.offsetY,
    );
    void send({
      op: "place",
      id: app.view.id,
      point: [Math.round(wx), Math.round(wy)],
    });
  });

  let dragging: { x: number; y: number } | null = null;
  canvas.addEventListener("mousedown", (ev) => {
    if (ev.button === 1 || ev.shiftKey) dragging = { x: ev.offsetX, y: ev.offsetY };
  });
  window.addEventListener("mouseup", () => (dragging = null));
  canvas.addEventListener("mousemove", (ev) => {
    if (!dragging) return;
    app.cam = pan(app.cam, ev.offsetX - dragging.x, ev.offsetY - dragging.y);
    dragging = { x: ev.offsetX, y: ev.offsetY };
    draw();
  });
  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const factor = ev.deltaY < 0 ? 1.15 : 1 / 1.15;
    app.cam = zoomAt(app.cam, canvas.width, canvas.height, ev.offsetX, ev.offsetY, factor);
    draw();
  });

  window.addEventListener("resize", resize);
  resize();
}

main();

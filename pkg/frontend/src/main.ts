import { ApiClient } from "./api.js";
import { InkApp } from "./app.js";
import { CanvasView } from "./render.js";

function requireEl<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8600";

const canvas = requireEl<HTMLCanvasElement>("ink-canvas");
const view = new CanvasView({
  canvas,
  results: requireEl("results"),
  strokes: requireEl("stroke-badges"),
  banner: requireEl("banner"),
  hint: requireEl("hint"),
});
const api = new ApiClient(baseUrl);
const app = new InkApp(api, view);

function canvasPos(ev: PointerEvent): [number, number] {
  const rect = canvas.getBoundingClientRect();
  return [ev.clientX - rect.left, ev.clientY - rect.top];
}

canvas.addEventListener("pointerdown", (ev) => {
  ev.preventDefault();
  canvas.setPointerCapture(ev.pointerId);
  const [x, y] = canvasPos(ev);
  app.penDown(x, y, performance.now());
});

canvas.addEventListener("pointermove", (ev) => {
  const [x, y] = canvasPos(ev);
  app.penMove(x, y, performance.now());
});

const finish = () => void app.penUp();
canvas.addEventListener("pointerup", finish);
canvas.addEventListener("pointercancel", finish);

requireEl("clear").addEventListener("click", () => app.clear());
requireEl("recognize").addEventListener("click", () => void app.recognizeNow());

api
  .modelInfo()
  .then((info) => {
    requireEl("status").textContent =
      `model v${info.version}: ${info.class_count} classes, ${info.template_count} templates`;
  })
  .catch(() => {
    view.showBanner(`service unavailable at ${baseUrl}`);
  });

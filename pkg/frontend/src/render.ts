import { InkSession } from "./session.js";
import type { AppView, } from "./app.js";
import type { RecognizeResponse } from "./types.js";

const STROKE_COLORS = ["#2563eb", "#0d9488", "#9333ea", "#d97706", "#db2777", "#4b5563"];
const SHIRO_COLOR = "#dc2626";

export interface ViewElements {
  canvas: HTMLCanvasElement;
  results: HTMLElement;
  strokes: HTMLElement;
  banner: HTMLElement;
  hint: HTMLElement;
}

export class CanvasView implements AppView {
  private readonly ctx: CanvasRenderingContext2D;
  private hintTimer: number | undefined;

  constructor(private readonly el: ViewElements) {
    const ctx = el.canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
  }

  renderInk(session: InkSession): void {
    const { canvas } = this.el;
    this.ctx.clearRect(0, 0, canvas.width, canvas.height);
    const shiro = session.lastResponse?.shirorekha ?? null;
    session.strokes.forEach((stroke, i) => {
      this.drawStroke(stroke, i === shiro ? SHIRO_COLOR : STROKE_COLORS[i % STROKE_COLORS.length]!);
    });
    if (session.pending) this.drawStroke(session.pending, "#111827");
  }

  private drawStroke(stroke: [number, number, number][], color: string): void {
    if (stroke.length === 0) return;
    this.ctx.strokeStyle = color;
    this.ctx.lineWidth = 3;
    this.ctx.lineCap = "round";
    this.ctx.lineJoin = "round";
    this.ctx.beginPath();
    this.ctx.moveTo(stroke[0]![0], stroke[0]![1]);
    for (const [x, y] of stroke.slice(1)) this.ctx.lineTo(x, y);
    this.ctx.stroke();
    // start-of-stroke marker, writing direction matters
    this.ctx.fillStyle = color;
    this.ctx.beginPath();
    this.ctx.arc(stroke[0]![0], stroke[0]![1], 4, 0, 2 * Math.PI);
    this.ctx.fill();
  }

  renderResult(result: RecognizeResponse | null): void {
    this.el.results.replaceChildren();
    this.el.strokes.replaceChildren();
    if (!result) return;

    if (result.rejected) {
      const div = document.createElement("div");
      div.className = "rejected";
      div.textContent = "rejected: no confident match";
      this.el.results.append(div);
    }
    for (const entry of result.ranked) {
      const row = document.createElement("div");
      row.className = "candidate";
      row.textContent = `class ${entry.label}  (score ${entry.score.toFixed(4)})`;
      this.el.results.append(row);
    }
    for (const match of result.per_stroke) {
      const badge = document.createElement("span");
      badge.className = "badge";
      const star = match.stroke === result.shirorekha ? " headline" : "";
      badge.textContent = `#${match.stroke} ${match.region}${star}`;
      badge.title = `template ${match.template}, distance ${match.delta.toFixed(4)}`;
      this.el.strokes.append(badge);
    }
  }

  showBanner(message: string | null): void {
    this.el.banner.textContent = message ?? "";
    this.el.banner.style.display = message ? "block" : "none";
  }

  showHint(message: string): void {
    this.el.hint.textContent = message;
    window.clearTimeout(this.hintTimer);
    this.hintTimer = window.setTimeout(() => {
      this.el.hint.textContent = "";
    }, 1500);
  }
}

import type { InkPoint, InkStroke, RecognizeResponse } from "./types.js";

export type PenUpOutcome = "stroke" | "tap" | null;

/**
 * Captured ink for one symbol. Strokes are append-only until an explicit
 * clear; a stroke opens at pen-down and closes exactly at pen-up. Zero-length
 * traces (taps) are discarded. Coordinates are stored exactly as received --
 * the server does all normalization, so what gets drawn is what gets sent.
 */
export class InkSession {
  private closed: InkStroke[] = [];
  private open: InkPoint[] | null = null;
  private startedAt: number | null = null;
  lastResponse: RecognizeResponse | null = null;

  get penDown(): boolean {
    return this.open !== null;
  }

  get strokes(): InkStroke[] {
    return this.closed;
  }

  get strokeCount(): number {
    return this.closed.length;
  }

  /** Pen touched down; ignored if already down. Time is in milliseconds. */
  beginStroke(x: number, y: number, timeMs: number): void {
    if (this.open !== null) return;
    if (this.startedAt === null) this.startedAt = timeMs;
    this.open = [[x, y, (timeMs - this.startedAt) / 1000]];
  }

  /** Pen moved while down; ignored when the pen is up. */
  addPoint(x: number, y: number, timeMs: number): void {
    if (this.open === null || this.startedAt === null) return;
    this.open.push([x, y, (timeMs - this.startedAt) / 1000]);
  }

  /**
   * Pen lifted: closes the stroke. Returns "stroke" when one was kept,
   * "tap" when the trace had no extent and was discarded, null when the
   * pen was not down.
   */
  endStroke(): PenUpOutcome {
    if (this.open === null) return null;
    const trace = this.open;
    this.open = null;
    const first = trace[0]!;
    const moved = trace.some((p) => p[0] !== first[0] || p[1] !== first[1]);
    if (trace.length < 2 || !moved) {
      if (this.closed.length === 0) this.startedAt = null;
      return "tap";
    }
    this.closed.push(trace);
    return "stroke";
  }

  clear(): void {
    this.closed = [];
    this.open = null;
    this.startedAt = null;
    this.lastResponse = null;
  }

  /** Open stroke samples, for live rendering only. */
  get pending(): InkStroke | null {
    return this.open;
  }
}

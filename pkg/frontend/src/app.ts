import { ApiClient } from "./api.js";
import { InkSession } from "./session.js";
import type { RecognizeResponse } from "./types.js";

/** Everything the controller needs from the presentation layer. */
export interface AppView {
  renderInk(session: InkSession): void;
  renderResult(result: RecognizeResponse | null): void;
  showBanner(message: string | null): void;
  showHint(message: string): void;
}

/**
 * Interaction controller: pointer events in, view updates out. Recognition
 * fires exactly once per kept stroke, at pen-up, never mid-stroke. A failed
 * request raises the banner and leaves the session untouched.
 */
export class InkApp {
  readonly session = new InkSession();

  constructor(
    private readonly api: ApiClient,
    private readonly view: AppView,
    private readonly topk = 5,
    private readonly autoRecognize = true,
  ) {}

  penDown(x: number, y: number, timeMs: number): void {
    this.session.beginStroke(x, y, timeMs);
    this.view.renderInk(this.session);
  }

  penMove(x: number, y: number, timeMs: number): void {
    if (!this.session.penDown) return;
    this.session.addPoint(x, y, timeMs);
    this.view.renderInk(this.session);
  }

  async penUp(): Promise<void> {
    const outcome = this.session.endStroke();
    this.view.renderInk(this.session);
    if (outcome === "tap") {
      this.view.showHint("tap ignored: draw a stroke");
      return;
    }
    if (outcome === "stroke" && this.autoRecognize) {
      await this.recognizeNow();
    }
  }

  async recognizeNow(): Promise<void> {
    if (this.session.strokeCount === 0) return;
    try {
      const result = await this.api.recognize(this.session.strokes, this.topk);
      if (result === null) return; // superseded by a newer stroke
      this.session.lastResponse = result;
      this.view.showBanner(null);
      this.view.renderResult(result);
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      this.view.showBanner(`service unavailable: ${message}`);
    }
  }

  clear(): void {
    this.session.clear();
    this.view.renderInk(this.session);
    this.view.renderResult(null);
    this.view.showBanner(null);
  }
}

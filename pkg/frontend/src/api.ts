import type { InkStroke, ModelInfo, RecognizeResponse } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
    this.name = "ApiError";
  }
}

function isAbort(err: unknown): boolean {
  return err instanceof DOMException
    ? err.name === "AbortError"
    : err instanceof Error && err.name === "AbortError";
}

/**
 * Client for the recognition service. At most one recognition request is in
 * flight: starting a new one aborts the previous (newest wins), and an
 * aborted call resolves to null so stale results never reach the UI.
 */
export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post(path: string, body: unknown, signal?: AbortSignal): Promise<Response> {
    return this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  private static async fail(response: Response): Promise<never> {
    let detail = `${response.status}`;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* non-JSON error body; keep the status text */
    }
    throw new ApiError(detail, response.status);
  }

  /** Recognize the session ink; resolves null when superseded by a newer call. */
  async recognize(strokes: InkStroke[], topk = 5): Promise<RecognizeResponse | null> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await this.post("/recognize", { strokes, topk }, controller.signal);
      if (!response.ok) await ApiClient.fail(response);
      return (await response.json()) as RecognizeResponse;
    } catch (err) {
      if (isAbort(err)) return null;
      throw err;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  /** Dev-mode pass-through check: the server echoes the strokes it parsed. */
  async echo(strokes: InkStroke[]): Promise<InkStroke[]> {
    const response = await this.post("/echo", { strokes });
    if (!response.ok) await ApiClient.fail(response);
    const body = (await response.json()) as { strokes: InkStroke[] };
    return body.strokes;
  }

  async modelInfo(): Promise<ModelInfo> {
    const response = await this.fetchImpl(`${this.baseUrl}/model/info`);
    if (!response.ok) await ApiClient.fail(response);
    return (await response.json()) as ModelInfo;
  }
}

/** Wire types matching the recognition service. */

/** One pen sample: x, y, seconds since the first pen-down of the symbol. */
export type InkPoint = [number, number, number];

export type InkStroke = InkPoint[];

export interface RankedEntry {
  label: number;
  score: number;
}

export interface StrokeDiagnostic {
  stroke: number;
  region: string;
  template: string;
  delta: number;
}

export interface RecognizeResponse {
  ranked: RankedEntry[];
  rejected: boolean;
  per_stroke: StrokeDiagnostic[];
  shirorekha: number | null;
  model_version: number;
}

export interface ModelInfo {
  version: number;
  class_count: number;
  template_count: number;
  templates_per_class: Record<string, number>;
  config: Record<string, number>;
}

import { QuiverJson } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export interface PresetCatalog {
  names: string[];
  quivers: Record<string, QuiverJson>;
}

/** Thin wrapper over the JSON endpoints; the UI never computes mutations
 * itself, every matrix it holds came out of one of these calls. */
export class ApiClient {
  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    const init: RequestInit =
      body === undefined
        ? { method: "GET" }
        : {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
          };
    const resp = await this.fetchFn(this.base + path, init);
    let payload: any = null;
    try {
      payload = await resp.json();
    } catch {
      /* fall through to the status check */
    }
    if (!resp.ok) {
      const message = payload?.error ?? `HTTP ${resp.status}`;
      throw new ApiError(resp.status, message);
    }
    return payload as T;
  }

  async presets(): Promise<PresetCatalog> {
    const body = await this.request<{ presets: string[]; quivers: Record<string, QuiverJson> }>(
      "/api/presets",
    );
    return { names: body.presets, quivers: body.quivers };
  }

  async mutate(b: QuiverJson, k: number): Promise<QuiverJson> {
    const body = await this.request<{ b: QuiverJson }>("/api/mutate", { b, k });
    return body.b;
  }

  async period(b: QuiverJson, max?: number): Promise<number | null> {
    const payload: Record<string, unknown> = { b };
    if (max !== undefined) payload.max = max;
    const body = await this.request<{ period: number | null }>("/api/period", payload);
    return body.period;
  }

  async sequence(b: QuiverJson, terms: number): Promise<string[]> {
    const body = await this.request<{ terms: string[] }>("/api/sequence", { b, terms });
    return body.terms;
  }

  async decompose(b: QuiverJson): Promise<string> {
    const body = await this.request<{ report: string }>("/api/decompose", { b });
    return body.report;
  }

  async recurrence(b: QuiverJson): Promise<{ formula: string; period: number }> {
    return this.request("/api/recurrence", { b });
  }
}

import type {
  EntryPayload,
  Facet,
  ProjectionPayload,
  SearchResponse,
  StatsPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number, readonly code?: string) {
    super(message);
    this.name = "ApiError";
  }
}

/** Thin fetch wrapper over the lexicon API.
 *
 * Concurrent requests follow latest-query-wins: starting a new request
 * aborts any request still in flight on this client, and navigation
 * calls cancel() directly.
 */
export class ApiClient {
  private controller: AbortController | null = null;

  constructor(private readonly base: string = "") {}

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
  }

  private async get<T>(path: string): Promise<T> {
    this.cancel();
    this.controller = new AbortController();
    let response: Response;
    try {
      response = await fetch(this.base + path, { signal: this.controller.signal });
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") throw err;
      throw new ApiError(`service unreachable: ${String(err)}`, 0);
    }
    if (!response.ok) {
      let code: string | undefined;
      let message = `request failed with status ${response.status}`;
      try {
        const body = await response.json();
        code = body.code;
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep the generic message
      }
      throw new ApiError(message, response.status, code);
    }
    return response.json() as Promise<T>;
  }

  searchVerbs(q: string, by: Facet, offset = 0, limit = 50): Promise<SearchResponse> {
    const params = new URLSearchParams({
      q,
      by,
      offset: String(offset),
      limit: String(limit),
    });
    return this.get(`/api/verbs?${params}`);
  }

  entryDetail(lemma: string, homographId: string): Promise<EntryPayload> {
    return this.get(`/api/verbs/${encodeURIComponent(lemma)}/${encodeURIComponent(homographId)}`);
  }

  projections(
    lemma: string,
    homographId: string,
    senseKey: string,
    frameIndex: number,
  ): Promise<ProjectionPayload[]> {
    return this.get(
      `/api/verbs/${encodeURIComponent(lemma)}/${encodeURIComponent(homographId)}` +
        `/senses/${encodeURIComponent(senseKey)}/frames/${frameIndex}/projections`,
    );
  }

  stats(): Promise<StatsPayload> {
    return this.get("/api/stats");
  }
}

// HTTP client for the graph service. At most one graph request is in
// flight: issuing a new one aborts the previous.

import type { GraphParams, GraphResponse, MetaResponse, SearchResult } from "./types.js";

export class NotFound extends Error {}

export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(private base: string = "") {}

  graphUrl(params: GraphParams, format: "svg" | "json" = "json"): string {
    const query = new URLSearchParams({
      ego_type: params.ego_type,
      ego_id: params.ego_id,
      relation: params.relation,
      view: params.view,
      format,
    });
    if (params.k !== null) query.set("k", String(params.k));
    if (params.lens !== null) {
      query.set("lens_from", String(params.lens[0]));
      query.set("lens_to", String(params.lens[1]));
    }
    return `${this.base}/graph?${query.toString()}`;
  }

  async fetchGraph(params: GraphParams): Promise<GraphResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await fetch(this.graphUrl(params), {
        signal: controller.signal,
      });
      if (response.status === 404) {
        const body = (await response.json()) as { error?: string };
        throw new NotFound(body.error ?? "entity not found");
      }
      if (!response.ok) {
        const body = (await response.json()) as { error?: string };
        throw new Error(body.error ?? `request failed (${response.status})`);
      }
      return (await response.json()) as GraphResponse;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  async search(query: string, limit = 12): Promise<SearchResult[]> {
    const url = `${this.base}/search?${new URLSearchParams({
      q: query,
      limit: String(limit),
    })}`;
    const response = await fetch(url);
    if (!response.ok) return [];
    const body = (await response.json()) as { results: SearchResult[] };
    return body.results;
  }

  async meta(): Promise<MetaResponse> {
    const response = await fetch(`${this.base}/meta`);
    if (!response.ok) throw new Error(`meta failed (${response.status})`);
    return (await response.json()) as MetaResponse;
  }
}

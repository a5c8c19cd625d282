import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, NotFound } from "../src/api.js";
import type { GraphParams } from "../src/types.js";

const params: GraphParams = {
  ego_type: "person",
  ego_id: "Adam",
  relation: "coauthor",
  view: "timecolor",
  k: 10,
  lens: [44, 63],
};

function jsonResponse(body: unknown, status = 200) {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: () => Promise.resolve(body),
  } as Response;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("graphUrl", () => {
  it("encodes every parameter", () => {
    const url = new ApiClient().graphUrl(params);
    const query = new URL(url, "http://x").searchParams;
    expect(query.get("ego_type")).toBe("person");
    expect(query.get("ego_id")).toBe("Adam");
    expect(query.get("relation")).toBe("coauthor");
    expect(query.get("view")).toBe("timecolor");
    expect(query.get("k")).toBe("10");
    expect(query.get("lens_from")).toBe("44");
    expect(query.get("lens_to")).toBe("63");
    expect(query.get("format")).toBe("json");
  });

  it("omits unset lens and k", () => {
    const url = new ApiClient().graphUrl({ ...params, k: null, lens: null });
    const query = new URL(url, "http://x").searchParams;
    expect(query.get("k")).toBeNull();
    expect(query.get("lens_from")).toBeNull();
  });
});

describe("fetchGraph", () => {
  it("aborts the previous in-flight request", async () => {
    const fetchMock = vi.fn(
      (_url: string, init?: RequestInit) =>
        new Promise<Response>((resolve, reject) => {
          init?.signal?.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
          setTimeout(() => resolve(jsonResponse({ svg: "<svg/>" })), 20);
        }),
    );
    vi.stubGlobal("fetch", fetchMock);
    const client = new ApiClient();
    const first = client.fetchGraph(params);
    const second = client.fetchGraph({ ...params, ego_id: "Bob" });
    await expect(first).rejects.toHaveProperty("name", "AbortError");
    await expect(second).resolves.toHaveProperty("svg", "<svg/>");
    expect(fetchMock).toHaveBeenCalledTimes(2);
  });

  it("raises NotFound on 404", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(() => Promise.resolve(jsonResponse({ error: "unknown entity" }, 404))),
    );
    await expect(new ApiClient().fetchGraph(params)).rejects.toBeInstanceOf(
      NotFound,
    );
  });

  it("surfaces other errors with the server message", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(() => Promise.resolve(jsonResponse({ error: "bad lens" }, 400))),
    );
    await expect(new ApiClient().fetchGraph(params)).rejects.toThrow("bad lens");
  });
});

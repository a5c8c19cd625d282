import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { toggledView } from "../src/controls.js";
import type { GraphParams, GraphResponse } from "../src/types.js";

function loadFixture(name: string): GraphResponse {
  const raw = readFileSync(join(__dirname, "fixtures", name), "utf-8");
  return JSON.parse(raw) as GraphResponse;
}

function nodeCoordinates(svg: string): Map<string, string[]> {
  const doc = new DOMParser().parseFromString(svg, "image/svg+xml");
  const coords = new Map<string, string[]>();
  for (const node of Array.from(doc.querySelectorAll("g.node, g.node.ego, g.node.alter"))) {
    const id = `${node.getAttribute("data-entity-type")}:${node.getAttribute("data-entity-id")}`;
    const shape =
      node.querySelector("circle") ??
      node.querySelector("rect") ??
      node.querySelector("polygon");
    if (shape === null) continue;
    if (shape.tagName === "circle") {
      coords.set(id, [
        shape.getAttribute("cx") ?? "",
        shape.getAttribute("cy") ?? "",
        shape.getAttribute("r") ?? "",
      ]);
    } else if (shape.tagName === "rect") {
      coords.set(id, [
        shape.getAttribute("x") ?? "",
        shape.getAttribute("y") ?? "",
      ]);
    } else {
      coords.set(id, [shape.getAttribute("points") ?? ""]);
    }
  }
  return coords;
}

describe("view toggle", () => {
  const timecolor = loadFixture("adam_timecolor.json");
  const intensity = loadFixture("adam_intensity.json");

  it("uses the same graph for both fixtures", () => {
    expect(timecolor.ego.id).toBe(intensity.ego.id);
    expect(timecolor.alters.map((a) => a.id)).toEqual(
      intensity.alters.map((a) => a.id),
    );
  });

  it("leaves every node screen position unchanged (coordinate diff = 0)", () => {
    const before = nodeCoordinates(timecolor.svg);
    const after = nodeCoordinates(intensity.svg);
    expect(before.size).toBeGreaterThan(0);
    expect(after).toEqual(before);
  });

  it("model positions agree exactly across views", () => {
    expect(intensity.ego.position).toEqual(timecolor.ego.position);
    for (const [a, b] of timecolor.alters.map(
      (alter, i) => [alter, intensity.alters[i]] as const,
    )) {
      expect(b?.position).toEqual(a.position);
      expect(b?.edge).toEqual(a.edge);
    }
  });

  it("toggling the request preserves ego, relation, lens, and k", () => {
    const params: GraphParams = {
      ego_type: "person",
      ego_id: "Adam",
      relation: "coauthor",
      view: "timecolor",
      k: 10,
      lens: [44, 63],
    };
    const once = toggledView(params);
    expect(once.view).toBe("intensity");
    expect(once.ego_id).toBe(params.ego_id);
    expect(once.relation).toBe(params.relation);
    expect(once.lens).toEqual(params.lens);
    expect(once.k).toBe(params.k);
    expect(toggledView(once)).toEqual(params); // involution
  });
});

import { describe, expect, it } from "vitest";

import { checkLens, recentered, withK, withLens } from "../src/controls.js";
import type { GraphParams } from "../src/types.js";

const base: GraphParams = {
  ego_type: "person",
  ego_id: "Adam",
  relation: "coauthor",
  view: "timecolor",
  k: 10,
  lens: null,
};

describe("lens checking", () => {
  it("accepts a valid range", () => {
    expect(checkLens(0, 74, 75).ok).toBe(true);
    expect(checkLens(10, 10, 75).ok).toBe(true);
  });

  it("refuses an inverted range with a hint", () => {
    const check = checkLens(20, 10, 75);
    expect(check.ok).toBe(false);
    expect(check.hint).toMatch(/start/);
  });

  it("refuses out-of-frame periods", () => {
    expect(checkLens(-1, 10, 75).ok).toBe(false);
    expect(checkLens(0, 75, 75).ok).toBe(false);
  });

  it("refuses non-integer bounds", () => {
    expect(checkLens(1.5, 10, 75).ok).toBe(false);
  });
});

describe("request builders", () => {
  it("withLens sets and clears the lens without touching other fields", () => {
    const lensed = withLens(base, [5, 9]);
    expect(lensed.lens).toEqual([5, 9]);
    expect(lensed.ego_id).toBe("Adam");
    expect(withLens(lensed, null).lens).toBeNull();
  });

  it("withK validates", () => {
    expect(withK(base, 5).k).toBe(5);
    expect(() => withK(base, 0)).toThrow(RangeError);
    expect(() => withK(base, 2.5)).toThrow(RangeError);
  });

  it("recentered swaps the ego and relation, keeping view and lens", () => {
    const lensed = withLens(base, [3, 7]);
    const moved = recentered(lensed, "stream", "conf/icdt", "stream_word");
    expect(moved.ego_type).toBe("stream");
    expect(moved.ego_id).toBe("conf/icdt");
    expect(moved.relation).toBe("stream_word");
    expect(moved.view).toBe(lensed.view);
    expect(moved.lens).toEqual([3, 7]);
  });
});

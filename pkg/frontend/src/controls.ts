// Head-menu control logic kept separate from DOM wiring so it is testable.

import type { GraphParams } from "./types.js";
import { cloneParams } from "./state.js";

export interface LensCheck {
  ok: boolean;
  hint: string;
}

export function checkLens(
  from: number,
  to: number,
  periodCount: number,
): LensCheck {
  if (!Number.isInteger(from) || !Number.isInteger(to)) {
    return { ok: false, hint: "lens bounds must be whole periods" };
  }
  if (from < 0 || to >= periodCount) {
    return { ok: false, hint: `periods run 0 to ${periodCount - 1}` };
  }
  if (from > to) {
    return { ok: false, hint: "lens start must not be after its end" };
  }
  return { ok: true, hint: "" };
}

export function withLens(
  params: GraphParams,
  lens: [number, number] | null,
): GraphParams {
  const next = cloneParams(params);
  next.lens = lens === null ? null : [lens[0], lens[1]];
  return next;
}

export function withK(params: GraphParams, k: number): GraphParams {
  if (!Number.isInteger(k) || k < 1) {
    throw new RangeError("k must be a positive integer");
  }
  const next = cloneParams(params);
  next.k = k;
  return next;
}

/** Flip the view, preserving ego, relation, lens, and k. */
export function toggledView(params: GraphParams): GraphParams {
  const next = cloneParams(params);
  next.view = params.view === "timecolor" ? "intensity" : "timecolor";
  return next;
}

export function recentered(
  params: GraphParams,
  egoType: string,
  egoId: string,
  relation: string,
): GraphParams {
  const next = cloneParams(params);
  next.ego_type = egoType;
  next.ego_id = egoId;
  next.relation = relation;
  return next;
}

// UI state: the current request and a four-slot history of previous ones.

import type { GraphParams } from "./types.js";

export const HISTORY_LIMIT = 4;

export interface HistoryEntry {
  params: GraphParams;
  thumbnail: string; // the SVG markup that was displayed, scaled via viewport
}

export function cloneParams(params: GraphParams): GraphParams {
  return {
    ego_type: params.ego_type,
    ego_id: params.ego_id,
    relation: params.relation,
    view: params.view,
    k: params.k,
    lens: params.lens === null ? null : [params.lens[0], params.lens[1]],
  };
}

export function sameParams(a: GraphParams, b: GraphParams): boolean {
  return (
    a.ego_type === b.ego_type &&
    a.ego_id === b.ego_id &&
    a.relation === b.relation &&
    a.view === b.view &&
    a.k === b.k &&
    ((a.lens === null && b.lens === null) ||
      (a.lens !== null &&
        b.lens !== null &&
        a.lens[0] === b.lens[0] &&
        a.lens[1] === b.lens[1]))
  );
}

export class UiState {
  current: GraphParams | null = null;
  currentSvg = "";
  history: HistoryEntry[] = [];

  /** Record the displayed graph before navigating away from it. */
  pushCurrentToHistory(): void {
    if (this.current === null) return;
    this.history.unshift({
      params: cloneParams(this.current),
      thumbnail: this.currentSvg,
    });
    if (this.history.length > HISTORY_LIMIT) {
      this.history.length = HISTORY_LIMIT;
    }
  }

  /** The stored request of one history slot, for field-exact replay. */
  replay(index: number): GraphParams {
    const entry = this.history[index];
    if (entry === undefined) {
      throw new RangeError(`no history entry ${index}`);
    }
    return cloneParams(entry.params);
  }

  setCurrent(params: GraphParams, svg: string): void {
    this.current = cloneParams(params);
    this.currentSvg = svg;
  }
}

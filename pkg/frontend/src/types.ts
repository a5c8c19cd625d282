// Wire types of the graph service JSON API.

export interface GraphParams {
  ego_type: string;
  ego_id: string;
  relation: string;
  view: "timecolor" | "intensity";
  k: number | null;
  lens: [number, number] | null;
}

export interface RelationMenuEntry {
  name: string;
  label: string;
  targets: string[];
}

export interface SegmentInfo {
  period: number;
  offset: number;
  length: number;
  color: string | null;
  bin: number | null;
}

export interface EgoInfo {
  type: string;
  id: string;
  label: string;
  position: [number, number];
  radius: number;
  tooltip: string[];
  relations: RelationMenuEntry[];
  link: string | null;
}

export interface AlterInfo extends EgoInfo {
  relevance: number;
  rank: number;
  edge: [[number, number], [number, number]];
  segments: SegmentInfo[];
}

export interface BarCell {
  period: number;
  label: string;
  color: string;
}

export interface LegendCell {
  bin: number;
  label: string;
  color: string;
}

export interface GraphResponse {
  ego: EgoInfo;
  alters: AlterInfo[];
  relation: string;
  view: "timecolor" | "intensity";
  k: number;
  lens: [number, number];
  frame: { origin: number; period_length: number; period_count: number };
  relevant_periods: number[];
  bar: BarCell[];
  legend: LegendCell[] | null;
  canvas: { width: number; height: number };
  svg: string;
}

export interface SearchResult {
  type: string;
  id: string;
  label: string;
}

export interface MetaResponse {
  frame: { origin: number; period_length: number; period_count: number };
  period_labels: string[];
  entities: Record<string, { shape: string }>;
  relations: {
    name: string;
    label: string;
    sources: string[];
    targets: string[];
    rating: string;
  }[];
  defaults: { max_alters: number; view: string };
  color_anchors: [number, number][];
}

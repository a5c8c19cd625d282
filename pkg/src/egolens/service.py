"""Request pipeline: neighbors -> select -> layout -> views -> render.

GraphService answers graph, search, and metadata requests against one
immutable dataset and config. Responses are pure functions of the
request, so they are cached in a small thread-safe LRU keyed by the full
request.
"""

from __future__ import annotations

import json
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Mapping

from .adapters.base import AdapterContract
from .config import FillingRule, GraphConfig, RelationConfig
from .errors import ConfigError, NotFoundError, RequestError
from .layout import CanvasSpec, DEFAULT_CANVAS, LayoutResult, layout_ego_graph
from .model import EntityKey, EntityRecord, FillingSpec, TimeFrame
from .rating import RATING_FUNCTIONS, Lens, RankedAlter, full_lens, select_alters
from .render import render_graph
from .views import (
    HUE_ANCHORS,
    EdgeSegmentModel,
    IntensityScale,
    build_intensity_scale,
    intensity_segments,
    period_color,
    relevant_periods,
    time_color_segments,
)

__all__ = ["GraphRequest", "GraphService"]

SVG_TYPE = "image/svg+xml; charset=utf-8"
JSON_TYPE = "application/json; charset=utf-8"


@dataclass(frozen=True, slots=True)
class GraphRequest:
    """One graph request; hashable so responses can be cached by it."""

    ego_type: str
    ego_id: str
    relation: str
    view: str = "timecolor"
    k: int | None = None
    lens: tuple[int, int] | None = None
    format: str = "svg"


class _LruCache:
    """Tiny thread-safe LRU for rendered responses."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._items: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            if key not in self._items:
                return None
            self._items.move_to_end(key)
            return self._items[key]

    def put(self, key, value) -> None:
        if self.capacity < 1:
            return
        with self._lock:
            self._items[key] = value
            self._items.move_to_end(key)
            while len(self._items) > self.capacity:
                self._items.popitem(last=False)


class GraphService:
    """Serves graphs for one dataset under one configuration."""

    def __init__(
        self,
        dataset: AdapterContract,
        config: GraphConfig,
        canvas: CanvasSpec = DEFAULT_CANVAS,
        cache_size: int = 256,
    ):
        self.dataset = dataset
        self.config = config
        self.canvas = canvas
        self._cache = _LruCache(cache_size)
        for relation in config.relations.values():
            if relation.rating not in RATING_FUNCTIONS:
                raise ConfigError(
                    f"relation {relation.name!r} uses unregistered rating "
                    f"{relation.rating!r}"
                )

    # Graph ---------------------------------------------------------------

    def handle_graph(self, request: GraphRequest) -> tuple[bytes, str]:
        """(body, content type) for a graph request; cached per request."""
        cached = self._cache.get(request)
        if cached is not None:
            return cached
        response = self._build_graph(request)
        self._cache.put(request, response)
        return response

    def _relation_config(self, name: str) -> RelationConfig:
        try:
            return self.config.relations[name]
        except KeyError:
            raise RequestError(f"unknown relation {name!r}") from None

    def _build_graph(self, request: GraphRequest) -> tuple[bytes, str]:
        if request.view not in ("timecolor", "intensity"):
            raise RequestError(f"unknown view {request.view!r}")
        if request.format not in ("svg", "json"):
            raise RequestError(f"unknown format {request.format!r}")
        relation = self._relation_config(request.relation)
        ego_key = EntityKey(request.ego_type, request.ego_id)
        ego = self.dataset.entity(ego_key)
        frame = self.dataset.time_frame()

        if request.lens is None:
            lens = full_lens(frame)
        else:
            lens = Lens(request.lens[0], request.lens[1])
            lens.validate_for(frame)
        k = self.config.max_alters if request.k is None else request.k
        if k < 1:
            raise RequestError("k must be >= 1")

        neighbors = self.dataset.neighbors(ego_key, relation.data)
        labels = {n.alter: self.dataset.entity(n.alter).label for n in neighbors}
        alters = select_alters(
            neighbors, lens, k, RATING_FUNCTIONS[relation.rating], labels
        )

        if not alters:
            return self._ego_only(request, ego, frame, lens, k)

        records = {a.alter: self.dataset.entity(a.alter) for a in alters}
        layout = layout_ego_graph(alters, ego, list(records.values()), self.canvas)
        relevant = relevant_periods(alters)
        scale = None
        if request.view == "intensity":
            strengths = [s for a in alters for s in a.timeline.strengths if s > 0]
            scale = build_intensity_scale(strengths)
        segments: dict[EntityKey, EdgeSegmentModel] = {}
        for alter in alters:
            if request.view == "timecolor":
                segments[alter.alter] = time_color_segments(alter.timeline, relevant)
            else:
                segments[alter.alter] = intensity_segments(
                    alter.timeline, relevant, scale
                )

        fillings = self._fillings(ego, alters, records, relation, relevant)
        document = render_graph(
            layout,
            segments,
            ego,
            records,
            request.view,
            relevant,
            frame,
            scale=scale,
            shapes=self.config.shapes(),
            fillings=fillings,
        )
        if request.format == "svg":
            return document.markup.encode("utf-8"), SVG_TYPE
        payload = self._json_model(
            request, ego, alters, records, layout, segments, relevant, frame,
            scale, lens, k, document.markup,
        )
        return _dump_json(payload), JSON_TYPE

    def _ego_only(
        self,
        request: GraphRequest,
        ego: EntityRecord,
        frame: TimeFrame,
        lens: Lens,
        k: int,
    ) -> tuple[bytes, str]:
        """An ego with no relations still renders, as a single node."""
        radius = self.canvas.max_node_radius
        layout = LayoutResult(
            ego_position=(
                self.canvas.width / 2,
                self.canvas.height - self.canvas.margin - radius,
            ),
            ego_radius=radius,
            nodes=(),
            canvas=self.canvas,
        )
        fillings = {ego.key: self._resolve_filling(
            self.config.entity_config(ego.key.type_name).filling, ego, None, ()
        )}
        document = render_graph(
            layout, {}, ego, {}, request.view, (), frame,
            shapes=self.config.shapes(), fillings=fillings,
        )
        if request.format == "svg":
            return document.markup.encode("utf-8"), SVG_TYPE
        payload = self._json_model(
            request, ego, [], {}, layout, {}, (), frame, None, lens, k,
            document.markup,
        )
        return _dump_json(payload), JSON_TYPE

    # Fillings ------------------------------------------------------------

    def _resolve_filling(
        self,
        rule: FillingRule,
        record: EntityRecord,
        relevance: float | None,
        relevant: tuple[int, ...],
    ) -> FillingSpec:
        if rule.name == "entity":
            return record.filling
        if rule.name == "none":
            return FillingSpec("none")
        if rule.name == "solid":
            return FillingSpec("solid", color=rule.color)
        if rule.name == "fraction":
            if relevance is None:
                return record.filling
            if record.size_value <= 0:
                d = 1.0
            else:
                d = min(1.0, relevance / record.size_value)
            return FillingSpec("fraction", fraction=d, color=rule.color)
        if rule.name == "presence":
            if not relevant:
                return record.filling
            booleans = tuple(p in record.activity_periods for p in relevant)
            return FillingSpec("presence", booleans=booleans, color=rule.color)
        raise ConfigError(f"unknown filling rule {rule.name!r}")

    def _fillings(
        self,
        ego: EntityRecord,
        alters: list[RankedAlter],
        records: Mapping[EntityKey, EntityRecord],
        relation: RelationConfig,
        relevant: tuple[int, ...],
    ) -> dict[EntityKey, FillingSpec]:
        fillings: dict[EntityKey, FillingSpec] = {}
        ego_rule = self.config.entity_config(ego.key.type_name).filling
        fillings[ego.key] = self._resolve_filling(ego_rule, ego, None, relevant)
        for alter in alters:
            record = records[alter.alter]
            rule = relation.alter_filling
            if rule is None:
                rule = self.config.entity_config(alter.alter.type_name).filling
            fillings[alter.alter] = self._resolve_filling(
                rule, record, alter.relevance, relevant
            )
        return fillings

    # JSON model ----------------------------------------------------------

    def _menu(self, type_name: str) -> list[dict]:
        return [
            {"name": r.name, "label": r.label, "targets": list(r.targets)}
            for r in self.config.relations_from(type_name)
        ]

    def _link(self, record: EntityRecord) -> str | None:
        template = self.config.entity_config(record.key.type_name).link
        if template is None:
            return None
        return template.format(
            id=record.key.id, label=record.label, type=record.key.type_name
        )

    def _json_model(
        self,
        request: GraphRequest,
        ego: EntityRecord,
        alters: list[RankedAlter],
        records: Mapping[EntityKey, EntityRecord],
        layout: LayoutResult,
        segments: Mapping[EntityKey, EdgeSegmentModel],
        relevant: tuple[int, ...],
        frame: TimeFrame,
        scale: IntensityScale | None,
        lens: Lens,
        k: int,
        markup: str,
    ) -> dict:
        nodes_by_key = {node.alter: node for node in layout.nodes}
        alter_rows = []
        for alter in alters:
            record = records[alter.alter]
            node = nodes_by_key[alter.alter]
            alter_rows.append(
                {
                    "type": record.key.type_name,
                    "id": record.key.id,
                    "label": record.label,
                    "relevance": alter.relevance,
                    "rank": alter.rank,
                    "position": list(node.position),
                    "radius": node.node_radius,
                    "edge": [list(node.edge_start), list(node.edge_end)],
                    "tooltip": list(record.tooltip_lines),
                    "relations": self._menu(record.key.type_name),
                    "link": self._link(record),
                    "segments": [
                        {
                            "period": seg.period,
                            "offset": seg.offset,
                            "length": seg.length,
                            "color": seg.color.to_hex() if seg.color else None,
                            "bin": seg.bin,
                        }
                        for seg in segments[alter.alter].segments
                    ],
                }
            )
        bar = [
            {
                "period": period,
                "label": frame.period_label(period),
                "color": period_color(period, relevant).to_hex(),
            }
            for period in relevant
        ]
        legend = None
        if scale is not None:
            legend = [
                {"bin": i, "label": scale.bin_label(i), "color": color.to_hex()}
                for i, color in enumerate(scale.bin_colors)
            ]
        return {
            "ego": {
                "type": ego.key.type_name,
                "id": ego.key.id,
                "label": ego.label,
                "position": list(layout.ego_position),
                "radius": layout.ego_radius,
                "tooltip": list(ego.tooltip_lines),
                "relations": self._menu(ego.key.type_name),
                "link": self._link(ego),
            },
            "alters": alter_rows,
            "relation": request.relation,
            "view": request.view,
            "k": k,
            "lens": [lens.from_period, lens.to_period],
            "frame": {
                "origin": frame.origin,
                "period_length": frame.period_length,
                "period_count": frame.period_count,
            },
            "relevant_periods": list(relevant),
            "bar": bar,
            "legend": legend,
            "canvas": {"width": layout.canvas.width, "height": layout.canvas.height},
            "svg": markup,
        }

    # Search and metadata --------------------------------------------------

    def handle_search(self, query: str, limit: int = 20) -> list[dict]:
        if not query or not query.strip():
            raise RequestError("empty search query")
        if limit < 1:
            raise RequestError("limit must be >= 1")
        rows = []
        for key in self.dataset.search(query, limit):
            record = self.dataset.entity(key)
            rows.append(
                {"type": key.type_name, "id": key.id, "label": record.label}
            )
        return rows

    def meta(self) -> dict:
        frame = self.dataset.time_frame()
        return {
            "frame": {
                "origin": frame.origin,
                "period_length": frame.period_length,
                "period_count": frame.period_count,
            },
            "period_labels": [
                frame.period_label(i) for i in range(frame.period_count)
            ],
            "entities": {
                name: {"shape": cfg.shape}
                for name, cfg in sorted(self.config.entities.items())
            },
            "relations": [
                {
                    "name": r.name,
                    "label": r.label,
                    "sources": list(r.sources),
                    "targets": list(r.targets),
                    "rating": r.rating,
                }
                for r in self.config.relations.values()
            ],
            "defaults": {"max_alters": self.config.max_alters, "view": self.config.view},
            "color_anchors": [list(anchor) for anchor in HUE_ANCHORS],
        }


def _dump_json(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")

"""Geometry of the inverted ego graph.

The ego sits at the bottom center of the canvas and the alters fan out
above it on straight edges. Edge length grows linearly with relevance, so
the most relevant alter is drawn farthest from the ego where its edge has
the most room for temporal segments. Alters are assigned fan angles in
rank order, alternating around the vertical so the longest edges stay
central.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyGraphError
from .model import EntityKey, EntityRecord
from .rating import RankedAlter

__all__ = [
    "CanvasSpec",
    "PlacedNode",
    "LayoutResult",
    "DEFAULT_CANVAS",
    "layout_ego_graph",
    "fan_angles",
]

FAN_MIN_DEG = 30.0
FAN_MAX_DEG = 150.0


@dataclass(frozen=True, slots=True)
class CanvasSpec:
    """Abstract drawing area and the edge/node size ranges used inside it."""

    width: float = 1200.0
    height: float = 800.0
    margin: float = 20.0
    min_edge_length: float = 120.0
    max_edge_length: float = 520.0
    min_node_radius: float = 8.0
    max_node_radius: float = 26.0

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas width and height must be positive")
        if self.margin < 0:
            raise ValueError("canvas margin must be non-negative")
        if not 0 < self.min_edge_length < self.max_edge_length:
            raise ValueError("need 0 < min_edge_length < max_edge_length")
        if not 0 < self.min_node_radius <= self.max_node_radius:
            raise ValueError("need 0 < min_node_radius <= max_node_radius")
        # Worst case reach: ego and alter at maximum radius joined by the
        # longest edge, straight up or at the flattest fan angle.
        reach = 2 * self.max_node_radius + self.max_edge_length
        vertical = 2 * self.margin + 2 * self.max_node_radius + reach
        if vertical > self.height:
            raise ValueError(
                f"canvas height {self.height} cannot contain the longest "
                f"edge (needs {vertical})"
            )
        flat = math.cos(math.radians(FAN_MIN_DEG))
        horizontal = 2 * (self.margin + flat * reach + self.max_node_radius)
        if horizontal > self.width:
            raise ValueError(
                f"canvas width {self.width} cannot contain the widest fan "
                f"(needs {horizontal})"
            )


DEFAULT_CANVAS = CanvasSpec()


@dataclass(frozen=True, slots=True)
class PlacedNode:
    """One laid-out alter: position, visible edge, radius, and fan angle."""

    alter: EntityKey
    position: tuple[float, float]
    edge_start: tuple[float, float]
    edge_end: tuple[float, float]
    edge_length: float
    node_radius: float
    angle: float


@dataclass(frozen=True, slots=True)
class LayoutResult:
    ego_position: tuple[float, float]
    ego_radius: float
    nodes: tuple[PlacedNode, ...]
    canvas: CanvasSpec


def fan_angles(count: int) -> list[float]:
    """Fan angles in rank order: most central first, alternating sides.

    The fan spans [30, 150] degrees measured from the ego with 90 pointing
    straight up. Slots are equally spaced; rank 1 takes the slot closest
    to 90, later ranks alternate outwards. A single alter sits at 90.
    """
    if count < 1:
        raise ValueError("need at least one alter")
    if count == 1:
        return [90.0]
    step = (FAN_MAX_DEG - FAN_MIN_DEG) / (count - 1)
    slots = [FAN_MIN_DEG + i * step for i in range(count)]
    ordered = sorted(slots, key=lambda a: (abs(a - 90.0), a))
    return ordered


def _edge_length(relevance: float, r_min: float, r_max: float, canvas: CanvasSpec) -> float:
    if r_max == r_min:
        return canvas.max_edge_length
    t = (relevance - r_min) / (r_max - r_min)
    # Endpoints are returned exactly so rank 1 always gets max_edge_length.
    if t >= 1.0:
        return canvas.max_edge_length
    if t <= 0.0:
        return canvas.min_edge_length
    return canvas.min_edge_length + (canvas.max_edge_length - canvas.min_edge_length) * t


def _node_radius(size_value: float, s_min: float, s_max: float, canvas: CanvasSpec) -> float:
    if s_max == s_min:
        return canvas.max_node_radius
    t = (size_value - s_min) / (s_max - s_min)
    if t >= 1.0:
        return canvas.max_node_radius
    if t <= 0.0:
        return canvas.min_node_radius
    return canvas.min_node_radius + (canvas.max_node_radius - canvas.min_node_radius) * t


def layout_ego_graph(
    alters: list[RankedAlter],
    ego: EntityRecord,
    alter_records: list[EntityRecord],
    canvas: CanvasSpec = DEFAULT_CANVAS,
) -> LayoutResult:
    """Place the ego and its ranked alters on the canvas.

    Edge lengths map relevance linearly onto [min_edge_length,
    max_edge_length] over the relevance range present in this graph; a
    degenerate range gives every alter the maximum length. Node radii map
    size_value the same way over the sizes present (ego included).
    """
    if not alters:
        raise EmptyGraphError(f"no alters selected for ego {ego.key}")
    records = {record.key: record for record in alter_records}
    missing = [a.alter for a in alters if a.alter not in records]
    if missing:
        raise KeyError(f"missing entity records for {missing}")

    sizes = [ego.size_value] + [records[a.alter].size_value for a in alters]
    s_min, s_max = min(sizes), max(sizes)
    scores = [a.relevance for a in alters]
    r_min, r_max = min(scores), max(scores)

    ego_radius = _node_radius(ego.size_value, s_min, s_max, canvas)
    ego_x = canvas.width / 2.0
    ego_y = canvas.height - canvas.margin - ego_radius

    nodes = []
    ranked = sorted(alters, key=lambda a: a.rank)
    for alter, angle in zip(ranked, fan_angles(len(ranked))):
        radius = _node_radius(records[alter.alter].size_value, s_min, s_max, canvas)
        length = _edge_length(alter.relevance, r_min, r_max, canvas)
        # Screen y grows downward; the fan opens upward from the ego.
        dx = math.cos(math.radians(angle))
        dy = -math.sin(math.radians(angle))
        start = (ego_x + dx * ego_radius, ego_y + dy * ego_radius)
        end = (start[0] + dx * length, start[1] + dy * length)
        center = (end[0] + dx * radius, end[1] + dy * radius)
        nodes.append(
            PlacedNode(
                alter=alter.alter,
                position=center,
                edge_start=start,
                edge_end=end,
                edge_length=length,
                node_radius=radius,
                angle=angle,
            )
        )
    return LayoutResult(
        ego_position=(ego_x, ego_y),
        ego_radius=ego_radius,
        nodes=tuple(nodes),
        canvas=canvas,
    )

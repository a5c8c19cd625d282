"""Self-contained SVG documents for ego graphs.

Emits edges as stroked segment sub-lines, shaped and filled nodes, the
bottom period bar, and (in the intensity view) the bin legend. The markup
is deterministic byte for byte: fixed float formatting, fixed element
order, and sequentially numbered clip-path ids. Interactivity hooks are
plain data attributes (data-entity-type, data-entity-id, data-period,
data-bin); no script is embedded unless explicitly requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

from .errors import ConsistencyError, FillingSpecError
from .layout import LayoutResult
from .model import EntityKey, EntityRecord, FillingSpec, TimeFrame
from .views import EdgeSegmentModel, IntensityScale, period_color

__all__ = [
    "SHAPES",
    "SvgDocument",
    "validate_filling",
    "pie_sector_angles",
    "render_filling",
    "render_graph",
]

SHAPES = ("circle", "rounded-rectangle", "triangle")

EDGE_STROKE_WIDTH = 5.0
NODE_STROKE = "#333333"
NODE_STROKE_WIDTH = 1.5
LABEL_FONT = "font-family=\"sans-serif\" font-size=\"11\""
GAP_COLOR = "#ffffff"
DEFAULT_FILL_COLOR = "#3674b5"
ROUNDED_CORNER = 0.35  # corner radius as a fraction of the node radius
PIE_COVER = 1.5  # sector radius as a fraction of the node radius
BAR_HEIGHT = 12.0
BAR_MAX_CELL = 24.0
LEGEND_CELL_W = 16.0
LEGEND_CELL_H = 12.0
LEGEND_ROW = 16.0
LEGEND_WIDTH = 86.0

HOVER_SCRIPT = (
    "document.documentElement.addEventListener('mouseover',function(e){"
    "var k=e.target.getAttribute('data-period');if(k===null)return;"
    "document.querySelectorAll('[data-period=\"'+k+'\"]').forEach(function(el){"
    "el.setAttribute('data-w',el.getAttribute('stroke-width'));"
    "el.setAttribute('stroke-width',2*parseFloat(el.getAttribute('stroke-width')));});});"
    "document.documentElement.addEventListener('mouseout',function(e){"
    "var k=e.target.getAttribute('data-period');if(k===null)return;"
    "document.querySelectorAll('[data-period=\"'+k+'\"]').forEach(function(el){"
    "var w=el.getAttribute('data-w');if(w)el.setAttribute('stroke-width',w);});});"
)


@dataclass(frozen=True, slots=True)
class SvgDocument:
    markup: str
    width: float
    height: float


def fmt(value: float) -> str:
    """Fixed two-decimal float formatting with trailing zeros stripped."""
    if value == 0:
        value = 0.0
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text if text else "0"


def _attr(value: str) -> str:
    return escape(value, {'"': "&quot;"})


def validate_filling(spec: FillingSpec) -> None:
    """Reject fillings with invalid or missing parameters."""
    if spec.variant == "solid" and not spec.color:
        raise FillingSpecError("solid filling needs a color")
    if spec.variant == "fraction":
        if spec.fraction is None or not 0 <= spec.fraction <= 1:
            raise FillingSpecError(
                f"fraction filling needs d in [0, 1], got {spec.fraction}"
            )
    if spec.variant == "pie":
        if not spec.weights:
            raise FillingSpecError("pie filling needs at least one weight")
        for color, weight in spec.weights:
            if weight <= 0:
                raise FillingSpecError(f"pie weight for {color!r} must be positive")
    if spec.variant == "timecolor" and not spec.colors:
        raise FillingSpecError("timecolor filling needs at least one color")
    if spec.variant == "presence" and not spec.booleans:
        raise FillingSpecError("presence filling needs at least one boolean")


def pie_sector_angles(weights: Sequence[float]) -> list[tuple[float, float]]:
    """(start, sweep) degrees per sector, clockwise from 12 o'clock."""
    total = sum(weights)
    if total <= 0:
        raise FillingSpecError("sector weights must sum to a positive value")
    sectors = []
    start = 0.0
    for weight in weights:
        sweep = 360.0 * weight / total
        sectors.append((start, sweep))
        start += sweep
    return sectors


def _shape_element(kind: str, cx: float, cy: float, r: float, extra: str = "") -> str:
    if kind == "circle":
        return f'<circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(r)}"{extra}/>'
    if kind == "rounded-rectangle":
        return (
            f'<rect x="{fmt(cx - r)}" y="{fmt(cy - r)}" width="{fmt(2 * r)}" '
            f'height="{fmt(2 * r)}" rx="{fmt(ROUNDED_CORNER * r)}"{extra}/>'
        )
    if kind == "triangle":
        half = r * math.cos(math.radians(30))
        points = (
            f"{fmt(cx)},{fmt(cy - r)} "
            f"{fmt(cx + half)},{fmt(cy + r / 2)} "
            f"{fmt(cx - half)},{fmt(cy + r / 2)}"
        )
        return f'<polygon points="{points}"{extra}/>'
    raise ValueError(f"unknown node shape {kind!r}")


def _shape_bbox(kind: str, cx: float, cy: float, r: float) -> tuple[float, float, float, float]:
    if kind == "triangle":
        half = r * math.cos(math.radians(30))
        return (cx - half, cy - r, cx + half, cy + r / 2)
    return (cx - r, cy - r, cx + r, cy + r)


def _sector_path(cx: float, cy: float, r: float, start: float, sweep: float) -> str:
    a0 = math.radians(start)
    a1 = math.radians(start + sweep)
    x0, y0 = cx + r * math.sin(a0), cy - r * math.cos(a0)
    x1, y1 = cx + r * math.sin(a1), cy - r * math.cos(a1)
    large = 1 if sweep > 180 else 0
    return (
        f"M {fmt(cx)} {fmt(cy)} L {fmt(x0)} {fmt(y0)} "
        f"A {fmt(r)} {fmt(r)} 0 {large} 1 {fmt(x1)} {fmt(y1)} Z"
    )


def render_filling(
    spec: FillingSpec,
    shape: str,
    radius: float,
    cx: float = 0.0,
    cy: float = 0.0,
    clip_id: str | None = None,
) -> str:
    """SVG fragment painting one node interior, clipped to the shape.

    Orientation choices are fixed: fraction fills bottom-up, presence
    stripes run left to right, pie and timecolor sectors start at
    12 o'clock and proceed clockwise in listed order.
    """
    validate_filling(spec)
    if spec.variant == "none":
        return ""
    clip = f' clip-path="url(#{clip_id})"' if clip_id else ""
    x0, y0, x1, y1 = _shape_bbox(shape, cx, cy, radius)

    if spec.variant == "solid":
        return _shape_element(shape, cx, cy, radius, f' fill="{_attr(spec.color)}"')

    if spec.variant == "fraction":
        d = spec.fraction
        if d == 0:
            return ""
        color = spec.color or DEFAULT_FILL_COLOR
        height = (y1 - y0) * d
        return (
            f'<rect x="{fmt(x0)}" y="{fmt(y1 - height)}" width="{fmt(x1 - x0)}" '
            f'height="{fmt(height)}" fill="{_attr(color)}"{clip}/>'
        )

    if spec.variant in ("pie", "timecolor"):
        if spec.variant == "pie":
            colors = [color for color, _ in spec.weights]
            weights = [weight for _, weight in spec.weights]
        else:
            colors = list(spec.colors)
            weights = [1.0] * len(spec.colors)
        if len(colors) == 1:
            return _shape_element(shape, cx, cy, radius, f' fill="{_attr(colors[0])}"')
        cover = radius * PIE_COVER
        parts = []
        for color, (start, sweep) in zip(colors, pie_sector_angles(weights)):
            path = _sector_path(cx, cy, cover, start, sweep)
            parts.append(f'<path d="{path}" fill="{_attr(color)}"{clip}/>')
        return "".join(parts)

    if spec.variant == "presence":
        color = spec.color or DEFAULT_FILL_COLOR
        width = (x1 - x0) / len(spec.booleans)
        parts = []
        for i, present in enumerate(spec.booleans):
            if not present:
                continue
            parts.append(
                f'<rect x="{fmt(x0 + i * width)}" y="{fmt(y0)}" width="{fmt(width)}" '
                f'height="{fmt(y1 - y0)}" fill="{_attr(color)}"{clip}/>'
            )
        return "".join(parts)

    raise FillingSpecError(f"unknown filling variant {spec.variant!r}")


def _needs_clip(spec: FillingSpec) -> bool:
    if spec.variant in ("fraction", "presence"):
        return True
    if spec.variant == "pie":
        return len(spec.weights) > 1
    if spec.variant == "timecolor":
        return len(spec.colors) > 1
    return False


def _node_markup(
    record: EntityRecord,
    shape: str,
    cx: float,
    cy: float,
    radius: float,
    filling: FillingSpec,
    clip_id: str,
    css_class: str,
    label_above: bool,
) -> tuple[str, str]:
    """(defs fragment, node group fragment) for one node."""
    defs = ""
    if _needs_clip(filling):
        defs = (
            f'<clipPath id="{clip_id}">'
            + _shape_element(shape, cx, cy, radius)
            + "</clipPath>"
        )
    parts = [
        f'<g class="{css_class}" data-entity-type="{_attr(record.key.type_name)}" '
        f'data-entity-id="{_attr(record.key.id)}">'
    ]
    if record.tooltip_lines:
        parts.append(f"<title>{escape(chr(10).join(record.tooltip_lines))}</title>")
    parts.append(_shape_element(shape, cx, cy, radius, ' fill="#ffffff"'))
    parts.append(render_filling(filling, shape, radius, cx, cy, clip_id))
    parts.append(
        _shape_element(
            shape,
            cx,
            cy,
            radius,
            f' fill="none" stroke="{NODE_STROKE}" stroke-width="{fmt(NODE_STROKE_WIDTH)}"',
        )
    )
    ly = cy - radius - 5 if label_above else cy + radius + 13
    parts.append(
        f'<text x="{fmt(cx)}" y="{fmt(ly)}" text-anchor="middle" '
        f"{LABEL_FONT}>{escape(record.label)}</text>"
    )
    parts.append("</g>")
    return defs, "".join(parts)


def _segment_line(
    start: tuple[float, float],
    end: tuple[float, float],
    offset: float,
    length: float,
    color: str,
    period: int,
    bin_index: int | None,
) -> str:
    x0 = start[0] + (end[0] - start[0]) * offset
    y0 = start[1] + (end[1] - start[1]) * offset
    x1 = start[0] + (end[0] - start[0]) * (offset + length)
    y1 = start[1] + (end[1] - start[1]) * (offset + length)
    data = f' data-period="{period}"'
    if bin_index is not None:
        data += f' data-bin="{bin_index}"'
    return (
        f'<line x1="{fmt(x0)}" y1="{fmt(y0)}" x2="{fmt(x1)}" y2="{fmt(y1)}" '
        f'stroke="{color}" stroke-width="{fmt(EDGE_STROKE_WIDTH)}"{data}/>'
    )


def render_graph(
    layout: LayoutResult,
    segments: Mapping[EntityKey, EdgeSegmentModel],
    ego: EntityRecord,
    alter_records: Mapping[EntityKey, EntityRecord],
    view: str,
    relevant: Sequence[int],
    frame: TimeFrame,
    scale: IntensityScale | None = None,
    shapes: Mapping[str, str] | None = None,
    fillings: Mapping[EntityKey, FillingSpec] | None = None,
    embed_hover_script: bool = False,
) -> SvgDocument:
    """Render one ego graph (or an ego-only drawing) to SVG markup.

    Paint order: edges, nodes, bottom bar, then the legend in the
    intensity view. ``fillings`` overrides the per-record filling (used
    for graph-dependent fillings like fraction-of-joint-work); ``shapes``
    maps entity types to node shapes, defaulting to circles.
    """
    if view not in ("timecolor", "intensity"):
        raise ValueError(f"unknown view {view!r}")
    if view == "intensity" and layout.nodes and scale is None:
        raise ValueError("intensity view needs an intensity scale")
    laid_out = {node.alter for node in layout.nodes}
    if laid_out != set(segments):
        raise ConsistencyError(
            "segment models and layout disagree about the alter set"
        )
    missing = laid_out - set(alter_records)
    if missing:
        raise ConsistencyError(f"missing entity records for {sorted(missing, key=str)}")

    shapes = shapes or {}
    fillings = fillings or {}
    canvas = layout.canvas
    width, height = canvas.width, canvas.height

    defs_parts: list[str] = []
    edge_parts: list[str] = []
    node_parts: list[str] = []

    def shape_of(key: EntityKey) -> str:
        kind = shapes.get(key.type_name, "circle")
        if kind not in SHAPES:
            raise ValueError(f"unknown node shape {kind!r} for {key.type_name}")
        return kind

    for node in layout.nodes:
        model = segments[node.alter]
        record = alter_records[node.alter]
        lines = [
            f'<g class="edge" data-entity-type="{_attr(record.key.type_name)}" '
            f'data-entity-id="{_attr(record.key.id)}">'
        ]
        for seg in model.segments:
            color = seg.color.to_hex() if seg.color is not None else GAP_COLOR
            lines.append(
                _segment_line(
                    node.edge_start,
                    node.edge_end,
                    seg.offset,
                    seg.length,
                    color,
                    seg.period,
                    seg.bin,
                )
            )
        lines.append("</g>")
        edge_parts.append("".join(lines))

    ego_filling = fillings.get(ego.key, ego.filling)
    defs, markup = _node_markup(
        ego,
        shape_of(ego.key),
        layout.ego_position[0],
        layout.ego_position[1],
        layout.ego_radius,
        ego_filling,
        "clip-0",
        "node ego",
        label_above=False,
    )
    if defs:
        defs_parts.append(defs)
    node_parts.append(markup)

    for i, node in enumerate(layout.nodes, start=1):
        record = alter_records[node.alter]
        filling = fillings.get(node.alter, record.filling)
        defs, markup = _node_markup(
            record,
            shape_of(node.alter),
            node.position[0],
            node.position[1],
            node.node_radius,
            filling,
            f"clip-{i}",
            "node alter",
            label_above=True,
        )
        if defs:
            defs_parts.append(defs)
        node_parts.append(markup)

    bar_parts: list[str] = []
    if layout.nodes and relevant:
        cell_w = min(BAR_MAX_CELL, (width - 2 * canvas.margin) / len(relevant))
        bar_w = cell_w * len(relevant)
        bar_x = (width - bar_w) / 2
        bar_y = height - BAR_HEIGHT - 2
        bar_parts.append('<g class="bottom-bar">')
        for i, period in enumerate(relevant):
            color = period_color(period, relevant).to_hex()
            label = frame.period_label(period)
            bar_parts.append(
                f'<rect x="{fmt(bar_x + i * cell_w)}" y="{fmt(bar_y)}" '
                f'width="{fmt(cell_w)}" height="{fmt(BAR_HEIGHT)}" fill="{color}" '
                f'stroke="#222222" stroke-width="1" data-period="{period}" '
                f'data-label="{_attr(label)}"><title>{escape(label)}</title></rect>'
            )
        bar_parts.append("</g>")

    legend_parts: list[str] = []
    if view == "intensity" and layout.nodes and scale is not None:
        lx = width - canvas.margin - LEGEND_WIDTH
        ly = canvas.margin
        legend_parts.append('<g class="legend">')
        for i, color in enumerate(scale.bin_colors):
            y = ly + i * LEGEND_ROW
            label = scale.bin_label(i)
            legend_parts.append(
                f'<rect x="{fmt(lx)}" y="{fmt(y)}" width="{fmt(LEGEND_CELL_W)}" '
                f'height="{fmt(LEGEND_CELL_H)}" fill="{color.to_hex()}" '
                f'stroke="#222222" stroke-width="1" data-bin="{i}"/>'
            )
            legend_parts.append(
                f'<text x="{fmt(lx + LEGEND_CELL_W + 5)}" y="{fmt(y + LEGEND_CELL_H - 2)}" '
                f"{LABEL_FONT} data-bin=\"{i}\">{escape(label)}</text>"
            )
        legend_parts.append("</g>")

    pieces = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(width)}" '
        f'height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}" '
        f'data-view="{view}">'
    ]
    if defs_parts:
        pieces.append("<defs>" + "".join(defs_parts) + "</defs>")
    pieces.append(
        f'<rect class="background" x="0" y="0" width="{fmt(width)}" '
        f'height="{fmt(height)}" fill="#ffffff"/>'
    )
    if edge_parts:
        pieces.append('<g class="edges">' + "".join(edge_parts) + "</g>")
    pieces.append('<g class="nodes">' + "".join(node_parts) + "</g>")
    pieces.extend(bar_parts)
    pieces.extend(legend_parts)
    if embed_hover_script:
        pieces.append(f"<script><![CDATA[{HOVER_SCRIPT}]]></script>")
    pieces.append("</svg>")
    return SvgDocument(markup="".join(pieces), width=width, height=height)

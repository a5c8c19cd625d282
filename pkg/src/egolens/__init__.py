"""Ego-centered, time-aware relation graphs.

Splits any entity/relation dataset with integer time stamps into small
inverted ego graphs whose edges encode when and how strongly each
relation evolved, renders them as SVG, and serves them over HTTP for
interactive browsing.
"""

from .model import (
    EntityKey,
    EntityRecord,
    FillingSpec,
    RelationInstance,
    TimeFrame,
    Timeline,
    build_time_frame,
    period_of,
    timeline_from_stamps,
)
from .rating import Lens, RankedAlter, full_lens, relevance, select_alters
from .layout import CanvasSpec, LayoutResult, layout_ego_graph
from .views import (
    Color,
    EdgeSegmentModel,
    IntensityScale,
    build_intensity_scale,
    intensity_segments,
    period_color,
    relevant_periods,
    time_color_segments,
)
from .render import SvgDocument, render_filling, render_graph

__version__ = "0.1.0"

"""Edge-segment models for the two time views, plus their color scales.

The time-color view gives each influencing period one equal-length
segment colored by the period's position in time (purple for the oldest,
red for the newest). The intensity view gives every edge one segment per
globally relevant period, colored blue-to-red by strength, white where
the period had no influence. Both views consume the same layout; only
the edge content differs.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyTimelineError, NotRelevantError
from .model import Timeline
from .rating import RankedAlter

__all__ = [
    "Color",
    "EdgeSegment",
    "EdgeSegmentModel",
    "IntensityScale",
    "HUE_ANCHORS",
    "period_color",
    "relevant_periods",
    "time_color_segments",
    "build_intensity_scale",
    "intensity_segments",
]

# Piecewise-linear hue path purple -> blue -> green -> yellow -> orange -> red,
# anchored at equal steps of the normalized time position p.
HUE_ANCHORS: tuple[tuple[float, float], ...] = (
    (0.0, 280.0),
    (0.2, 240.0),
    (0.4, 120.0),
    (0.6, 60.0),
    (0.8, 30.0),
    (1.0, 0.0),
)

TIME_SATURATION = 0.85
TIME_LIGHTNESS = 0.5

INTENSITY_HUE_LOW = 240.0  # blue, weakest bin
INTENSITY_HUE_HIGH = 0.0  # red, strongest bin


@dataclass(frozen=True, slots=True)
class Color:
    """HSL color; serialized to 24-bit RGB hex only at render time."""

    hue: float
    saturation: float
    lightness: float

    def __post_init__(self) -> None:
        if not 0 <= self.hue < 360:
            raise ValueError(f"hue {self.hue} outside [0, 360)")
        if not 0 <= self.saturation <= 1:
            raise ValueError("saturation outside [0, 1]")
        if not 0 <= self.lightness <= 1:
            raise ValueError("lightness outside [0, 1]")

    def to_hex(self) -> str:
        r, g, b = colorsys.hls_to_rgb(
            self.hue / 360.0, self.lightness, self.saturation
        )
        return "#{:02x}{:02x}{:02x}".format(
            round(r * 255), round(g * 255), round(b * 255)
        )


@dataclass(frozen=True, slots=True)
class EdgeSegment:
    """One edge segment: where it sits along the edge and how it is painted.

    Offsets and lengths are fractions of the edge measured from the ego;
    ``color`` is None for a white gap (intensity view only) and ``bin``
    the intensity bin index, None in the time-color view and for gaps.
    """

    period: int
    offset: float
    length: float
    color: Color | None
    bin: int | None = None


@dataclass(frozen=True, slots=True)
class EdgeSegmentModel:
    segments: tuple[EdgeSegment, ...]

    def __post_init__(self) -> None:
        covered = 0.0
        last_period = -1
        for seg in self.segments:
            if seg.period <= last_period:
                raise ValueError("segments must be ordered by period ascending")
            last_period = seg.period
            if not (0 <= seg.offset <= 1 and 0 <= seg.length <= 1):
                raise ValueError("segment offset/length outside [0, 1]")
            covered += seg.length
        if covered > 1 + 1e-9:
            raise ValueError("segments cover more than the whole edge")


@dataclass(frozen=True, slots=True)
class IntensityScale:
    """Ordered half-open strength intervals with one color per bin.

    ``bins[i]`` is (low, high) covering low <= strength < high, except the
    last bin which also includes its upper bound. ``values`` keeps the
    distinct strengths the scale was built from, for legend labels.
    """

    bins: tuple[tuple[float, float], ...]
    bin_colors: tuple[Color, ...]
    values: tuple[float, ...]
    max_bins: int = 12

    def bin_of(self, strength: float) -> int:
        """Index of the bin containing a positive strength."""
        if strength <= 0:
            raise ValueError("only positive strengths are binned")
        for i, (low, high) in enumerate(self.bins):
            if low <= strength < high:
                return i
        last_low, last_high = self.bins[-1]
        if last_low <= strength <= last_high:
            return len(self.bins) - 1
        raise ValueError(f"strength {strength} outside every bin")

    def bin_label(self, index: int) -> str:
        """Legend text: the single value or the value range of a bin."""
        inside = [v for v in self.values if self.bin_of(v) == index]
        if len(inside) == 1:
            return _format_value(inside[0])
        return f"{_format_value(inside[0])}-{_format_value(inside[-1])}"


def _format_value(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return f"{value:.4g}"


def _interpolate_hue(p: float) -> float:
    for (p0, h0), (p1, h1) in zip(HUE_ANCHORS, HUE_ANCHORS[1:]):
        if p <= p1:
            t = (p - p0) / (p1 - p0)
            return h0 + (h1 - h0) * t
    return HUE_ANCHORS[-1][1]


def period_color(index: int, relevant: Sequence[int]) -> Color:
    """Color of one relevant period by its position in time.

    The period's rank within the relevant periods is normalized to [0, 1]
    and mapped through the purple-to-red hue path; a lone relevant period
    counts as the most recent and comes out red.
    """
    try:
        rank = list(relevant).index(index)
    except ValueError:
        raise NotRelevantError(
            f"period {index} is not relevant in this graph"
        ) from None
    n = len(relevant)
    p = 1.0 if n == 1 else rank / (n - 1)
    hue = _interpolate_hue(p) % 360.0
    return Color(hue=hue, saturation=TIME_SATURATION, lightness=TIME_LIGHTNESS)


def relevant_periods(alters: Iterable[RankedAlter]) -> tuple[int, ...]:
    """Sorted union of positive periods over the displayed timelines."""
    periods: set[int] = set()
    empty = True
    for alter in alters:
        empty = False
        periods.update(alter.timeline.positive_periods())
    if empty:
        raise ValueError("relevant_periods needs at least one alter")
    return tuple(sorted(periods))


def time_color_segments(
    timeline: Timeline, relevant: Sequence[int]
) -> EdgeSegmentModel:
    """Time-color edge: one equal segment per influencing period.

    Segments tile the whole edge, oldest nearest the ego; strength never
    affects segment length.
    """
    positive = timeline.positive_periods()
    if not positive:
        raise EmptyTimelineError("time-color edge needs at least one positive period")
    length = 1.0 / len(positive)
    segments = tuple(
        EdgeSegment(
            period=period,
            offset=i * length,
            length=length,
            color=period_color(period, relevant),
        )
        for i, period in enumerate(positive)
    )
    return EdgeSegmentModel(segments)


def _bin_color(index: int, bin_count: int) -> Color:
    if bin_count == 1:
        hue = INTENSITY_HUE_HIGH
    else:
        t = index / (bin_count - 1)
        hue = INTENSITY_HUE_LOW + (INTENSITY_HUE_HIGH - INTENSITY_HUE_LOW) * t
    return Color(hue=hue % 360.0, saturation=TIME_SATURATION, lightness=TIME_LIGHTNESS)


def build_intensity_scale(
    strengths: Iterable[float], max_bins: int = 12
) -> IntensityScale:
    """Build the strength-to-color scale for one graph.

    Every distinct positive strength gets its own singleton bin while they
    fit into ``max_bins``; otherwise the sorted distinct values are split
    into ``max_bins`` groups of near-equal size and each group becomes one
    half-open value interval. Bin colors run blue (weakest) to red
    (strongest).
    """
    values = sorted({s for s in strengths if s > 0})
    if not values:
        raise ValueError("intensity scale needs at least one positive strength")
    if max_bins < 1:
        raise ValueError("max_bins must be >= 1")

    if len(values) <= max_bins:
        groups = [[v] for v in values]
    else:
        groups = [[] for _ in range(max_bins)]
        for rank, value in enumerate(values):
            groups[rank * max_bins // len(values)].append(value)

    bins = []
    for i, group in enumerate(groups):
        low = group[0]
        high = groups[i + 1][0] if i + 1 < len(groups) else group[-1]
        bins.append((low, high))
    colors = tuple(_bin_color(i, len(groups)) for i in range(len(groups)))
    return IntensityScale(
        bins=tuple(bins),
        bin_colors=colors,
        max_bins=max_bins,
        values=tuple(values),
    )


def intensity_segments(
    timeline: Timeline, relevant: Sequence[int], scale: IntensityScale
) -> EdgeSegmentModel:
    """Intensity edge: one segment per relevant period, gaps painted white.

    Every edge of a graph gets the same segment count, so segment position
    alone identifies the period.
    """
    if timeline.is_empty():
        raise EmptyTimelineError("intensity edge needs at least one positive period")
    length = 1.0 / len(relevant)
    segments = []
    for i, period in enumerate(relevant):
        strength = timeline.strengths[period]
        if strength > 0:
            bin_index = scale.bin_of(strength)
            color: Color | None = scale.bin_colors[bin_index]
        else:
            bin_index = None
            color = None
        segments.append(
            EdgeSegment(
                period=period,
                offset=i * length,
                length=length,
                color=color,
                bin=bin_index,
            )
        )
    return EdgeSegmentModel(tuple(segments))

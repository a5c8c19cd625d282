"""Core domain types: entities, time frames, and per-period relation timelines.

Time stamps are plain integers in adapter-defined units (years, month
indices, day indices); nothing here parses calendar dates. A TimeFrame
splits the stamp interval of a dataset into equal-sized periods, and a
Timeline stores one relation's non-negative strength per period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidRangeError, OutOfFrameError

__all__ = [
    "EntityKey",
    "EntityRecord",
    "FillingSpec",
    "TimeFrame",
    "Timeline",
    "RelationInstance",
    "build_time_frame",
    "period_of",
    "timeline_from_stamps",
]


@dataclass(frozen=True, slots=True)
class EntityKey:
    """Identity of one entity: a type name plus an id unique within it."""

    type_name: str
    id: str

    def __post_init__(self) -> None:
        if not self.type_name:
            raise ValueError("entity type_name must be non-empty")
        if not self.id:
            raise ValueError("entity id must be non-empty")


@dataclass(frozen=True)
class FillingSpec:
    """One of the six node-filling variants with its parameters.

    Colors are SVG color strings (named colors or #rrggbb). Exactly one
    parameter set applies per variant:

    - ``none``: no parameters, outline only
    - ``solid``: ``color``
    - ``fraction``: ``fraction`` in [0, 1], optional ``color``
    - ``pie``: ``weights`` as ordered (color, positive weight) pairs
    - ``timecolor``: ``colors`` as an ordered list
    - ``presence``: ``booleans`` as an ordered list, optional ``color``
    """

    variant: str
    color: str | None = None
    fraction: float | None = None
    weights: tuple[tuple[str, float], ...] = ()
    colors: tuple[str, ...] = ()
    booleans: tuple[bool, ...] = ()

    VARIANTS = ("none", "solid", "fraction", "pie", "timecolor", "presence")

    def __post_init__(self) -> None:
        # Full parameter validation lives in render.validate_filling; here we
        # only reject unknown variant names so a bad spec fails early.
        if self.variant not in self.VARIANTS:
            raise ValueError(f"unknown filling variant {self.variant!r}")


NO_FILLING = FillingSpec("none")


@dataclass(frozen=True)
class EntityRecord:
    """Displayable facts about one entity.

    ``size_value`` drives the node radius (e.g. total publication count).
    ``activity_periods`` lists the periods in which the entity itself was
    active, independent of any relation; presence and activity-based
    fillings are computed from it.
    """

    key: EntityKey
    label: str
    size_value: float = 0.0
    tooltip_lines: tuple[str, ...] = ()
    filling: FillingSpec = NO_FILLING
    activity_periods: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError(f"entity {self.key} has an empty label")
        if self.size_value < 0:
            raise ValueError(f"entity {self.key} has negative size_value")


@dataclass(frozen=True, slots=True)
class TimeFrame:
    """Equal-sized division of the interval between oldest and newest stamp."""

    origin: int
    period_length: int
    period_count: int

    def __post_init__(self) -> None:
        if self.period_length < 1:
            raise ValueError("period_length must be >= 1")
        if self.period_count < 1:
            raise ValueError("period_count must be >= 1")

    @property
    def last_stamp(self) -> int:
        """Largest stamp that still maps into the frame."""
        return self.origin + self.period_count * self.period_length - 1

    def period_start(self, index: int) -> int:
        """First stamp of the given period."""
        return self.origin + index * self.period_length

    def period_label(self, index: int) -> str:
        """Display label for a period, in raw stamp units."""
        start = self.period_start(index)
        if self.period_length == 1:
            return str(start)
        return f"{start}-{start + self.period_length - 1}"


@dataclass(frozen=True, slots=True)
class Timeline:
    """Per-period non-negative strengths of one relation instance."""

    strengths: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.strengths:
            raise ValueError("timeline must cover at least one period")
        for value in self.strengths:
            if value < 0:
                raise ValueError("timeline strengths must be non-negative")

    def __len__(self) -> int:
        return len(self.strengths)

    def total(self) -> float:
        return sum(self.strengths)

    def positive_periods(self) -> tuple[int, ...]:
        """Indices of periods with strength > 0, ascending."""
        return tuple(i for i, s in enumerate(self.strengths) if s > 0)

    def is_empty(self) -> bool:
        return all(s == 0 for s in self.strengths)

    def masked(self, from_period: int, to_period: int) -> "Timeline":
        """Copy with every strength outside [from_period, to_period] zeroed."""
        return Timeline(
            tuple(
                s if from_period <= i <= to_period else 0.0
                for i, s in enumerate(self.strengths)
            )
        )


@dataclass(frozen=True, slots=True)
class RelationInstance:
    """One ego-alter relation with its timeline."""

    ego: EntityKey
    alter: EntityKey
    relation_type: str
    timeline: Timeline

    def __post_init__(self) -> None:
        if self.ego == self.alter:
            raise ValueError(
                f"self-relation on {self.ego} is not permitted for "
                f"{self.relation_type!r}"
            )


def build_time_frame(min_stamp: int, max_stamp: int, period_length: int) -> TimeFrame:
    """Divide [min_stamp, max_stamp] into equal-sized periods.

    The period count is ``ceil((max - min + 1) / period_length)`` so a
    partial final period is still representable.
    """
    if min_stamp > max_stamp:
        raise InvalidRangeError(
            f"min_stamp {min_stamp} is greater than max_stamp {max_stamp}"
        )
    if period_length < 1:
        raise ValueError("period_length must be >= 1")
    count = math.ceil((max_stamp - min_stamp + 1) / period_length)
    return TimeFrame(origin=min_stamp, period_length=period_length, period_count=count)


def period_of(stamp: int, frame: TimeFrame) -> int:
    """Map a stamp to its period index within the frame."""
    if stamp < frame.origin or stamp > frame.last_stamp:
        raise OutOfFrameError(
            f"stamp {stamp} outside frame [{frame.origin}, {frame.last_stamp}]"
        )
    return (stamp - frame.origin) // frame.period_length


def timeline_from_stamps(
    stamps: Iterable[tuple[int, float]], frame: TimeFrame
) -> Timeline:
    """Aggregate weighted stamps into a per-period timeline.

    Each (stamp, weight) pair adds its weight to the period the stamp maps
    to. Weights must be positive; an empty input yields an all-zero
    timeline which callers must reject before storing a relation.
    """
    buckets: list[list[float]] = [[] for _ in range(frame.period_count)]
    for stamp, weight in stamps:
        if weight <= 0:
            raise ValueError(f"stamp {stamp} has non-positive weight {weight}")
        buckets[period_of(stamp, frame)].append(weight)
    # fsum is correctly rounded, so any permutation of the input produces
    # the identical timeline.
    return Timeline(tuple(math.fsum(bucket) for bucket in buckets))

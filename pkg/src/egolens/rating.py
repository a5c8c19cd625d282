"""Relevance scoring of relations, time-lens restriction, and top-k selection.

The default rating of a relation is the sum of its per-period strengths
inside the lens. Relation types may override this with a named rating
function registered here; every rating function maps a lens-masked
timeline to a non-negative score.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import InvalidRangeError
from .model import EntityKey, RelationInstance, TimeFrame, Timeline

__all__ = [
    "Lens",
    "RankedAlter",
    "RatingFunction",
    "RATING_FUNCTIONS",
    "register_rating",
    "full_lens",
    "relevance",
    "select_alters",
]

RatingFunction = Callable[[Timeline], float]


def _sum_rating(timeline: Timeline) -> float:
    return timeline.total()


def _peak_rating(timeline: Timeline) -> float:
    return max(timeline.strengths)


RATING_FUNCTIONS: dict[str, RatingFunction] = {
    "sum": _sum_rating,
    "peak": _peak_rating,
}


def register_rating(name: str, fn: RatingFunction) -> None:
    """Register an adapter-supplied rating function under a name."""
    RATING_FUNCTIONS[name] = fn


@dataclass(frozen=True, slots=True)
class Lens:
    """Inclusive range of period indices considered for display and rating."""

    from_period: int
    to_period: int

    def __post_init__(self) -> None:
        if self.from_period < 0:
            raise InvalidRangeError("lens from_period must be >= 0")
        if self.from_period > self.to_period:
            raise InvalidRangeError(
                f"lens range [{self.from_period}, {self.to_period}] is inverted"
            )

    def validate_for(self, frame: TimeFrame) -> None:
        if self.to_period >= frame.period_count:
            raise InvalidRangeError(
                f"lens ends at period {self.to_period} but the frame has "
                f"only {frame.period_count} periods"
            )


def full_lens(frame: TimeFrame) -> Lens:
    """Lens covering every period of the frame."""
    return Lens(0, frame.period_count - 1)


@dataclass(frozen=True, slots=True)
class RankedAlter:
    """One selected alter: its score, 1-based rank, and lens-masked timeline."""

    alter: EntityKey
    relevance: float
    rank: int
    timeline: Timeline


def relevance(
    timeline: Timeline, lens: Lens, rating: RatingFunction = _sum_rating
) -> float:
    """Score a relation over the lens (default: sum of masked strengths)."""
    return rating(timeline.masked(lens.from_period, lens.to_period))


def select_alters(
    neighbors: Sequence[RelationInstance],
    lens: Lens,
    k: int,
    rating: RatingFunction = _sum_rating,
    labels: Mapping[EntityKey, str] | None = None,
) -> list[RankedAlter]:
    """Pick the k most relevant neighbors under the lens.

    Alters with relevance zero are dropped. Ties are broken by alter label
    ascending, then id ascending, so the output is deterministic under any
    input permutation. Returned timelines are masked to the lens.
    """
    if k < 1:
        raise ValueError("k must be >= 1")

    def label_of(key: EntityKey) -> str:
        if labels is not None and key in labels:
            return labels[key]
        return key.id

    scored = []
    for rel in neighbors:
        masked = rel.timeline.masked(lens.from_period, lens.to_period)
        score = rating(masked)
        if score > 0:
            scored.append((score, rel.alter, masked))
    scored.sort(
        key=lambda item: (-item[0], label_of(item[1]), item[1].id, item[1].type_name)
    )
    return [
        RankedAlter(alter=alter, relevance=score, rank=i + 1, timeline=masked)
        for i, (score, alter, masked) in enumerate(scored[:k])
    ]

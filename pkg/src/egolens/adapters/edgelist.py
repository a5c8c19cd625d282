"""Generic temporal edge-list loader.

The relations file is UTF-8 tab-separated with a header line::

    ego_type  ego_id  ego_label  alter_type  alter_id  alter_label  relation  stamp  weight

Each row is one undirected relation event; list every relation pair only
once (either direction). Duplicate (pair, relation, period) rows sum
their weights. An optional attribute file adds per-entity display data::

    type  id  size_value  filling_spec  tooltip

where filling_spec uses the compact form (``fraction:0.4``,
``presence:101101:blue``, ...) and tooltip lines are separated by ``|``.
Blank lines and lines starting with ``#`` are skipped in both files.
"""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from ..errors import DataError
from ..model import (
    EntityKey,
    EntityRecord,
    FillingSpec,
    build_time_frame,
    timeline_from_stamps,
)
from ..model import RelationInstance
from .base import MemoryDataset
from .fillspec import format_filling, parse_filling

__all__ = ["EDGE_HEADER", "ATTR_HEADER", "load_edge_list", "serialize_dataset"]

EDGE_HEADER = (
    "ego_type", "ego_id", "ego_label",
    "alter_type", "alter_id", "alter_label",
    "relation", "stamp", "weight",
)
ATTR_HEADER = ("type", "id", "size_value", "filling_spec", "tooltip")


def _rows(source: TextIO | str, header: tuple[str, ...], what: str):
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = enumerate(source, start=1)
    for number, line in lines:
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        first = line.rstrip("\n").split("\t")
        if tuple(first) != header:
            raise DataError(
                f"{what} line {number}: expected header {' '.join(header)!r}"
            )
        break
    else:
        raise DataError(f"{what}: empty input, header line missing")
    for number, line in lines:
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != len(header):
            raise DataError(
                f"{what} line {number}: expected {len(header)} fields, "
                f"got {len(fields)}"
            )
        yield number, fields


def load_edge_list(
    source: TextIO | str,
    period_length: int,
    attributes: TextIO | str | None = None,
) -> MemoryDataset:
    """Parse an edge list (and optional attribute file) into a dataset.

    The time frame spans the minimum to maximum stamp present, divided
    into periods of ``period_length`` stamps.
    """
    labels: dict[EntityKey, str] = {}
    events: dict[tuple[str, EntityKey, EntityKey], list[tuple[int, float]]] = {}

    for number, fields in _rows(source, EDGE_HEADER, "edge list"):
        ego_type, ego_id, ego_label = fields[0], fields[1], fields[2]
        alter_type, alter_id, alter_label = fields[3], fields[4], fields[5]
        relation = fields[6]
        try:
            stamp = int(fields[7])
        except ValueError:
            raise DataError(
                f"edge list line {number}: stamp {fields[7]!r} is not an integer"
            ) from None
        try:
            weight = float(fields[8])
        except ValueError:
            raise DataError(
                f"edge list line {number}: weight {fields[8]!r} is not a number"
            ) from None
        if weight <= 0:
            raise DataError(f"edge list line {number}: weight must be positive")
        if not relation:
            raise DataError(f"edge list line {number}: empty relation name")
        try:
            ego = EntityKey(ego_type, ego_id)
            alter = EntityKey(alter_type, alter_id)
        except ValueError as exc:
            raise DataError(f"edge list line {number}: {exc}") from None
        labels.setdefault(ego, ego_label or ego_id)
        labels.setdefault(alter, alter_label or alter_id)
        a, b = sorted((ego, alter), key=lambda k: (k.type_name, k.id))
        events.setdefault((relation, a, b), []).append((stamp, weight))

    if not events:
        raise DataError("edge list contains no relations")

    stamps = [s for rows in events.values() for s, _ in rows]
    frame = build_time_frame(min(stamps), max(stamps), period_length)

    relations = []
    totals: dict[EntityKey, float] = {}
    activity: dict[EntityKey, set[int]] = {}
    for (relation, ego, alter), rows in sorted(
        events.items(), key=lambda kv: (kv[0][0], kv[0][1].type_name, kv[0][1].id,
                                        kv[0][2].type_name, kv[0][2].id)
    ):
        timeline = timeline_from_stamps(rows, frame)
        relations.append(
            RelationInstance(
                ego=ego, alter=alter, relation_type=relation, timeline=timeline
            )
        )
        for end in (ego, alter):
            totals[end] = totals.get(end, 0.0) + timeline.total()
            activity.setdefault(end, set()).update(timeline.positive_periods())

    attr_rows: dict[EntityKey, tuple[float, FillingSpec, tuple[str, ...]]] = {}
    if attributes is not None:
        for number, fields in _rows(attributes, ATTR_HEADER, "attribute file"):
            key = EntityKey(fields[0], fields[1])
            try:
                size_value = float(fields[2])
            except ValueError:
                raise DataError(
                    f"attribute file line {number}: bad size_value {fields[2]!r}"
                ) from None
            if size_value < 0:
                raise DataError(
                    f"attribute file line {number}: size_value must be >= 0"
                )
            filling = parse_filling(fields[3])
            tooltip = tuple(part for part in fields[4].split("|") if part)
            attr_rows[key] = (size_value, filling, tooltip)

    entities = []
    for key in sorted(labels, key=lambda k: (k.type_name, k.id)):
        label = labels[key]
        if key in attr_rows:
            size_value, filling, tooltip = attr_rows[key]
        else:
            size_value = totals.get(key, 0.0)
            filling = FillingSpec("none")
            tooltip = (label, f"type: {key.type_name}")
        entities.append(
            EntityRecord(
                key=key,
                label=label,
                size_value=size_value,
                tooltip_lines=tooltip,
                filling=filling,
                activity_periods=frozenset(activity.get(key, set())),
            )
        )
    return MemoryDataset(frame=frame, entities=entities, relations=relations)


def _num(value: float) -> str:
    return str(int(value)) if value == int(value) else repr(value)


def serialize_dataset(dataset: MemoryDataset) -> tuple[str, str]:
    """(edge list text, attribute text) that reload to an equal dataset."""
    frame = dataset.time_frame()
    edge_lines = ["\t".join(EDGE_HEADER)]
    for rel in dataset.all_relations():
        ego_label = dataset.entity(rel.ego).label
        alter_label = dataset.entity(rel.alter).label
        for period in rel.timeline.positive_periods():
            edge_lines.append(
                "\t".join(
                    (
                        rel.ego.type_name, rel.ego.id, ego_label,
                        rel.alter.type_name, rel.alter.id, alter_label,
                        rel.relation_type,
                        str(frame.period_start(period)),
                        _num(rel.timeline.strengths[period]),
                    )
                )
            )
    attr_lines = ["\t".join(ATTR_HEADER)]
    for key in dataset.entity_keys():
        record = dataset.entity(key)
        attr_lines.append(
            "\t".join(
                (
                    key.type_name, key.id,
                    _num(record.size_value),
                    format_filling(record.filling),
                    "|".join(record.tooltip_lines),
                )
            )
        )
    return "\n".join(edge_lines) + "\n", "\n".join(attr_lines) + "\n"

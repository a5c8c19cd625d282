"""Versioned binary snapshots of a built dataset.

Layout: magic bytes ``EGOL``, one version byte, then length-prefixed
sections (4-byte big-endian length followed by a UTF-8 JSON payload) in
fixed order: frame, relation labels, entities, relations. Snapshots let
a slow build (e.g. a large DBLP parse) be reloaded instantly.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path
from typing import BinaryIO

from ..errors import DataError
from ..model import EntityKey, EntityRecord, RelationInstance, TimeFrame, Timeline
from .base import MemoryDataset
from .fillspec import format_filling, parse_filling

__all__ = ["MAGIC", "VERSION", "save_snapshot", "load_snapshot"]

MAGIC = b"EGOL"
VERSION = 1


def _write_section(out: BinaryIO, payload: object) -> None:
    blob = json.dumps(payload, separators=(",", ":"), sort_keys=True).encode("utf-8")
    out.write(struct.pack(">I", len(blob)))
    out.write(blob)


def _read_section(data: bytes, offset: int) -> tuple[object, int]:
    if offset + 4 > len(data):
        raise DataError("snapshot truncated inside a section header")
    (length,) = struct.unpack_from(">I", data, offset)
    offset += 4
    if offset + length > len(data):
        raise DataError("snapshot truncated inside a section payload")
    payload = json.loads(data[offset : offset + length].decode("utf-8"))
    return payload, offset + length


def save_snapshot(dataset: MemoryDataset, path: str | Path) -> None:
    frame = dataset.time_frame()
    with open(path, "wb") as out:
        out.write(MAGIC)
        out.write(bytes([VERSION]))
        _write_section(
            out,
            {
                "origin": frame.origin,
                "period_length": frame.period_length,
                "period_count": frame.period_count,
            },
        )
        _write_section(
            out, {name: dataset.relation_label(name) for name in dataset.relation_names()}
        )
        _write_section(
            out,
            [
                {
                    "type": record.key.type_name,
                    "id": record.key.id,
                    "label": record.label,
                    "size": record.size_value,
                    "tooltip": list(record.tooltip_lines),
                    "filling": format_filling(record.filling),
                    "activity": sorted(record.activity_periods),
                }
                for record in (dataset.entity(k) for k in dataset.entity_keys())
            ],
        )
        _write_section(
            out,
            [
                {
                    "relation": rel.relation_type,
                    "ego": [rel.ego.type_name, rel.ego.id],
                    "alter": [rel.alter.type_name, rel.alter.id],
                    "strengths": list(rel.timeline.strengths),
                }
                for rel in dataset.all_relations()
            ],
        )


def load_snapshot(path: str | Path) -> MemoryDataset:
    data = Path(path).read_bytes()
    if data[:4] != MAGIC:
        raise DataError(f"{path}: not a dataset snapshot (bad magic)")
    if len(data) < 5 or data[4] != VERSION:
        raise DataError(f"{path}: unsupported snapshot version")
    offset = 5
    frame_raw, offset = _read_section(data, offset)
    labels, offset = _read_section(data, offset)
    entities_raw, offset = _read_section(data, offset)
    relations_raw, offset = _read_section(data, offset)
    if offset != len(data):
        raise DataError(f"{path}: trailing bytes after last section")

    frame = TimeFrame(
        origin=frame_raw["origin"],
        period_length=frame_raw["period_length"],
        period_count=frame_raw["period_count"],
    )
    entities = [
        EntityRecord(
            key=EntityKey(row["type"], row["id"]),
            label=row["label"],
            size_value=row["size"],
            tooltip_lines=tuple(row["tooltip"]),
            filling=parse_filling(row["filling"]),
            activity_periods=frozenset(row["activity"]),
        )
        for row in entities_raw
    ]
    relations = [
        RelationInstance(
            ego=EntityKey(*row["ego"]),
            alter=EntityKey(*row["alter"]),
            relation_type=row["relation"],
            timeline=Timeline(tuple(row["strengths"])),
        )
        for row in relations_raw
    ]
    return MemoryDataset(
        frame=frame, entities=entities, relations=relations, relation_labels=labels
    )

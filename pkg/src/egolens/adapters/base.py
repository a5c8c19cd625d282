"""The pluggable data-interface contract and its in-memory implementation.

An adapter supplies everything the graph service needs from a repository:
entity records, per-relation neighbor lists with timelines, the relation
inventory per entity type, label search, and the dataset's time frame.
Both bundled loaders (edge list, DBLP) build a MemoryDataset; a custom
adapter only has to subclass AdapterContract.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import DataError, NotFoundError
from ..model import EntityKey, EntityRecord, RelationInstance, TimeFrame

__all__ = ["RelationDescriptor", "AdapterContract", "MemoryDataset"]


@dataclass(frozen=True, slots=True)
class RelationDescriptor:
    """One relation as browsable from a given entity type."""

    name: str
    label: str
    target_type: str
    rating: str = "sum"


class AdapterContract(ABC):
    """Required operations of a data source."""

    @abstractmethod
    def entity(self, key: EntityKey) -> EntityRecord:
        """Record for a key; raises NotFoundError for unknown keys."""

    @abstractmethod
    def neighbors(self, key: EntityKey, relation_type: str) -> list[RelationInstance]:
        """All relation instances of one type around an entity."""

    @abstractmethod
    def relation_types(self, entity_type: str) -> list[RelationDescriptor]:
        """Relations browsable from entities of the given type."""

    @abstractmethod
    def search(self, query: str, limit: int = 20) -> list[EntityKey]:
        """Ranked label search; every returned key resolves via entity()."""

    @abstractmethod
    def time_frame(self) -> TimeFrame:
        """The frame every stored timeline is indexed against."""


def _pair_key(a: EntityKey, b: EntityKey) -> tuple[EntityKey, EntityKey]:
    return (a, b) if (a.type_name, a.id) <= (b.type_name, b.id) else (b, a)


class MemoryDataset(AdapterContract):
    """Immutable in-memory dataset built once and shared by readers.

    Relations are stored undirected: a relation instance between a and b
    is visible from both endpoints with the identical timeline, which
    makes symmetric consistency structural.
    """

    def __init__(
        self,
        frame: TimeFrame,
        entities: Iterable[EntityRecord],
        relations: Iterable[RelationInstance],
        relation_labels: dict[str, str] | None = None,
    ):
        self._frame = frame
        self._entities: dict[EntityKey, EntityRecord] = {}
        for record in entities:
            if record.key in self._entities:
                raise DataError(f"duplicate entity {record.key}")
            self._entities[record.key] = record

        self._neighbors: dict[tuple[EntityKey, str], list[RelationInstance]] = {}
        self._targets: dict[tuple[str, str], str] = {}
        seen_pairs: set[tuple[str, EntityKey, EntityKey]] = set()
        for rel in relations:
            if len(rel.timeline) != frame.period_count:
                raise DataError(
                    f"timeline of {rel.ego}-{rel.alter} has {len(rel.timeline)} "
                    f"periods, frame has {frame.period_count}"
                )
            if rel.timeline.is_empty():
                raise DataError(
                    f"all-zero timeline for {rel.ego}-{rel.alter} ({rel.relation_type})"
                )
            for end in (rel.ego, rel.alter):
                if end not in self._entities:
                    raise DataError(f"relation references unknown entity {end}")
            pair = (rel.relation_type, *_pair_key(rel.ego, rel.alter))
            if pair in seen_pairs:
                raise DataError(
                    f"duplicate relation {rel.relation_type} between "
                    f"{rel.ego} and {rel.alter}"
                )
            seen_pairs.add(pair)
            self._store(rel.ego, rel.alter, rel.relation_type, rel)
            self._store(
                rel.alter,
                rel.ego,
                rel.relation_type,
                RelationInstance(
                    ego=rel.alter,
                    alter=rel.ego,
                    relation_type=rel.relation_type,
                    timeline=rel.timeline,
                ),
            )

        self._relation_labels = dict(relation_labels or {})
        self._search_rows = sorted(
            ((record.label.lower(), record.key) for record in self._entities.values()),
            key=lambda row: (row[0], row[1].type_name, row[1].id),
        )

    def _store(
        self, ego: EntityKey, alter: EntityKey, relation_type: str, rel: RelationInstance
    ) -> None:
        self._neighbors.setdefault((ego, relation_type), []).append(rel)
        self._targets[(relation_type, ego.type_name)] = alter.type_name

    # AdapterContract -----------------------------------------------------

    def entity(self, key: EntityKey) -> EntityRecord:
        try:
            return self._entities[key]
        except KeyError:
            raise NotFoundError(f"unknown entity {key.type_name}:{key.id}") from None

    def neighbors(self, key: EntityKey, relation_type: str) -> list[RelationInstance]:
        rows = self._neighbors.get((key, relation_type), [])
        return sorted(rows, key=lambda r: (r.alter.type_name, r.alter.id))

    def relation_types(self, entity_type: str) -> list[RelationDescriptor]:
        descriptors = []
        for (name, source), target in sorted(self._targets.items()):
            if source == entity_type:
                descriptors.append(
                    RelationDescriptor(
                        name=name,
                        label=self._relation_labels.get(name, name),
                        target_type=target,
                    )
                )
        return descriptors

    def search(self, query: str, limit: int = 20) -> list[EntityKey]:
        """Exact label matches first, then prefix, then substring."""
        needle = query.strip().lower()
        if not needle:
            return []
        tiers: tuple[list[EntityKey], list[EntityKey], list[EntityKey]] = ([], [], [])
        for lowered, key in self._search_rows:
            if lowered == needle:
                tiers[0].append(key)
            elif lowered.startswith(needle):
                tiers[1].append(key)
            elif needle in lowered:
                tiers[2].append(key)
        ranked = [key for tier in tiers for key in tier]
        return ranked[:limit]

    def time_frame(self) -> TimeFrame:
        return self._frame

    # Introspection beyond the contract -----------------------------------

    def entity_keys(self) -> list[EntityKey]:
        return sorted(self._entities, key=lambda k: (k.type_name, k.id))

    def relation_names(self) -> list[str]:
        return sorted({name for name, _ in self._targets})

    def all_relations(self) -> list[RelationInstance]:
        """Each stored relation once, with canonically ordered endpoints."""
        rows = []
        for (ego, _), rels in self._neighbors.items():
            for rel in rels:
                if (rel.ego, rel.alter) == _pair_key(rel.ego, rel.alter):
                    rows.append(rel)
        return sorted(
            rows,
            key=lambda r: (r.relation_type, r.ego.type_name, r.ego.id, r.alter.type_name, r.alter.id),
        )

    def relation_label(self, name: str) -> str:
        return self._relation_labels.get(name, name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MemoryDataset):
            return NotImplemented
        return (
            self._frame == other._frame
            and self._entities == other._entities
            and self.all_relations() == other.all_relations()
        )

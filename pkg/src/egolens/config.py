"""Graph configuration files.

The config names the entity types and relations a deployment exposes and
how to draw them. It is an INI-style text file::

    [defaults]
    max_alters = 10
    view = timecolor
    period_length = 1

    [entity:person]
    shape = circle
    filling = entity
    link = https://example.org/person/{id}

    [relation:coauthor]
    source = person
    target = person
    label = Coauthors
    rating = sum
    alter_filling = fraction

Entity ``filling`` and relation ``alter_filling`` take a filling rule:
``entity`` (use the record's stored filling), ``none``,
``solid:<color>``, ``fraction[:<color>]`` (share of the alter's work done
with the ego), or ``presence[:<color>]`` (the entity's own activity over
the displayed periods). A relation may set ``data`` to browse a stored
relation under a different direction or name.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .errors import ConfigError
from .render import SHAPES

__all__ = ["FillingRule", "EntityConfig", "RelationConfig", "GraphConfig", "load_config"]

VIEWS = ("timecolor", "intensity")
RULE_NAMES = ("entity", "none", "solid", "fraction", "presence")


@dataclass(frozen=True, slots=True)
class FillingRule:
    name: str
    color: str | None = None


def _parse_rule(text: str, where: str) -> FillingRule:
    name, _, color = text.strip().partition(":")
    if name not in RULE_NAMES:
        raise ConfigError(f"{where}: unknown filling rule {name!r}")
    if name == "solid" and not color:
        raise ConfigError(f"{where}: solid rule needs a color")
    if name in ("entity", "none") and color:
        raise ConfigError(f"{where}: rule {name!r} takes no color")
    return FillingRule(name=name, color=color or None)


@dataclass(frozen=True, slots=True)
class EntityConfig:
    type_name: str
    shape: str = "circle"
    filling: FillingRule = FillingRule("entity")
    link: str | None = None


@dataclass(frozen=True, slots=True)
class RelationConfig:
    name: str
    sources: tuple[str, ...]
    targets: tuple[str, ...]
    label: str
    data: str
    rating: str = "sum"
    alter_filling: FillingRule | None = None


@dataclass(frozen=True)
class GraphConfig:
    entities: dict[str, EntityConfig]
    relations: dict[str, RelationConfig]
    max_alters: int = 10
    view: str = "timecolor"
    period_length: int = 1

    def entity_config(self, type_name: str) -> EntityConfig:
        return self.entities.get(type_name, EntityConfig(type_name=type_name))

    def relations_from(self, type_name: str) -> list[RelationConfig]:
        """Relations browsable from entities of one type, config order."""
        return [r for r in self.relations.values() if type_name in r.sources]

    def shapes(self) -> dict[str, str]:
        return {name: cfg.shape for name, cfg in self.entities.items()}


def _split_types(raw: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def load_config(source: TextIO | str | Path) -> GraphConfig:
    """Parse and validate a configuration file."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        if isinstance(source, Path):
            with open(source, encoding="utf-8") as handle:
                parser.read_file(handle)
        elif isinstance(source, str):
            parser.read_file(io.StringIO(source))
        else:
            parser.read_file(source)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable config: {exc}") from exc

    max_alters = 10
    view = "timecolor"
    period_length = 1
    if parser.has_section("defaults"):
        section = parser["defaults"]
        try:
            max_alters = section.getint("max_alters", fallback=10)
            period_length = section.getint("period_length", fallback=1)
        except ValueError as exc:
            raise ConfigError(f"defaults: {exc}") from exc
        view = section.get("view", fallback="timecolor")
        if max_alters < 1:
            raise ConfigError("defaults: max_alters must be >= 1")
        if period_length < 1:
            raise ConfigError("defaults: period_length must be >= 1")
        if view not in VIEWS:
            raise ConfigError(f"defaults: unknown view {view!r}")
        unknown = set(section) - {"max_alters", "view", "period_length"}
        if unknown:
            raise ConfigError(f"defaults: unknown keys {sorted(unknown)}")

    entities: dict[str, EntityConfig] = {}
    relations: dict[str, RelationConfig] = {}
    for section_name in parser.sections():
        if section_name == "defaults":
            continue
        kind, _, name = section_name.partition(":")
        if kind not in ("entity", "relation") or not name:
            raise ConfigError(f"unknown section [{section_name}]")
        section = parser[section_name]
        if kind == "entity":
            shape = section.get("shape", fallback="circle")
            if shape not in SHAPES:
                raise ConfigError(f"[{section_name}]: unknown shape {shape!r}")
            filling = _parse_rule(
                section.get("filling", fallback="entity"), f"[{section_name}]"
            )
            unknown = set(section) - {"shape", "filling", "link"}
            if unknown:
                raise ConfigError(f"[{section_name}]: unknown keys {sorted(unknown)}")
            entities[name] = EntityConfig(
                type_name=name,
                shape=shape,
                filling=filling,
                link=section.get("link", fallback=None),
            )
        else:
            sources = _split_types(section.get("source", fallback=""))
            targets = _split_types(section.get("target", fallback=""))
            if not sources or not targets:
                raise ConfigError(f"[{section_name}]: source and target are required")
            alter_filling = None
            if section.get("alter_filling", fallback=None):
                alter_filling = _parse_rule(
                    section["alter_filling"], f"[{section_name}]"
                )
            unknown = set(section) - {
                "source", "target", "label", "rating", "alter_filling", "data",
            }
            if unknown:
                raise ConfigError(f"[{section_name}]: unknown keys {sorted(unknown)}")
            relations[name] = RelationConfig(
                name=name,
                sources=sources,
                targets=targets,
                label=section.get("label", fallback=name),
                data=section.get("data", fallback=name),
                rating=section.get("rating", fallback="sum"),
                alter_filling=alter_filling,
            )

    if not relations:
        raise ConfigError("config declares no relations")
    for relation in relations.values():
        for type_name in (*relation.sources, *relation.targets):
            if type_name not in entities:
                raise ConfigError(
                    f"relation {relation.name!r} references undeclared entity "
                    f"type {type_name!r}"
                )
    return GraphConfig(
        entities=entities,
        relations=relations,
        max_alters=max_alters,
        view=view,
        period_length=period_length,
    )

"""DBLP XML ingester.

Reads the public dblp.xml vocabulary (article and inproceedings records
with author, title, and year children) and builds an in-memory dataset
with three entity types and four relations:

- person: one per exact author-name string (homonym suffixes stay in the id)
- stream: one per record-key prefix, e.g. ``conf/icdt`` or ``journals/jsyml``
- word: one per stemmed title term

- coauthor: joint records per year
- person_stream: records by a person in a stream per year
- stream_word: tf-idf of a term in the stream's yearly title corpus
- person_word: yearly term counts over the person's titles

Person nodes carry a pie filling of their publications per year, stream
nodes a timecolor filling of their active years, both colored by the
year's position in the full time frame.
"""

from __future__ import annotations

import io
import logging
import math
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass
from typing import TextIO

from ..errors import DataError
from ..model import (
    EntityKey,
    EntityRecord,
    FillingSpec,
    RelationInstance,
    TimeFrame,
    Timeline,
    build_time_frame,
    period_of,
)
from ..views import period_color
from .base import MemoryDataset
from .words import DEFAULT_STOPWORDS, extract_word_pairs

__all__ = ["DblpRecord", "read_dblp_records", "parse_dblp", "RECORD_TAGS"]

log = logging.getLogger(__name__)

RECORD_TAGS = ("article", "inproceedings")


@dataclass(frozen=True, slots=True)
class DblpRecord:
    key: str
    year: int
    authors: tuple[str, ...]
    title: str

    @property
    def stream(self) -> str | None:
        parts = self.key.split("/")
        if len(parts) >= 3:
            return f"{parts[0]}/{parts[1]}"
        return None


def read_dblp_records(source: TextIO | str) -> tuple[list[DblpRecord], int]:
    """All usable records plus the count of skipped ones.

    Records without a year, a key, or any author are skipped and counted.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    records = []
    skipped = 0
    try:
        for _, element in ET.iterparse(source, events=("end",)):
            if element.tag not in RECORD_TAGS:
                continue
            key = element.get("key")
            year_text = element.findtext("year")
            authors = tuple(
                "".join(a.itertext()).strip()
                for a in element.findall("author")
            )
            title_element = element.find("title")
            title = (
                "".join(title_element.itertext()) if title_element is not None else ""
            )
            element.clear()
            if not key or not year_text or not authors:
                skipped += 1
                continue
            try:
                year = int(year_text)
            except ValueError:
                skipped += 1
                continue
            records.append(
                DblpRecord(key=key, year=year, authors=authors, title=title)
            )
    except ET.ParseError as exc:
        raise DataError(f"malformed DBLP XML: {exc}") from exc
    return records, skipped


def _year_colors(years: list[int], frame: TimeFrame) -> list[str]:
    # Fillings use the full frame's time-color mapping, not the mapping of
    # any displayed graph, so an old stream keeps its early (purple) tones
    # even when the graph's bottom bar starts later.
    all_periods = list(range(frame.period_count))
    return [period_color(period_of(y, frame), all_periods).to_hex() for y in years]


def parse_dblp(
    source: TextIO | str,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
) -> MemoryDataset:
    """Build the dataset from a DBLP XML stream."""
    records, skipped = read_dblp_records(source)
    if skipped:
        log.warning("skipped %d records without key, year, or authors", skipped)
    if not records:
        raise DataError("no usable records in DBLP input")

    frame = build_time_frame(
        min(r.year for r in records), max(r.year for r in records), 1
    )

    person_years: dict[str, Counter] = {}
    stream_years: dict[str, set[int]] = {}
    coauthor: dict[tuple[str, str], Counter] = {}
    person_stream: dict[tuple[str, str], Counter] = {}
    stream_docs: dict[tuple[str, int], Counter] = {}
    person_terms: dict[tuple[str, str], Counter] = {}
    term_forms: dict[str, Counter] = {}
    term_year_totals: dict[str, Counter] = {}

    for record in records:
        for author in record.authors:
            person_years.setdefault(author, Counter())[record.year] += 1
        names = sorted(set(record.authors))
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                coauthor.setdefault((a, b), Counter())[record.year] += 1
        stream = record.stream
        if stream is not None:
            stream_years.setdefault(stream, set()).add(record.year)
            for author in set(record.authors):
                person_stream.setdefault((author, stream), Counter())[
                    record.year
                ] += 1

        pairs = extract_word_pairs(record.title, stopwords)
        terms = [term for term, _ in pairs]
        for term, raw in pairs:
            term_forms.setdefault(term, Counter())[raw] += 1
            term_year_totals.setdefault(term, Counter())[record.year] += 1
        if stream is not None:
            doc = stream_docs.setdefault((stream, record.year), Counter())
            doc.update(terms)
        for author in set(record.authors):
            person_terms.setdefault((author, record.year), Counter()).update(terms)

    # tf-idf over the (stream, year) documents.
    doc_count = len(stream_docs)
    df: Counter = Counter()
    for doc in stream_docs.values():
        df.update(set(doc))

    def word_key(term: str) -> EntityKey:
        return EntityKey("word", term)

    entities: list[EntityRecord] = []
    for name in sorted(person_years):
        years = person_years[name]
        ordered = sorted(years)
        colors = _year_colors(ordered, frame)
        filling = FillingSpec(
            "pie",
            weights=tuple(
                (color, float(years[y])) for color, y in zip(colors, ordered)
            ),
        )
        entities.append(
            EntityRecord(
                key=EntityKey("person", name),
                label=name,
                size_value=float(sum(years.values())),
                tooltip_lines=(
                    name,
                    f"publications: {sum(years.values())}",
                    f"active: {ordered[0]}-{ordered[-1]}",
                ),
                filling=filling,
                activity_periods=frozenset(period_of(y, frame) for y in ordered),
            )
        )
    for stream in sorted(stream_years):
        years = sorted(stream_years[stream])
        entities.append(
            EntityRecord(
                key=EntityKey("stream", stream),
                label=stream.split("/", 1)[1],
                size_value=float(len(years)),
                tooltip_lines=(
                    stream.split("/", 1)[1],
                    f"key: {stream}",
                    f"active years: {len(years)}",
                ),
                filling=FillingSpec(
                    "timecolor", colors=tuple(_year_colors(years, frame))
                ),
                activity_periods=frozenset(period_of(y, frame) for y in years),
            )
        )
    for term in sorted(term_forms):
        forms = term_forms[term]
        top = max(forms.values())
        # Display the most common surface form of the stem, ties alphabetical.
        label = min(form for form, count in forms.items() if count == top)
        total = sum(term_year_totals[term].values())
        entities.append(
            EntityRecord(
                key=word_key(term),
                label=label,
                size_value=float(total),
                tooltip_lines=(label, f"stem: {term}", f"occurrences: {total}"),
                filling=FillingSpec("none"),
                activity_periods=frozenset(
                    period_of(y, frame) for y in term_year_totals[term]
                ),
            )
        )

    def timeline_of(counter: Counter) -> Timeline:
        strengths = [0.0] * frame.period_count
        for year, value in counter.items():
            strengths[period_of(year, frame)] += value
        return Timeline(tuple(strengths))

    relations: list[RelationInstance] = []
    for (a, b), years in sorted(coauthor.items()):
        relations.append(
            RelationInstance(
                ego=EntityKey("person", a),
                alter=EntityKey("person", b),
                relation_type="coauthor",
                timeline=timeline_of(years),
            )
        )
    for (author, stream), years in sorted(person_stream.items()):
        relations.append(
            RelationInstance(
                ego=EntityKey("person", author),
                alter=EntityKey("stream", stream),
                relation_type="person_stream",
                timeline=timeline_of(years),
            )
        )

    stream_term_years: dict[tuple[str, str], dict[int, float]] = {}
    for (stream, year), doc in stream_docs.items():
        for term, count in doc.items():
            weight = count * math.log(doc_count / df[term])
            if weight > 0:
                stream_term_years.setdefault((stream, term), {})[year] = weight
    for (stream, term), years in sorted(stream_term_years.items()):
        strengths = [0.0] * frame.period_count
        for year, weight in years.items():
            strengths[period_of(year, frame)] += weight
        relations.append(
            RelationInstance(
                ego=EntityKey("stream", stream),
                alter=word_key(term),
                relation_type="stream_word",
                timeline=Timeline(tuple(strengths)),
            )
        )

    person_term_years: dict[tuple[str, str], Counter] = {}
    for (author, year), terms in person_terms.items():
        for term, count in terms.items():
            person_term_years.setdefault((author, term), Counter())[year] += count
    for (author, term), years in sorted(person_term_years.items()):
        relations.append(
            RelationInstance(
                ego=EntityKey("person", author),
                alter=word_key(term),
                relation_type="person_word",
                timeline=timeline_of(years),
            )
        )

    return MemoryDataset(frame=frame, entities=entities, relations=relations)

#!/usr/bin/env python3
"""Render the six golden fixture graphs into tests/golden/.

Run after any intentional change to the renderer or the fixtures;
tests/test_acceptance.py compares fresh renders byte for byte against
these files.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from egolens.adapters.dblp import parse_dblp
from egolens.adapters.edgelist import load_edge_list
from egolens.config import load_config
from egolens.service import GraphRequest, GraphService

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

GOLDENS = [
    ("dblp", GraphRequest("person", "Adam", "coauthor", "timecolor"),
     "adam_coauthor_timecolor.svg"),
    ("dblp", GraphRequest("person", "Adam", "coauthor", "intensity"),
     "adam_coauthor_intensity.svg"),
    ("dblp", GraphRequest("person", "Petra", "person_stream", "timecolor"),
     "petra_streams_timecolor.svg"),
    ("dblp", GraphRequest("word", "queri", "word_stream", "intensity"),
     "query_streams_intensity.svg"),
    ("wiki", GraphRequest("admin", "Gil", "edited", "timecolor"),
     "gil_articles_timecolor.svg"),
    ("dblp", GraphRequest("stream", "journals/jsyml", "stream_word", "intensity"),
     "jsyml_words_intensity.svg"),
]


def build_services() -> dict[str, GraphService]:
    with open(DATA / "dblp_fixture.xml", encoding="utf-8") as handle:
        dblp = parse_dblp(handle)
    attrs = (DATA / "wiki_attrs.tsv").read_text(encoding="utf-8")
    with open(DATA / "wiki.tsv", encoding="utf-8") as handle:
        wiki = load_edge_list(handle, period_length=1, attributes=attrs)
    return {
        "dblp": GraphService(dblp, load_config(DATA / "dblp.cfg")),
        "wiki": GraphService(wiki, load_config(DATA / "wiki.cfg")),
    }


def main() -> int:
    services = build_services()
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for dataset, request, filename in GOLDENS:
        body, _ = services[dataset].handle_graph(request)
        (GOLDEN / filename).write_bytes(body)
        print(f"{filename}: {len(body)} bytes")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Regenerate the committed test fixtures (deterministic, seeded).

Writes tests/data/dblp_fixture.xml (exactly 200 bibliographic records)
and tests/data/wiki.tsv + wiki_attrs.tsv (a month-granularity edit log).

The bibliographic fixture is shaped so that:
- Adam has exactly 177 distinct coauthors; Bob 25 joint papers, Jack 1;
  the next ranks are Claire 12, Dave 9, Gina 8, Hank 7, Iris 6, Ken 5,
  Lena 5, Mike 4, Eve 3, everyone else 1.
- Mike's four papers are all joint with Adam; Eve has the largest own
  publication count of the named authors.
- Nicole's cluster produces joint-paper strengths 1..23 in a single year,
  with one coauthor at exactly 23.
- conf/icdt is active only in even years (a biennial conference);
  conf/eik ends in 1994; journals/jsyml runs 1936-2003; the whole corpus
  spans 1936-2010.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from pathlib import Path
from xml.sax.saxutils import escape

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

TOTAL_RECORDS = 200

GENERIC_WORDS = [
    "Graph", "Network", "Index", "Model", "Search", "Stream", "Storage",
    "Optimization", "Evaluation", "Parallel", "Distributed", "Relational",
]


class Corpus:
    def __init__(self) -> None:
        self.records: list[tuple[str, int, tuple[str, ...], str]] = []
        self.key_counts: Counter = Counter()

    def add(self, stream: str, year: int, authors: list[str], title: str) -> None:
        base = "".join(part[0] for part in authors[0].split())[:3] or "X"
        self.key_counts[(stream, year, base)] += 1
        suffix = self.key_counts[(stream, year, base)]
        key = f"{stream}/{base}{year % 100:02d}{'' if suffix == 1 else chr(96 + suffix)}"
        self.records.append((key, year, tuple(authors), title))


def adam_cluster(corpus: Corpus, rng: random.Random) -> None:
    years = [y for y in range(1980, 2010) if y not in (1984, 1989, 1996, 2003)]
    record_years = sorted(rng.choice(years) for _ in range(35))

    named = {
        "Bob": list(range(0, 25)),
        "Jack": [32],
        "Claire": list(range(23, 35)),
        "Dave": list(range(0, 9)),
        "Gina": [2, 6, 10, 14, 18, 22, 26, 30],
        "Hank": [1, 5, 9, 13, 17, 21, 25],
        "Iris": [4, 8, 16, 20, 28, 33],
        "Ken": [3, 11, 19, 27, 34],
        "Lena": [7, 12, 15, 24, 31],
        "Mike": [26, 29, 31, 33],
        "Eve": [10, 20, 30],
    }
    fresh_total = 177 - len(named)
    base, extra = divmod(fresh_total, 35)
    fresh_counter = 0
    streams = ["conf/vldb", "conf/sigmod", "journals/tods"]
    for i, year in enumerate(record_years):
        authors = ["Adam"]
        authors += [name for name, slots in named.items() if i in slots]
        take = base + (1 if i < extra else 0)
        for _ in range(take):
            fresh_counter += 1
            authors.append(f"Carl Moor {fresh_counter:03d}")
        w1, w2 = rng.choice(GENERIC_WORDS), rng.choice(GENERIC_WORDS)
        corpus.add(
            streams[i % 3], year, authors,
            f"{w1} {w2} Processing in Large Systems",
        )


def nicole_cluster(corpus: Corpus, rng: random.Random) -> None:
    # Record j contains Nicole and partners j..23, so partner i co-occurs
    # with Nicole in exactly i records, all in 2005.
    for j in range(1, 24):
        authors = ["Nicole"] + [f"Nina Petersen {i:02d}" for i in range(j, 24)]
        w = rng.choice(GENERIC_WORDS)
        corpus.add("conf/cikm", 2005, authors, f"{w} Techniques for Data Streams")


def petra_cluster(corpus: Corpus, rng: random.Random) -> None:
    venues = {
        "conf/eik": [1988, 1990, 1991, 1993],
        "conf/mfcs": [1990, 1993, 1995],
        "conf/stacs": [1991, 1994, 1996, 1998],
        "conf/siguccs": [2004, 2006, 2008],
    }
    for stream, years in venues.items():
        for year in years:
            w = rng.choice(GENERIC_WORDS)
            corpus.add(stream, year, ["Petra"], f"{w} Methods for Automata Theory")
    # eik is discontinued after 1994; one non-Petra record marks its end.
    corpus.add("conf/eik", 1994, ["Rudolf Mayer"], "Automata and Formal Languages")


def icdt_series(corpus: Corpus, rng: random.Random) -> None:
    extras = ["Constraint", "Datalog", "View", "Schema", "Transaction", "Index"]
    for i, year in enumerate(range(1988, 2011, 2)):
        authors = [f"Dana Reed {i % 4}", f"Theo Klein {i % 3}"]
        corpus.add(
            "conf/icdt", year, authors,
            f"Query Evaluation and {extras[i % len(extras)]} Databases",
        )


def jsyml_series(corpus: Corpus, rng: random.Random) -> None:
    years = [y for y in range(1936, 2004) if y % 9 != 4]
    logicians = [f"Kurt Abel {i}" for i in range(6)]
    for i, year in enumerate(years):
        if year >= 1970:
            # Eve's long solo run makes her the most active named author.
            authors = ["Eve"]
            if i % 4 == 0:
                authors.append(logicians[i % 6])
        else:
            authors = [logicians[i % 6]]
            if i % 3 == 0:
                authors.append(logicians[(i + 1) % 6])
        words = ["Logic", "Theory"]
        if year <= 1965:
            words.append("Meeting" if i % 2 == 0 else "Symbolic")
        if year >= 1970:
            words.append("Cardinality")
        title = f"On the {words[-1]} of {words[0]} and Proof {words[1]}"
        corpus.add("journals/jsyml", year, authors, title)


def filler(corpus: Corpus, rng: random.Random, count: int) -> None:
    streams = ["conf/mfcs", "conf/stacs", "conf/pods", "journals/tods"]
    scholars = [f"Sol Tanaka {i:02d}" for i in range(18)]
    for i in range(count):
        stream = streams[i % len(streams)]
        year = 1999 + (i * 7) % 12  # 1999..2010
        authors = [scholars[(2 * i) % 18]]
        if i % 3 != 0:
            authors.append(scholars[(2 * i + 5) % 18])
        w1 = GENERIC_WORDS[i % len(GENERIC_WORDS)]
        w2 = GENERIC_WORDS[(i + 5) % len(GENERIC_WORDS)]
        corpus.add(stream, year, authors, f"{w1} {w2} Systems and Query Models")
    # one homonym pair for search tests
    corpus.add("conf/pods", 2007, ["Adam 0002"], "Storage Models for Graph Systems")


def write_dblp(corpus: Corpus, path: Path) -> None:
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<dblp>"]
    for key, year, authors, title in corpus.records:
        tag = "article" if key.startswith("journals/") else "inproceedings"
        lines.append(f'<{tag} key="{escape(key)}" mdate="2010-01-01">')
        for author in authors:
            lines.append(f"<author>{escape(author)}</author>")
        lines.append(f"<title>{escape(title)}.</title>")
        lines.append(f"<year>{year}</year>")
        lines.append(f"</{tag}>")
    lines.append("</dblp>")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def verify(corpus: Corpus) -> None:
    assert len(corpus.records) == TOTAL_RECORDS, len(corpus.records)
    keys = [r[0] for r in corpus.records]
    assert len(set(keys)) == len(keys), "record keys must be unique"

    joint = Counter()
    for _, year, authors, _ in corpus.records:
        if "Adam" in authors:
            for other in set(authors) - {"Adam"}:
                joint[other] += 1
    assert len(joint) == 177, f"Adam has {len(joint)} coauthors"
    expected = {
        "Bob": 25, "Claire": 12, "Dave": 9, "Gina": 8, "Hank": 7,
        "Iris": 6, "Ken": 5, "Lena": 5, "Mike": 4, "Eve": 3, "Jack": 1,
    }
    for name, count in expected.items():
        assert joint[name] == count, (name, joint[name])
    others = {n: c for n, c in joint.items() if n not in expected}
    assert all(c == 1 for c in others.values())

    mike_total = sum(1 for _, _, authors, _ in corpus.records if "Mike" in authors)
    assert mike_total == 4, "all of Mike's work is joint with Adam"
    eve_total = sum(1 for _, _, authors, _ in corpus.records if "Eve" in authors)
    assert eve_total > 25, f"Eve must out-publish Bob, has {eve_total}"

    nicole = Counter()
    for _, year, authors, _ in corpus.records:
        if "Nicole" in authors:
            assert year == 2005
            for other in set(authors) - {"Nicole"}:
                nicole[other] += 1
    assert sorted(nicole.values()) == list(range(1, 24))

    years = [r[1] for r in corpus.records]
    assert min(years) == 1936 and max(years) == 2010
    icdt_years = {r[1] for r in corpus.records if r[0].startswith("conf/icdt/")}
    assert all(y % 2 == 0 for y in icdt_years)
    eik_years = {r[1] for r in corpus.records if r[0].startswith("conf/eik/")}
    assert max(eik_years) == 1994


MONTHS: list[tuple[int, int]] = [
    (year, month) for year in range(2001, 2010) for month in range(1, 13)
][:102]  # Jan 2001 .. Jun 2009


def month_stamp(year: int, month: int) -> int:
    return year * 12 + (month - 1)


def write_wiki(path: Path, attrs_path: Path, rng: random.Random) -> None:
    pages = [
        ("article", "Berlin", "Berlin"),
        ("article", "Physik", "Physik"),
        ("article", "Mathematik", "Mathematik"),
        ("userpage", "User:Tom", "User:Tom"),
        ("adminpage", "Loeschkandidaten", "Löschkandidaten"),
        ("article", "Informatik", "Informatik"),
    ]
    editors = [("admin", "Gil", "Gil"), ("user", "Tom", "Tom"), ("anon", "84.57.1.2", "84.57.1.2")]
    rows = []
    for etype, eid, elabel in editors:
        page_count = 6 if eid == "Gil" else 3
        for ptype, pid, plabel in pages[:page_count]:
            edits = rng.randint(2, 12)
            for _ in range(edits):
                year, month = MONTHS[rng.randrange(len(MONTHS))]
                rows.append(
                    (etype, eid, elabel, ptype, pid, plabel,
                     "edited", month_stamp(year, month), 1)
                )
    # pin the frame to the full Jan 2001 .. Jun 2009 range
    rows.append(("admin", "Gil", "Gil", "article", "Berlin", "Berlin",
                 "edited", month_stamp(2001, 1), 1))
    rows.append(("admin", "Gil", "Gil", "article", "Informatik", "Informatik",
                 "edited", month_stamp(2009, 6), 1))

    header = "ego_type\tego_id\tego_label\talter_type\talter_id\talter_label\trelation\tstamp\tweight"
    lines = [header] + ["\t".join(str(f) for f in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    colors = {"article": "#3b6fd4", "userpage": "#2d8a4e", "adminpage": "#c44536"}
    attr_lines = ["type\tid\tsize_value\tfilling_spec\ttooltip"]
    for ptype, pid, plabel in pages:
        attr_lines.append(
            "\t".join(
                (ptype, pid, "20", f"solid:{colors[ptype]}", f"{plabel}|{ptype}")
            )
        )
    attr_lines.append("admin\tGil\t60\tnone\tGil|administrator")
    attrs_path.write_text("\n".join(attr_lines) + "\n", encoding="utf-8")


def main() -> int:
    rng = random.Random(19362010)
    corpus = Corpus()
    adam_cluster(corpus, rng)
    nicole_cluster(corpus, rng)
    petra_cluster(corpus, rng)
    icdt_series(corpus, rng)
    jsyml_series(corpus, rng)
    used = len(corpus.records)
    filler(corpus, rng, TOTAL_RECORDS - used - 1)  # -1 for the homonym record
    verify(corpus)

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write_dblp(corpus, OUT_DIR / "dblp_fixture.xml")
    write_wiki(OUT_DIR / "wiki.tsv", OUT_DIR / "wiki_attrs.tsv", rng)
    print(f"wrote {len(corpus.records)} records to {OUT_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Edge-list loading, filling-spec strings, snapshots, and the dataset contract."""

from __future__ import annotations

import io

import pytest

from egolens.adapters.base import MemoryDataset, RelationDescriptor
from egolens.adapters.edgelist import load_edge_list, serialize_dataset
from egolens.adapters.fillspec import format_filling, parse_filling
from egolens.adapters.snapshot import load_snapshot, save_snapshot
from egolens.errors import DataError, NotFoundError
from egolens.model import EntityKey, FillingSpec


def edge_text(rows: list[tuple]) -> str:
    header = "ego_type\tego_id\tego_label\talter_type\talter_id\talter_label\trelation\tstamp\tweight"
    lines = [header] + ["\t".join(str(f) for f in row) for row in rows]
    return "\n".join(lines) + "\n"


def person_row(a, b, stamp, weight=1, relation="coauthor"):
    return ("person", a, a, "person", b, b, relation, stamp, weight)


class TestLoadEdgeList:
    def test_duplicate_rows_aggregate(self):
        text = edge_text([person_row("A", "B", 2005), person_row("A", "B", 2005)])
        dataset = load_edge_list(text, period_length=1)
        (rel,) = dataset.neighbors(EntityKey("person", "A"), "coauthor")
        assert rel.timeline.total() == 2
        assert rel.timeline.strengths[period_index(dataset, 2005)] == 2

    def test_frame_spans_min_to_max_stamp(self):
        text = edge_text(
            [person_row("A", "B", 1936), person_row("C", "D", 2010)]
        )
        dataset = load_edge_list(text, period_length=1)
        assert dataset.time_frame().period_count == 75

    def test_mirrored_neighbors_share_the_timeline(self):
        text = edge_text([person_row("A", "B", 2000, 3)])
        dataset = load_edge_list(text, period_length=1)
        (ab,) = dataset.neighbors(EntityKey("person", "A"), "coauthor")
        (ba,) = dataset.neighbors(EntityKey("person", "B"), "coauthor")
        assert ab.timeline == ba.timeline
        assert ab.alter == EntityKey("person", "B")
        assert ba.alter == EntityKey("person", "A")

    def test_both_directions_in_input_sum_like_duplicates(self):
        # The format lists each undirected pair once; redundant mirror rows
        # therefore count twice.
        text = edge_text([person_row("A", "B", 2000), person_row("B", "A", 2000)])
        dataset = load_edge_list(text, period_length=1)
        (rel,) = dataset.neighbors(EntityKey("person", "A"), "coauthor")
        assert rel.timeline.total() == 2

    def test_no_relations_is_an_error(self):
        with pytest.raises(DataError, match="no relations"):
            load_edge_list(edge_text([]), period_length=1)

    def test_malformed_row_reports_line_number(self):
        text = edge_text([person_row("A", "B", 2000)]) + "broken\tline\n"
        with pytest.raises(DataError, match="line 3"):
            load_edge_list(text, period_length=1)

    def test_bad_weight_rejected(self):
        with pytest.raises(DataError, match="positive"):
            load_edge_list(edge_text([person_row("A", "B", 2000, 0)]), 1)
        with pytest.raises(DataError, match="not a number"):
            load_edge_list(edge_text([person_row("A", "B", 2000, "x")]), 1)

    def test_bad_stamp_rejected(self):
        with pytest.raises(DataError, match="not an integer"):
            load_edge_list(edge_text([person_row("A", "B", "soon")]), 1)

    def test_attribute_file_overrides_defaults(self):
        text = edge_text([person_row("A", "B", 2000)])
        attrs = (
            "type\tid\tsize_value\tfilling_spec\ttooltip\n"
            "person\tA\t42\tfraction:0.25:green\tAlpha|42 papers\n"
        )
        dataset = load_edge_list(text, 1, attributes=attrs)
        record = dataset.entity(EntityKey("person", "A"))
        assert record.size_value == 42
        assert record.filling == FillingSpec("fraction", fraction=0.25, color="green")
        assert record.tooltip_lines == ("Alpha", "42 papers")
        # B keeps derived defaults.
        other = dataset.entity(EntityKey("person", "B"))
        assert other.size_value == 1
        assert other.filling == FillingSpec("none")

    def test_activity_periods_derived_from_relations(self):
        text = edge_text(
            [person_row("A", "B", 2000), person_row("A", "C", 2004)]
        )
        dataset = load_edge_list(text, period_length=1)
        record = dataset.entity(EntityKey("person", "A"))
        assert record.activity_periods == {0, 4}

    def test_month_granularity(self):
        rows = [person_row("A", "B", 2001 * 12 + 0), person_row("A", "B", 2009 * 12 + 5)]
        dataset = load_edge_list(edge_text(rows), period_length=1)
        assert dataset.time_frame().period_count == 102

    def test_round_trip_is_identity(self):
        text = edge_text(
            [
                person_row("A", "B", 2000, 2),
                person_row("A", "B", 2003, 1),
                person_row("A", "C", 2001, 5),
                ("person", "A", "A", "stream", "conf/x", "x", "venue", 2002, 1),
            ]
        )
        attrs = (
            "type\tid\tsize_value\tfilling_spec\ttooltip\n"
            "person\tA\t7\tpie:red=1,blue=2\tAlpha\n"
            "stream\tconf/x\t3\tpresence:101:blue\tX conf\n"
        )
        dataset = load_edge_list(text, 1, attributes=attrs)
        edges_out, attrs_out = serialize_dataset(dataset)
        reloaded = load_edge_list(edges_out, 1, attributes=attrs_out)
        assert reloaded == dataset


def period_index(dataset: MemoryDataset, stamp: int) -> int:
    frame = dataset.time_frame()
    return (stamp - frame.origin) // frame.period_length


class TestFillingStrings:
    @pytest.mark.parametrize(
        "text,variant",
        [
            ("none", "none"),
            ("solid:#d62728", "solid"),
            ("fraction:0.4", "fraction"),
            ("fraction:0.4:green", "fraction"),
            ("pie:red=2,blue=1", "pie"),
            ("timecolor:#a00,#0a0,#00a", "timecolor"),
            ("presence:101101", "presence"),
            ("presence:101101:blue", "presence"),
        ],
    )
    def test_round_trip(self, text, variant):
        spec = parse_filling(text)
        assert spec.variant == variant
        assert parse_filling(format_filling(spec)) == spec

    def test_presence_bits(self):
        spec = parse_filling("presence:101101:blue")
        assert spec.booleans == (True, False, True, True, False, True)
        assert spec.color == "blue"

    @pytest.mark.parametrize(
        "bad",
        [
            "sparkle:1",
            "fraction:1.5",
            "fraction:x",
            "pie:",
            "pie:red=-1",
            "presence:10x",
            "solid",
            "none:blue",
        ],
    )
    def test_bad_specs_rejected(self, bad):
        with pytest.raises(DataError):
            parse_filling(bad)


class TestMemoryDataset:
    def build(self) -> MemoryDataset:
        text = edge_text(
            [
                person_row("Adam", "Bob", 2000, 3),
                person_row("Adam", "Adamson", 2001, 1),
                ("person", "Adam", "Adam", "stream", "conf/x", "x", "venue", 2002, 1),
            ]
        )
        return load_edge_list(text, period_length=1)

    def test_entity_lookup_and_not_found(self):
        dataset = self.build()
        assert dataset.entity(EntityKey("person", "Adam")).label == "Adam"
        with pytest.raises(NotFoundError):
            dataset.entity(EntityKey("person", "Nobody"))

    def test_relation_types_lists_targets(self):
        dataset = self.build()
        descriptors = dataset.relation_types("person")
        assert (
            RelationDescriptor(name="coauthor", label="coauthor", target_type="person")
            in descriptors
        )
        assert any(d.name == "venue" and d.target_type == "stream" for d in descriptors)
        assert [d.name for d in dataset.relation_types("stream")] == ["venue"]

    def test_search_tiers(self):
        dataset = self.build()
        results = dataset.search("adam")
        assert results[0] == EntityKey("person", "Adam")  # exact before prefix
        assert results[1] == EntityKey("person", "Adamson")
        assert dataset.search("zzz") == []
        assert dataset.search("o") == [
            EntityKey("person", "Adamson"),
            EntityKey("person", "Bob"),
        ]

    def test_search_results_resolve(self):
        dataset = self.build()
        for key in dataset.search("a", limit=50):
            dataset.entity(key)

    def test_search_limit(self):
        dataset = self.build()
        assert len(dataset.search("a", limit=2)) == 2

    def test_duplicate_relation_rejected(self):
        from egolens.model import RelationInstance, Timeline, build_time_frame

        frame = build_time_frame(2000, 2001, 1)
        a = EntityKey("person", "A")
        b = EntityKey("person", "B")
        from egolens.model import EntityRecord

        entities = [
            EntityRecord(key=a, label="A"),
            EntityRecord(key=b, label="B"),
        ]
        rel = RelationInstance(a, b, "coauthor", Timeline((1.0, 0.0)))
        mirrored = RelationInstance(b, a, "coauthor", Timeline((1.0, 0.0)))
        with pytest.raises(DataError, match="duplicate relation"):
            MemoryDataset(frame, entities, [rel, mirrored])

    def test_all_zero_timeline_rejected(self):
        from egolens.model import EntityRecord, RelationInstance, Timeline, build_time_frame

        frame = build_time_frame(2000, 2001, 1)
        a = EntityKey("person", "A")
        b = EntityKey("person", "B")
        entities = [EntityRecord(key=a, label="A"), EntityRecord(key=b, label="B")]
        rel = RelationInstance(a, b, "coauthor", Timeline((0.0, 0.0)))
        with pytest.raises(DataError, match="all-zero"):
            MemoryDataset(frame, entities, [rel])


class TestSnapshot:
    def test_round_trip(self, tmp_path):
        text = edge_text(
            [
                person_row("A", "B", 2000, 2),
                ("person", "A", "A", "stream", "conf/x", "x", "venue", 2001, 1.5),
            ]
        )
        dataset = load_edge_list(text, period_length=1)
        path = tmp_path / "data.egol"
        save_snapshot(dataset, path)
        assert path.read_bytes()[:4] == b"EGOL"
        assert load_snapshot(path) == dataset

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "data.egol"
        path.write_bytes(b"NOPE" + bytes([1]))
        with pytest.raises(DataError, match="magic"):
            load_snapshot(path)

    def test_truncation_detected(self, tmp_path):
        text = edge_text([person_row("A", "B", 2000)])
        dataset = load_edge_list(text, period_length=1)
        path = tmp_path / "data.egol"
        save_snapshot(dataset, path)
        path.write_bytes(path.read_bytes()[:-3])
        with pytest.raises(DataError, match="truncated"):
            load_snapshot(path)

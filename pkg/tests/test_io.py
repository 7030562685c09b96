import csv
import logging

import pytest

import logabstract as la
from logabstract.errors import EvaluationError


def write_truth_csv(path, rows, header=("LineId", "Content", "EventId", "EventTemplate")):
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


class TestLoadGroundTruth:
    def test_rows_become_line_ordered_entries(self, tmp_path):
        path = write_truth_csv(tmp_path / "t.csv", [
            [1, "jk2_init() Found child 1566 in scoreboard slot 0", "E1",
             "jk2_init() Found child <*> in scoreboard slot <*>"],
            [2, "workerEnv.init() ok /etc/httpd/conf/workers2.properties", "E2",
             "workerEnv.init() ok <*>"],
        ])
        truth = la.load_ground_truth(path)
        assert len(truth) == 2
        assert truth.event_ids == {1: "E1", 2: "E2"}
        assert truth.templates[1] == "jk2_init() Found child <*> in scoreboard slot <*>"
        assert truth.ordered_contents()[1] == "workerEnv.init() ok /etc/httpd/conf/workers2.properties"

    def test_empty_file_after_header(self, tmp_path):
        truth = la.load_ground_truth(write_truth_csv(tmp_path / "t.csv", []))
        assert len(truth) == 0

    def test_extra_columns_ignored_and_order_defines_line_id(self, tmp_path):
        path = write_truth_csv(
            tmp_path / "t.csv",
            [["x", "9", "c1", "E9", "tpl", "extra"], ["y", "3", "c2", "E3", "tpl", "extra"]],
            header=("Date", "LineId", "Content", "EventId", "EventTemplate", "Junk"),
        )
        truth = la.load_ground_truth(path)
        assert truth.contents == {1: "c1", 2: "c2"}

    def test_missing_required_column(self, tmp_path):
        path = write_truth_csv(tmp_path / "t.csv", [], header=("Content", "EventId"))
        with pytest.raises(EvaluationError, match="EventTemplate"):
            la.load_ground_truth(path)

    def test_malformed_row_reports_its_number(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("Content,EventId,EventTemplate\nok,E1,t\nshort\n", encoding="utf-8")
        with pytest.raises(EvaluationError, match="row 2"):
            la.load_ground_truth(path)

    def test_inconsistent_event_templates_warn_with_event_id(self, tmp_path, caplog):
        path = write_truth_csv(tmp_path / "t.csv", [
            [1, "a blk_1", "E7", "a <*>"],
            [2, "a blk_2", "E7", "a blk_<*>"],
        ])
        with caplog.at_level(logging.WARNING, logger="logabstract.io"):
            truth = la.load_ground_truth(path)
        assert len(truth) == 2
        assert any("E7" in r.message for r in caplog.records)

    def test_quoted_fields_round_trip(self, tmp_path):
        content = 'said "hi", then left'
        path = write_truth_csv(tmp_path / "t.csv", [[1, content, "E1", "said <*>"]])
        truth = la.load_ground_truth(path)
        assert truth.contents[1] == content


class TestWriters:
    def test_structured_rows_in_line_order(self, tmp_path, golden_result):
        path = la.write_structured(tmp_path / "out.csv", golden_result.records, golden_result.store)
        with path.open(newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["LineId", "Content", "EventId", "EventTemplate"]
        assert rows[1] == [
            "1",
            "PacketResponder 1 for block blk_38865049064139660 terminating",
            "T0001",
            "PacketResponder <*> for block <*> terminating",
        ]
        assert len(rows) == 13
        assert path.read_text(encoding="utf-8").endswith("\n")

    def test_templates_table(self, tmp_path, golden_result):
        path = la.write_templates(tmp_path / "templates.csv", golden_result.store.templates)
        with path.open(newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["EventId", "EventTemplate", "Occurrences"]
        assert [r[0] for r in rows[1:]] == ["T0001", "T0002", "T0003"]
        assert sum(int(r[2]) for r in rows[1:]) == 12

    def test_empty_run_writes_header_only(self, tmp_path, hdfs_config):
        result = la.parse_raw_lines([], hdfs_config)
        path = la.write_structured(tmp_path / "empty.csv", result.records, result.store)
        assert path.read_text(encoding="utf-8") == "LineId,Content,EventId,EventTemplate\n"
        tpath = la.write_templates(tmp_path / "templates.csv", result.store.templates)
        assert tpath.read_text(encoding="utf-8") == "EventId,EventTemplate,Occurrences\n"

    def test_structured_round_trip_as_ground_truth(self, tmp_path, golden_result):
        path = la.write_structured(tmp_path / "out.csv", golden_result.records, golden_result.store)
        truth = la.load_ground_truth(path)
        assert len(truth) == 12
        assert truth.contents[1] == golden_result.records[0].content
        assert truth.event_ids[10] == golden_result.store.assignment[10]

    def test_byte_determinism_across_runs(self, tmp_path, golden_lines, hdfs_config):
        a = la.parse_raw_lines(golden_lines, hdfs_config)
        b = la.parse_raw_lines(list(golden_lines), hdfs_config)
        pa = la.write_structured(tmp_path / "a.csv", a.records, a.store)
        pb = la.write_structured(tmp_path / "b.csv", b.records, b.store)
        assert pa.read_bytes() == pb.read_bytes()

    def test_no_partial_file_left_behind(self, tmp_path, golden_result):
        target = tmp_path / "sub" / "out.csv"
        la.write_structured(target, golden_result.records, golden_result.store)
        leftovers = [p for p in target.parent.iterdir() if p.name != "out.csv"]
        assert leftovers == []

    def test_report_and_tables(self, tmp_path):
        from logabstract.io import write_report, write_stabilization, write_timings

        report = la.EvaluationReport(precision=1.0, recall=1.0, f1=1.0, matching_accuracy=0.5)
        path = write_report(tmp_path / "report.json", report)
        import json
        data = json.loads(path.read_text())
        assert data["f1"] == 1.0
        assert data["matching_accuracy"] == 0.5

        spath = write_stabilization(tmp_path / "s.csv", [(0.05, 1, 3, 1 / 3)])
        assert spath.read_text().splitlines()[0] == "fraction,templates_found,templates_total,ratio"
        tpath = write_timings(tmp_path / "t.csv", [(10000, 1.25)])
        assert tpath.read_text().splitlines()[1] == "10000,1.250000"

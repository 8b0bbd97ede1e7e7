"""
Tests for latticeineq.report (deterministic JSON and CSV reports)
"""
import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pytest

from latticeineq.report import emit_report, normalize, parse_report, write_report
from latticeineq.reports import CheckResult, QuotientReport
from latticeineq.run_config import RunConfig


# --- Fixtures ---

@pytest.fixture
def config() -> RunConfig:
    """A tables run with a fixed seed."""
    return RunConfig(command="tables", seed=3)


@pytest.fixture
def rows():
    """Two heterogeneous result rows."""
    return [{"a": 1, "b": {"c": 2.0}}, {"a": 2, "d": [1, 2]}]


@dataclass
class _Pair:
    left: int
    right: float


class TestNormalize:
    """Tests for normalize."""

    def test_scalars(self):
        assert normalize(1.5) == "1.500000000000e+00"
        assert normalize(math.inf) == "inf"
        assert normalize(-math.inf) == "-inf"
        assert normalize(math.nan) == "nan"
        assert normalize(Fraction(1, 3)) == "1/3"
        assert normalize(True) is True
        assert normalize(np.int64(3)) == 3
        assert normalize(np.bool_(False)) is False

    def test_complex(self):
        assert normalize(1 + 2j) == ["1.000000000000e+00", "2.000000000000e+00"]

    def test_report_objects(self):
        report = QuotientReport.build("x", 2.0, 1.0, 0.25)
        assert normalize(report)["holds"] is True
        assert normalize(_Pair(1, 0.5)) == {"left": 1, "right": "5.000000000000e-01"}

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            normalize(object())


class TestEmitJson:
    """Tests for JSON reports."""

    def test_empty(self):
        assert emit_report([]) == b"[]\n"

    def test_deterministic(self, rows):
        assert emit_report(rows) == emit_report(rows)

    def test_round_trip_values(self, rows):
        parsed = parse_report(emit_report(rows))
        assert parsed[0]["b"]["c"] == 2.0
        assert parsed[1]["d"] == [1, 2]

    def test_special_values(self):
        parsed = parse_report(emit_report([{"x": math.inf, "q": Fraction(1, 3)}]))
        assert parsed[0]["x"] == math.inf
        assert parsed[0]["q"] == "1/3"

    def test_config_embedded(self, config):
        doc = parse_report(emit_report([CheckResult("t.x", "demo", True)], config))
        assert doc["seed"] == 3
        assert doc["config"]["command"] == "tables"
        assert doc["config"]["pvalues"][-1] == math.inf
        assert doc["results"][0]["check_id"] == "t.x"
        assert "witness" not in doc["results"][0]


class TestEmitCsv:
    """Tests for CSV reports."""

    def test_flattened_columns(self, rows):
        text = emit_report(rows, fmt="csv").decode("utf-8")
        assert text.splitlines()[0] == "a,b.c,d"
        parsed = list(csv.DictReader(io.StringIO(text)))
        assert len(parsed) == 2
        assert parsed[0]["b.c"] == "2.000000000000e+00"
        assert parsed[1]["b.c"] == ""
        assert json.loads(parsed[1]["d"]) == [1, 2]

    def test_config_columns(self, rows, config):
        text = emit_report(rows, config, "csv").decode("utf-8")
        parsed = list(csv.DictReader(io.StringIO(text)))
        assert all(r["command"] == "tables" and r["seed"] == "3" for r in parsed)

    def test_table_blocks(self):
        """Rows tagged with a table go to separate blocks in key order."""
        rows = [
            {"table": "a", "y": 1, "x": 2},
            {"table": "b", "k": 5},
            {"table": "a", "y": 3, "x": 4},
        ]
        text = emit_report(rows, fmt="csv").decode("utf-8")
        assert text == "y,x\n1,2\n3,4\n\nk\n5\n"

    def test_table_blocks_with_config(self, config):
        text = emit_report([{"table": "a", "y": 1}], config, "csv").decode("utf-8")
        assert text.splitlines() == ["y,command,seed", "1,tables,3"]

    def test_scalar_rows(self):
        text = emit_report([1, 2], fmt="csv").decode("utf-8")
        assert text.splitlines() == ["value", "1", "2"]

    def test_unknown_format(self, rows):
        with pytest.raises(ValueError, match="Unknown format"):
            emit_report(rows, fmt="xml")


class TestWriteReport:
    """Tests for write_report."""

    def test_file(self, tmp_path):
        path = tmp_path / "out" / "report.json"
        write_report(b"[]\n", str(path))
        assert path.read_bytes() == b"[]\n"
        assert not (tmp_path / "out" / "report.json.tmp").exists()

    def test_overwrite(self, tmp_path):
        path = tmp_path / "report.json"
        write_report(b"old\n", str(path))
        write_report(b"new\n", str(path))
        assert path.read_bytes() == b"new\n"

    def test_stdout(self, capsys):
        write_report(b"[]\n")
        assert capsys.readouterr().out == "[]\n"

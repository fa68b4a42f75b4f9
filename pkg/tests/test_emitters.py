"""Tests for the CSV and SVG emitters."""

import argparse
import importlib
import os
from pathlib import Path
import xml.etree.ElementTree as ET

import pytest

from src.emitters._IEmitter import IEmitter
from src.emitters.csv.table import CsvTableEmitter, emit_csv, parse_csv, render_csv
from src.emitters.svg import emit_svg
from src.emitters.svg.heatmap import SvgHeatmapEmitter
from src.errors import OutputError, ShapeMismatch
from src.SweepRunner import ResultTable
from src.utils import format_number, get_all_process_types


@pytest.fixture
def line_table():
    return ResultTable(
        columns=["delta_over_kappa", "g2_numeric", "log10_g2_numeric", "error_code"],
        rows=[[-1.0, 0.01, -2.0, 0.0], [1.0, 0.123456789012345, -0.908485, 0.0]],
        metadata={"tool": "UPB Lab", "created": "2026-01-01 00:00:00", "units": "kappa = 1"},
        shape=(2,),
    )


@pytest.fixture
def map_table():
    rows = [[x, y, 0.5, -0.30103, 0.0] for x in (-1.0, 0.0, 1.0) for y in (-0.5, 0.5)]
    return ResultTable(
        columns=["delta_over_kappa", "phi_over_pi", "g2_numeric", "log10_g2_numeric", "error_code"],
        rows=rows,
        shape=(3, 2),
    )


class TestCsv:
    def test_layout(self, line_table):
        lines = render_csv(line_table).splitlines()
        assert lines[0] == "# tool: UPB Lab"
        assert "# shape: 2" in lines
        assert lines[-3] == "delta_over_kappa,g2_numeric,log10_g2_numeric,error_code"
        assert lines[-1] == "1,0.123456789012,-0.908485,0"

    def test_reproducible_drops_timestamp(self, line_table):
        assert "created" in render_csv(line_table)
        assert "created" not in render_csv(line_table, reproducible=True)

    def test_header_only(self):
        table = ResultTable(columns=["delta_over_kappa", "error_code"], rows=[], metadata={"tool": "x"}, shape=(0,))
        lines = render_csv(table).splitlines()
        assert lines == ["# tool: x", "# shape: 0", "delta_over_kappa,error_code"]

    def test_parse_back(self, line_table, tmp_path):
        path = str(tmp_path / "line.csv")
        emit_csv(line_table, path)
        parsed = parse_csv(path)
        assert parsed.columns == line_table.columns
        assert parsed.shape == (2,)
        assert parsed.metadata == line_table.metadata
        assert parsed.rows == [[float(format_number(value)) for value in row] for row in line_table.rows]
        assert parsed.rows[1][1] == 0.123456789012

    def test_ragged_rows(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b\n1,2\n3\n", encoding="utf-8")
        with pytest.raises(ShapeMismatch):
            parse_csv(str(path))

    def test_unwritable(self, line_table, tmp_path):
        with pytest.raises(OutputError):
            emit_csv(line_table, str(tmp_path / "missing" / "out.csv"))

    def test_emitter_class(self, line_table, tmp_path):
        args = argparse.Namespace(reproducible=True)
        CsvTableEmitter(args, str(tmp_path / "out.csv")).create(line_table)
        assert "created" not in (tmp_path / "out.csv").read_text(encoding="utf-8")


class TestSvg:
    def test_line(self, line_table, tmp_path):
        path = tmp_path / "line.svg"
        emit_svg(line_table, str(path), "line")
        root = ET.parse(path).getroot()
        assert root.tag.endswith("svg")

    def test_line_is_reproducible(self, line_table, tmp_path):
        emit_svg(line_table, str(tmp_path / "a.svg"), "line")
        emit_svg(line_table, str(tmp_path / "b.svg"), "line")
        assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()

    def test_heatmap(self, map_table, tmp_path):
        args = argparse.Namespace()
        SvgHeatmapEmitter(args, str(tmp_path / "map.svg")).create(map_table)
        assert ET.parse(tmp_path / "map.svg").getroot().tag.endswith("svg")

    def test_shape_checks(self, line_table, map_table, tmp_path):
        with pytest.raises(ShapeMismatch):
            emit_svg(line_table, str(tmp_path / "x.svg"), "heatmap")
        with pytest.raises(ShapeMismatch):
            emit_svg(map_table, str(tmp_path / "x.svg"), "line")
        with pytest.raises(ShapeMismatch):
            emit_svg(line_table, str(tmp_path / "x.svg"), "contour")

    def test_failed_cells_skipped(self, map_table, tmp_path):
        map_table.rows[0][-1] = 30.0
        emit_svg(map_table, str(tmp_path / "map.svg"), "heatmap")
        assert (tmp_path / "map.svg").stat().st_size > 0


@pytest.mark.parametrize("name", ["csv.table", "svg.line", "svg.heatmap"])
def test_plugin_contract(name):
    emitters_dir = os.path.join(Path(__file__).parent.parent, "src", "emitters")
    assert name in get_all_process_types(emitters_dir)

    module = importlib.import_module("src.emitters." + name)
    parser = argparse.ArgumentParser()
    module.setup_args(parser)

    assert module.help()
    assert issubclass(module.get_class(), IEmitter)
    assert module.file_extention() == name.split(".")[0]
    assert parser.parse_args([]) == argparse.Namespace()


def test_emitter_reads_reproducible_flag(tmp_path, capsys):
    emitter = SvgHeatmapEmitter(argparse.Namespace(reproducible=True), str(tmp_path / "map.svg"))
    emitter.announce()
    assert emitter.reproducible
    assert "map.svg" in capsys.readouterr().out

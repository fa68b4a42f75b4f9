"""Tests for parsing helpers and plug-in discovery."""

import os
from pathlib import Path

import pytest

from src.errors import InvalidConfig
from src.utils import (
    filler,
    format_number,
    get_all_process_types,
    parse_axis,
    parse_bool,
    parse_config_file,
    parse_config_text,
    parse_float,
    parse_int,
    parse_list,
)

EMITTERS = os.path.join(Path(__file__).parent.parent, "src", "emitters")


class TestConfigText:
    def test_entries(self):
        text = """
        # fig6a-like sweep
        drive = atom
        DELTA=1   # design detuning
        axis1 = chi,0.05,3,241
        """
        assert parse_config_text(text) == {"drive": "atom", "delta": "1", "axis1": "chi,0.05,3,241"}

    def test_later_keys_win(self):
        assert parse_config_text("chi = 1\nchi = 2") == {"chi": "2"}

    def test_malformed_line(self):
        with pytest.raises(InvalidConfig, match="run.cfg:2"):
            parse_config_text("chi = 1\nthis is not a pair", "run.cfg")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidConfig):
            parse_config_file(str(tmp_path / "nope.cfg"))

    def test_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("omega = 0.04\n", encoding="utf-8")
        assert parse_config_file(str(path)) == {"omega": "0.04"}


class TestValues:
    @pytest.mark.parametrize("text, expected", [("1", 1.0), ("-0.5", -0.5), ("1e-3", 1e-3), (".25", 0.25)])
    def test_float(self, text, expected):
        assert parse_float(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1,5", "nan"])
    def test_bad_float(self, text):
        with pytest.raises(InvalidConfig):
            parse_float(text)

    def test_int(self):
        assert parse_int(" 10 ") == 10
        with pytest.raises(InvalidConfig):
            parse_int("2.5")

    @pytest.mark.parametrize("text, expected", [("true", True), ("Yes", True), ("0", False), ("off", False)])
    def test_bool(self, text, expected):
        assert parse_bool(text) is expected

    def test_bad_bool(self):
        with pytest.raises(InvalidConfig):
            parse_bool("maybe")

    def test_list(self):
        assert parse_list(" g2_numeric, G2_analytic ,,") == ["g2_numeric", "g2_analytic"]
        assert parse_list("") == []

    def test_axis(self):
        assert parse_axis("delta,-3,3,301") == ("delta", -3.0, 3.0, 301)

    def test_bad_axis(self):
        with pytest.raises(InvalidConfig):
            parse_axis("delta,-3,3")


def test_format_number():
    assert format_number(1.0) == "1"
    assert format_number(1.0 / 3.0) == "0.333333333333"
    assert format_number(4.2399e-5) == "4.2399e-05"


def test_filler():
    assert filler("7", 3) == "  7"
    assert filler("1234", 3) == "1234"


def test_emitter_discovery():
    assert get_all_process_types(EMITTERS) == ["csv.table", "svg.heatmap", "svg.line"]

"""Tests for figure presets at reduced resolution."""

import pytest

from src.errors import UnknownPreset
from src.presets import PRESET_NAMES, PresetRunner, designed, figure_preset
from src.model import SystemParams


def quick(name):
    return figure_preset(name, n_max=3, progress=False, reproducible=True, points=3)


def test_names():
    assert PRESET_NAMES == ["fig3a", "fig3b", "fig4a", "fig4b", "fig5", "fig6a", "fig6b", "fig6c", "fig6d"]


def test_unknown():
    with pytest.raises(UnknownPreset):
        PresetRunner(progress=False).run("fig7")


def test_designed_pump():
    params = designed(SystemParams(), -1.0)
    assert params.delta_c == params.delta_a == -1.0
    assert params.lam == pytest.approx(4.239e-5, rel=1e-3)


def test_detuning_curves():
    tables = quick("fig3a")
    assert list(tables) == ["delta_plus", "delta_minus"]
    table = tables["delta_plus"]
    assert table.columns == [
        "delta_over_kappa", "g2_numeric", "log10_g2_numeric", "g2_analytic", "log10_g2_analytic", "error_code",
    ]
    assert table.shape == (3,)
    assert table.metadata["preset"] == "fig3a"
    assert table.metadata["curve"] == "delta_plus"
    assert table.metadata["design_delta"] == "1"


def test_phase_map():
    table = quick("fig4b")["map"]
    assert table.shape == (3, 3)
    assert table.columns[:2] == ["delta_over_kappa", "phi_over_pi"]
    assert table.metadata["drive"] == "atom"


def test_coupling_curves():
    tables = quick("fig6a")
    assert list(tables) == ["cavity_delta1", "cavity_delta2", "atom_delta1", "atom_delta2"]
    assert "lambda_opt_over_kappa" in tables["atom_delta1"].columns
    assert tables["atom_delta1"].metadata["use_optimal_pump"] == "true"


def test_delayed_correlations():
    tables = quick("fig5")
    assert list(tables) == ["cavity_plus", "cavity_minus", "atom_plus", "atom_minus"]
    table = tables["atom_minus"]
    assert table.shape == (3,)
    assert table.column("kappa_tau").tolist() == [0.0, 25.0, 50.0]
    assert "oscillations_tau_le_20" in table.metadata


def test_atom_driven_note():
    table = quick("fig6d")["delta1"]
    assert "1.249e-2" in table.metadata["note"]

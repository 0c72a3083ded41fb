import math

import numpy as np
import pytest

import spinbeam


def test_default_point():
    r = spinbeam.evaluate_point(spinbeam.RunConfig())
    assert list(r) == spinbeam.csv_columns()
    assert r["norm2"] == pytest.approx(0.85383419907016331, rel=1e-9)
    assert r["concurrence"] == pytest.approx(0.98523845651447642, rel=1e-9)
    assert r["p4z"] == pytest.approx(0.17047215302400804, rel=1e-8)
    p3 = math.hypot(r["p3x"], r["p3y"], r["p3z"])
    assert p3**2 + r["concurrence"] ** 2 == pytest.approx(1.0, abs=1e-10)


def test_config_round_trip():
    cfg = spinbeam.parse_config("alpha = 0.003\nlength_um = 2\n")
    assert cfg.alpha == 0.003
    assert cfg.length_au == pytest.approx(spinbeam.microns_to_au(2.0))
    assert spinbeam.parse_config(spinbeam.render_config(cfg)) == cfg
    cfg.set("epsilon", 0.1)
    assert cfg.epsilon == 0.1


def test_errors_map_to_python_exceptions():
    with pytest.raises(spinbeam.ConfigError, match="line 1"):
        spinbeam.parse_config("epsilon = 0.9\n")
    assert issubclass(spinbeam.ConfigError, ValueError)
    cfg = spinbeam.RunConfig()
    cfg.temperature_k = 0.0
    cfg.fermi_energy = 0.1
    with pytest.raises(spinbeam.DomainError):
        spinbeam.evaluate_point(cfg)


def test_sweep_and_preset():
    rows = spinbeam.run_sweep("epsilon", 0.0, 0.5, 11)
    assert len(rows) == 11
    assert rows[0]["concurrence"] == pytest.approx(1.0, abs=1e-14)
    assert rows[-1]["epsilon"] == 0.5
    assert "fig4" in spinbeam.preset_names()
    assert spinbeam.preset_csv("fig5") == spinbeam.preset_csv("fig5")
    assert len(spinbeam.run_preset("fig6")) == 4 * 101


def test_matrices_are_unitary():
    s = spinbeam.beam_splitter_matrix(1j / math.sqrt(2), 1 / math.sqrt(2), math.pi / 4)
    assert s.shape == (4, 4)
    assert np.allclose(s @ s.conj().T, np.eye(4), atol=1e-12)
    j = spinbeam.junction_matrix(0.3)
    assert np.allclose(j @ j.T, np.eye(3), atol=1e-12)
    with pytest.raises(spinbeam.DomainError):
        spinbeam.beam_splitter_matrix(0.5, 0.5, 0.3)


def test_small_helpers():
    assert spinbeam.concurrence(1, 0, 0, 1) == pytest.approx(1.0)
    assert spinbeam.concurrence(1, 1, 1, 1) == pytest.approx(0.0, abs=1e-15)
    assert spinbeam.max_single_subband_width(0.0) is None
    assert spinbeam.max_single_subband_width(0.003) == pytest.approx(1850.5508252042547)
    assert spinbeam.kelvin_to_au(90.0) == pytest.approx(2.8508077288565093e-4, rel=1e-12)

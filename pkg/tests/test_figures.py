import numpy as np
import pytest

from phasediff.cli import read_config_file
from phasediff.figures import SCENARIOS, RunConfig, run_figure
from phasediff.phase_stats import integrate_distribution


def test_every_scenario_builds_with_small_grid():
    for name in SCENARIOS:
        fd = run_figure(RunConfig(name, grid=48))
        assert fd.scenario == name
        assert len(fd.x) > 0
        for _label, col in fd.columns:
            assert col.shape == fd.x.shape
            assert np.all(np.isfinite(col))


def test_scenario_distributions_normalized():
    for name in ("fig1", "fig2", "fig4", "fig5"):
        fd = run_figure(RunConfig(name, grid=360))
        for label, p in fd.distributions:
            assert abs(integrate_distribution(p) - 1.0) < 1e-8, (name, label)


def test_unknown_scenario_rejected():
    with pytest.raises(KeyError):
        run_figure(RunConfig("fig99"))


def test_unknown_override_key_rejected():
    with pytest.raises(KeyError):
        RunConfig("fig1", overrides={"bogus": 1.0}).resolved_params()


def test_override_applies():
    params = RunConfig("fig1", overrides={"gamma0": 0.1}).resolved_params()
    assert params["gamma0"] == 0.1
    assert params["omega_c"] == SCENARIOS["fig1"].defaults["omega_c"]


def test_defaults_round_trip_through_config_serialization(tmp_path):
    # every scenario's defaults survive the flat key=value text format
    for name, scenario in SCENARIOS.items():
        path = tmp_path / f"{name}.cfg"
        path.write_text(
            "".join(f"{k}={v:.17g}\n" for k, v in sorted(scenario.defaults.items()))
        )
        parsed = {k: float(v) for k, v in read_config_file(path).items()}
        assert parsed == dict(scenario.defaults)


def test_fig3_is_population_curve_not_distribution():
    fd = run_figure(RunConfig("fig3", grid=48))
    assert fd.distributions == ()
    assert fd.x_name == "t"
    for _label, col in fd.columns:
        assert np.all((col >= -1e-12) & (col <= 1.0 + 1e-12))

"""
Tests for RunConfig, the selector parsers and config files.
"""

import pytest

from zeta_region import config
from zeta_region.config import RunConfig, load_config_file, parse_polynomial, parse_schedule
from zeta_region.exceptions import ConfigError, ParameterError


class TestRunConfig:
    """Test suite for RunConfig.validate."""

    def test_defaults_are_valid(self):
        cfg = RunConfig().validate()

        assert cfg.theta == 1.848
        assert cfg.schedule == "paper"
        assert cfg.polynomial == "kadiri"
        assert cfg.uses_reference_theta

    def test_explicit_schedule_becomes_tuple(self):
        cfg = RunConfig(schedule=[5.9, "5.8"]).validate()

        assert cfg.schedule == (5.9, 5.8)

    @pytest.mark.parametrize("overrides", [
        {"command": "plot"},
        {"theta": 1.5},
        {"theta": 3.2},
        {"T0": 10.0},
        {"t0": 0.5},
        {"R_init": 4.0},
        {"schedule": ()},
        {"schedule": (5.9, 4.9)},
        {"polynomial": "chebyshev"},
        {"polynomial": "custom", "custom_roots": (0.9,)},
        {"output_format": "xml"},
        {"omega_mode": "linear"},
        {"root_tol": 0.0},
        {"quad_rel_tol": -1.0},
        {"max_subdivisions": 0},
        {"kappa": 1.0},
        {"delta": 0.0},
    ])
    def test_invalid_fields(self, overrides):
        with pytest.raises(ParameterError):
            RunConfig(**overrides).validate()

    def test_off_reference_theta(self):
        assert not RunConfig(theta=1.9).uses_reference_theta


class TestParsers:
    """Test suite for parse_polynomial and parse_schedule."""

    @pytest.mark.parametrize("text, expected", [
        ("kadiri", ("kadiri", config.DEFAULT_ROOTS)),
        ("default", ("kadiri", config.DEFAULT_ROOTS)),
        ("RS", ("rosser_schoenfeld", config.ROSSER_SCHOENFELD_ROOTS)),
        ("rosser-schoenfeld", ("rosser_schoenfeld", config.ROSSER_SCHOENFELD_ROOTS)),
        ("custom:0.9,0.25", ("custom", (0.9, 0.25))),
    ])
    def test_polynomial(self, text, expected):
        assert parse_polynomial(text) == expected

    @pytest.mark.parametrize("text", ["custom:0.9", "custom:a,b", "fejer"])
    def test_malformed_polynomial(self, text):
        with pytest.raises(ConfigError):
            parse_polynomial(text)

    @pytest.mark.parametrize("text", ["paper", " Paper ", "published"])
    def test_published_schedule(self, text):
        assert parse_schedule(text) == "paper"

    def test_schedule(self):
        assert parse_schedule("auto") == "auto"
        assert parse_schedule("5.9, 5.8,") == (5.9, 5.8)

    def test_malformed_schedule(self):
        with pytest.raises(ConfigError):
            parse_schedule("5.9,fast")


class TestConfigFile:
    """Test suite for load_config_file."""

    def test_reads_keys(self, tmp_path):
        # Arrange
        path = tmp_path / "run.cfg"
        path.write_text(
            "# iteration settings\n"
            "\n"
            "theta = 1.85\n"
            "schedule = 5.9, 5.8\n"
            "polynomial = rs  # Rosser-Schoenfeld\n"
            "format = json\n"
            "use_cache = no\n"
        )

        # Act
        cfg = load_config_file(str(path))

        # Assert
        assert cfg.theta == 1.85
        assert cfg.schedule == (5.9, 5.8)
        assert cfg.polynomial == "rosser_schoenfeld"
        assert cfg.output_format == "json"
        assert cfg.use_cache is False

    def test_updates_base_without_mutating_it(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("R_init = 7.5\n")
        base = RunConfig(theta=1.9)

        cfg = load_config_file(str(path), base)

        assert (cfg.theta, cfg.R_init) == (1.9, 7.5)
        assert base.R_init == config.R_INIT

    @pytest.mark.parametrize("content", ["colour = blue\n", "theta 1.85\n", "theta = wide\n", "use_cache = maybe\n"])
    def test_malformed_file(self, tmp_path, content):
        path = tmp_path / "run.cfg"
        path.write_text(content)

        with pytest.raises(ConfigError):
            load_config_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config_file(str(tmp_path / "absent.cfg"))


class TestAppDir:
    """Test suite for app_dir."""

    def test_environment_override(self, monkeypatch, tmp_path):
        monkeypatch.setenv(config.OUTPUT_DIR_ENV, str(tmp_path))

        assert config.app_dir() == str(tmp_path)

    def test_home_default(self, monkeypatch):
        monkeypatch.delenv(config.OUTPUT_DIR_ENV, raising=False)

        assert config.app_dir().endswith(config.APP_DIR_NAME)

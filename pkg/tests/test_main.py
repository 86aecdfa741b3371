"""
Tests for the main module functionality.
"""

import dataclasses
import math
from unittest.mock import MagicMock, patch

import pytest

from zeta_region import golden
from zeta_region.config import RunConfig
from zeta_region.exceptions import ConfigError, NumericalError, ParameterError
from zeta_region.main import (
    COMMAND_HANDLERS,
    EXIT_CONFIG,
    EXIT_FAILURE,
    EXIT_MISMATCH,
    EXIT_OK,
    CommandReport,
    build_config,
    cmd_constants,
    cmd_iterate,
    cmd_optimize_theta,
    cmd_verify,
    main,
    parse_arguments,
)
from zeta_region.region import IterationRecord
from zeta_region.verification import FAIL, PASS, PropertyResult


def published_records():
    """IterationRecords carrying exactly the published step table."""
    records = []
    for step, row in enumerate(golden.STEP_TABLE, start=1):
        values = {name: reference.value for name, reference in row.items()}
        records.append(IterationRecord(step=step, theta=1.848, omega=0.5, **values))
    return records


class TestArguments:
    """Test suite for parse_arguments and build_config."""

    def test_flags(self):
        args = parse_arguments(["iterate", "--theta", "1.85", "--schedule", "auto", "--format", "json",
                                "--polynomial", "rs", "--no-cache"])

        assert args.command == "iterate"
        assert args.theta == 1.85
        assert args.output_format == "json"
        assert args.no_cache

    def test_unknown_command_exits(self):
        with pytest.raises(SystemExit):
            parse_arguments(["plot"])

    def test_build_config_merges_flags(self):
        args = parse_arguments(["iterate", "--schedule", "5.9,5.8", "--polynomial", "custom:0.9,0.25", "--no-cache"])

        cfg = build_config(args)

        assert cfg.schedule == (5.9, 5.8)
        assert (cfg.polynomial, cfg.custom_roots) == ("custom", (0.9, 0.25))
        assert cfg.use_cache is False

    @pytest.mark.parametrize("flags, expected", [
        (["--polynomial", "kadiri", "--schedule", "paper"], ("kadiri", "paper")),
        (["--polynomial", "default", "--schedule", "published"], ("kadiri", "paper")),
        (["--polynomial", "rs", "--schedule", "auto"], ("rosser_schoenfeld", "auto")),
    ])
    def test_build_config_selectors(self, flags, expected):
        cfg = build_config(parse_arguments(["iterate", *flags, "--no-cache"]))

        assert (cfg.polynomial, cfg.schedule) == expected

    def test_flags_override_config_file(self, tmp_path):
        # Arrange
        path = tmp_path / "run.cfg"
        path.write_text("theta = 1.9\nformat = csv\n")
        args = parse_arguments(["constants", "--config", str(path), "--theta", "1.85"])

        # Act
        cfg = build_config(args)

        # Assert
        assert cfg.theta == 1.85
        assert cfg.output_format == "csv"

    def test_invalid_value(self):
        with pytest.raises(ParameterError):
            build_config(parse_arguments(["constants", "--theta", "1.2"]))


class TestMain:
    """Test suite for main."""

    @pytest.fixture(autouse=True)
    def mock_setup_logging(self):
        with patch("zeta_region.main.setup_logging") as mock_setup:
            yield mock_setup

    @pytest.fixture
    def mock_handler(self):
        handler = MagicMock(return_value=CommandReport("Kernel constants", [{"name": "g1", "computed": 147.84112}]))
        with patch.dict(COMMAND_HANDLERS, {"constants": handler}):
            yield handler

    def test_success(self, mock_handler, capsys):
        exit_code = main(["constants", "--format", "csv"])

        assert exit_code == EXIT_OK
        mock_handler.assert_called_once()
        assert capsys.readouterr().out == "name,computed\ng1,147.84112\n"

    def test_configuration_error(self, mock_handler, capsys):
        exit_code = main(["constants", "--theta", "4.0"])

        assert exit_code == EXIT_CONFIG
        mock_handler.assert_not_called()
        assert "Error:" in capsys.readouterr().err

    def test_mismatch(self, mock_handler, capsys):
        mock_handler.return_value.exit_code = EXIT_MISMATCH

        exit_code = main(["constants"])

        assert exit_code == EXIT_MISMATCH
        assert "reference values" in capsys.readouterr().err

    @pytest.mark.parametrize("error, expected", [
        (NumericalError("no sign change"), EXIT_FAILURE),
        (ConfigError("optimize-theta needs a schedule"), EXIT_CONFIG),
    ])
    def test_handler_errors(self, mock_handler, capsys, error, expected):
        mock_handler.side_effect = error

        exit_code = main(["constants"])

        assert exit_code == expected
        assert str(error) in capsys.readouterr().err

    def test_clear_cache(self, mock_handler, capsys):
        # Arrange
        with patch("zeta_region.main.ConstantsCache") as mock_cache_class, \
                patch("zeta_region.main.KernelFactory") as mock_factory:
            mock_cache_class.return_value.clear.return_value = 3

            # Act
            exit_code = main(["constants", "--clear-cache"])

        # Assert
        assert exit_code == EXIT_OK
        mock_cache_class.return_value.clear.assert_called_once_with(max_age=0)
        mock_factory.clear.assert_called_once()
        assert "Cleared 3 cached kernel constants" in capsys.readouterr().out

    def test_log_level_is_forwarded(self, mock_handler, mock_setup_logging):
        main(["constants", "--log-level", "DEBUG", "--log-file", "run.log"])

        _, kwargs = mock_setup_logging.call_args
        assert kwargs == {"log_file": "run.log", "console_level": 10}


class TestCommands:
    """Test suite for the command handlers."""

    def test_constants_at_reference(self, kernel):
        with patch("zeta_region.main.KernelFactory") as mock_factory:
            mock_factory.create.return_value = kernel
            report = cmd_constants(RunConfig().validate())

        statuses = {row["name"]: row["status"] for row in report.rows}
        assert report.exit_code == EXIT_OK
        assert statuses["g1"] == "ok"
        assert statuses["eta0"] == "ok"
        assert statuses["uh2_sup"] == "no golden"
        assert all(row["provenance"] for row in report.rows)

    def test_constants_off_reference(self, kernel):
        with patch("zeta_region.main.KernelFactory") as mock_factory:
            mock_factory.create.return_value = kernel
            report = cmd_constants(RunConfig(theta=1.9).validate())

        assert {row["status"] for row in report.rows} == {"no golden"}

    def test_iterate_matches_published_table(self, kernel):
        with patch("zeta_region.main.KernelFactory") as mock_factory, \
                patch("zeta_region.main.iterate", return_value=published_records()):
            mock_factory.create.return_value = kernel
            report = cmd_iterate(RunConfig(command="iterate").validate())

        assert report.exit_code == EXIT_OK
        assert len(report.rows) == 6
        assert "Reference comparison" in report.sections

    def test_iterate_flags_mismatch(self, kernel):
        # Arrange
        records = published_records()
        records[-1] = dataclasses.replace(records[-1], R0_out=5.8)

        # Act
        with patch("zeta_region.main.KernelFactory") as mock_factory, \
                patch("zeta_region.main.iterate", return_value=records):
            mock_factory.create.return_value = kernel
            report = cmd_iterate(RunConfig(command="iterate").validate())

        # Assert
        assert report.exit_code == EXIT_MISMATCH
        assert [row["name"] for row in golden.mismatches(report.sections["Reference comparison"])] == [
            "step 6 R0_out"
        ]

    def test_iterate_ratio_mode_is_informational(self, kernel):
        records = published_records()[:1]

        with patch("zeta_region.main.KernelFactory") as mock_factory, \
                patch("zeta_region.main.iterate", return_value=records):
            mock_factory.create.return_value = kernel
            report = cmd_iterate(RunConfig(command="iterate", omega_mode="ratio").validate())

        assert report.exit_code == EXIT_OK
        assert report.sections["Reference comparison"][0]["status"] == "info"

    def test_iterate_single_step(self, kernel):
        with patch("zeta_region.main.KernelFactory") as mock_factory, \
                patch("zeta_region.main.iterate", return_value=published_records()[:1]) as mock_iterate:
            mock_factory.create.return_value = kernel
            cmd_iterate(RunConfig(command="iterate", single_step=True).validate())

        assert mock_iterate.call_args[0][1] == (5.97484,)

    def test_optimize_theta_rejects_auto(self):
        with pytest.raises(ConfigError):
            cmd_optimize_theta(RunConfig(command="optimize-theta", schedule="auto").validate())

    def test_optimize_theta_columns(self):
        record = IterationRecord(step=1, R_in=9.645908801, r_in=5.97145, eta0=0.0076, kappa=0.4389,
                                 delta=0.6206, alpha1=math.nan, alpha2=math.nan, alpha3=math.nan,
                                 C_at_eta0=math.nan, R0_out=5.97146, theta=1.85362, omega=0.58)

        with patch("zeta_region.main.optimize_theta_schedule", return_value=[record]):
            report = cmd_optimize_theta(RunConfig(command="optimize-theta", single_step=True).validate())

        assert list(report.rows[0]) == ["step", "R_in", "r_in", "theta", "R0_out"]
        assert report.exit_code == EXIT_OK

    def test_verify_collects_witnesses(self, kernel):
        # Arrange
        results = [
            PropertyResult("Stechkin inequality", PASS, 1000),
            PropertyResult("kappa window", FAIL, 1, [(0.62, 0.6, 0.22, 0.45)]),
        ]

        # Act
        with patch("zeta_region.main.KernelFactory") as mock_factory, \
                patch("zeta_region.main.run_all", return_value=results) as mock_run_all:
            mock_factory.create.return_value = kernel
            report = cmd_verify(RunConfig(command="verify", kappa=0.6).validate())

        # Assert
        assert report.exit_code == EXIT_MISMATCH
        assert mock_run_all.call_args[0][0].kappa == 0.6
        assert report.sections["Witnesses"] == [
            {"property": "kappa window", "witness": "(0.62, 0.6, 0.22, 0.45)"}
        ]

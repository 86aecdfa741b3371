"""
Command-line entry point for the zero-free region engine.

Commands:
    constants       kernel constants at theta, with the published values
    iterate         the R -> R0 iteration (published schedule, explicit list or auto)
    optimize-theta  the iteration with theta re-optimised at every step
    verify          property suites at one step's parameters
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field

from . import config, golden
from .bounds.remainder import RegionParams
from .exceptions import ConfigError, ParameterError, ZetaRegionError
from .kernel import KernelFactory
from .numerics import ToleranceConfig
from .region import iterate, optimize_theta_schedule, polynomial_for
from .utils.cache import ConstantsCache
from .utils.logging_utils import setup_logging
from .utils.report import render, write_output
from .verification import run_all

logger = logging.getLogger("zeta_region.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_MISMATCH = 3

_PROVENANCE = {
    "g1": "closed form",
    "g2": "closed form",
    "g3": "closed form",
    "d1": "closed form",
    "m": "grid + golden-section supremum",
    "m1": "grid + golden-section supremum",
    "uh2_sup": "grid + golden-section supremum",
    "M0": "adaptive quadrature",
    "M_neg1": "adaptive quadrature",
    "M1_0": "adaptive quadrature",
    "sigma0": "closed form",
    "eta0": "closed form",
}


@dataclass
class CommandReport:
    """Rows of one command, reference comparisons, and the exit code they imply."""

    title: str
    rows: list
    sections: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK


def tolerances_of(cfg):
    return ToleranceConfig(
        quad_abs_tol=cfg.quad_abs_tol,
        quad_rel_tol=cfg.quad_rel_tol,
        root_tol=cfg.root_tol,
        minimize_tol=cfg.minimize_tol,
        max_subdivisions=cfg.max_subdivisions,
    )


def _uses_published_inputs(cfg):
    """True when the run starts from the published T0, t0 and R and solves (kappa, delta) itself."""
    return (
        cfg.T0 == config.T0
        and cfg.t0 == config.T_ZERO_SHIFT
        and cfg.R_init == config.R_INIT
        and cfg.kappa is None
        and cfg.delta is None
        and cfg.omega_mode == "log"
    )


def _first_r(cfg):
    if isinstance(cfg.schedule, tuple):
        return cfg.schedule[0]
    return config.PUBLISHED_R_SCHEDULE[0]


def _with_comparisons(report, comparisons):
    if comparisons:
        report.sections["Reference comparison"] = comparisons
        if golden.mismatches(comparisons):
            for row in golden.mismatches(comparisons):
                logger.error(f"{row['name']}: computed {row['computed']!r}, expected {row['reference']!r}")
            report.exit_code = EXIT_MISMATCH
    return report


def cmd_constants(cfg):
    """
    Kernel constants at cfg.theta plus sigma0 and eta0 of the first step.

    Args:
        cfg (RunConfig): Validated run configuration

    Returns:
        CommandReport: One row per constant with its reference value and provenance
    """
    tolerances = tolerances_of(cfg)
    kernel = KernelFactory.create(cfg.theta, use_cache=cfg.use_cache, tolerances=tolerances)
    eta0, sigma0 = RegionParams.eta_sigma(cfg.R_init, _first_r(cfg), cfg.T0, cfg.t0)
    values = dict(kernel.to_dict(), sigma0=sigma0, eta0=eta0)
    values.pop("theta")

    references = {}
    if cfg.uses_reference_theta:
        references.update(golden.KERNEL_CONSTANTS)
    if _uses_published_inputs(cfg) and _first_r(cfg) == config.PUBLISHED_R_SCHEDULE[0]:
        references.update(golden.STARTING_POINT)

    rows, comparisons = [], []
    for name, value in values.items():
        reference = references.get(name)
        row = {"name": name, "computed": value, "reference": None, "delta": None, "tolerance": None,
               "status": "no golden", "provenance": _PROVENANCE[name]}
        if reference is not None:
            compared = golden.compare_row({name: value}, {name: reference}, "")[0]
            row.update({key: compared[key] for key in ("reference", "delta", "tolerance", "status")})
            comparisons.append(compared)
        rows.append(row)

    report = CommandReport(f"Kernel constants at theta = {cfg.theta}", rows)
    if golden.mismatches(comparisons):
        report.exit_code = EXIT_MISMATCH
    return report


def cmd_iterate(cfg):
    """
    Run the iteration and compare it with the published step table.

    Args:
        cfg (RunConfig): Validated run configuration

    Returns:
        CommandReport: One IterationRecord row per step
    """
    tolerances = tolerances_of(cfg)
    poly = polynomial_for(cfg.polynomial, cfg.custom_roots)
    kernel = KernelFactory.create(cfg.theta, use_cache=cfg.use_cache, tolerances=tolerances)
    schedule = config.PUBLISHED_R_SCHEDULE if cfg.schedule == config.PUBLISHED_SCHEDULE else cfg.schedule
    if cfg.single_step and schedule != "auto":
        schedule = schedule[:1]

    if cfg.kappa is not None or cfg.delta is not None:
        logger.warning("kappa/delta overrides are only honoured by the verify command")

    records = iterate(cfg.R_init, schedule, cfg.theta, poly, T0=cfg.T0, t0=cfg.t0,
                      omega_mode=cfg.omega_mode, kernel=kernel, tolerances=tolerances)
    report = CommandReport(f"Iteration at theta = {cfg.theta} ({poly.name} polynomial)",
                           [record.to_dict() for record in records])

    comparisons = []
    final = records[-1]
    if cfg.uses_reference_theta and cfg.omega_mode == "ratio":
        comparisons = golden.compare_row({"R0_out": final.R0_out}, {"R0_out": golden.RATIO_OMEGA_R0}, "ratio omega")
    elif cfg.uses_reference_theta and _uses_published_inputs(cfg):
        if cfg.schedule == config.PUBLISHED_SCHEDULE and poly.name == config.DEFAULT_POLYNOMIAL:
            comparisons = golden.compare_records(records, golden.STEP_TABLE)
        elif cfg.schedule == "auto" and poly.name == config.DEFAULT_POLYNOMIAL:
            comparisons = golden.compare_row({"R0_out": final.R0_out}, {"R0_out": golden.FINAL_R0}, "limit")
        elif cfg.schedule == "auto" and poly.name == "rosser_schoenfeld":
            comparisons = golden.compare_row({"R0_out": final.R0_out},
                                             {"R0_out": golden.ROSSER_SCHOENFELD_R0}, "limit")
    return _with_comparisons(report, comparisons)


def cmd_optimize_theta(cfg):
    """
    Re-optimise theta at every step of the schedule.

    Returns:
        CommandReport: (step, R, r, theta, R0) per step

    Raises:
        ConfigError: If the schedule is "auto"
    """
    if cfg.schedule == "auto":
        raise ConfigError("optimize-theta needs the published schedule or an explicit list of r values")
    tolerances = tolerances_of(cfg)
    poly = polynomial_for(cfg.polynomial, cfg.custom_roots)
    schedule = config.THETA_R_SCHEDULE if cfg.schedule == config.PUBLISHED_SCHEDULE else cfg.schedule
    records = optimize_theta_schedule(
        cfg.R_init, schedule, poly, single_step=cfg.single_step, T0=cfg.T0, t0=cfg.t0,
        omega_mode=cfg.omega_mode, use_cache=cfg.use_cache, tolerances=tolerances,
    )
    columns = ("step", "R_in", "r_in", "theta", "R0_out")
    report = CommandReport(f"Theta optimisation ({poly.name} polynomial)",
                           [{column: getattr(record, column) for column in columns} for record in records])

    comparisons = []
    published = cfg.schedule == config.PUBLISHED_SCHEDULE and poly.name == config.DEFAULT_POLYNOMIAL
    if published and _uses_published_inputs(cfg):
        comparisons = golden.compare_records(records, golden.THETA_TABLE)
    return _with_comparisons(report, comparisons)


def cmd_verify(cfg):
    """
    Run every property suite at the first step's parameters.

    cfg.kappa and cfg.delta replace the solved values, which makes it
    possible to watch the positivity checks fail.

    Returns:
        CommandReport: pass/fail per property, with witnesses of failures
    """
    tolerances = tolerances_of(cfg)
    poly = polynomial_for(cfg.polynomial, cfg.custom_roots)
    kernel = KernelFactory.create(cfg.theta, use_cache=cfg.use_cache, tolerances=tolerances)
    params = RegionParams.build(cfg.R_init, _first_r(cfg), kernel, cfg.T0, cfg.t0,
                                kappa=cfg.kappa, delta=cfg.delta, root_tol=tolerances.root_tol)
    results = run_all(params, poly, tolerances)

    report = CommandReport(f"Property suites at theta = {cfg.theta}, r = {params.r}",
                           [result.to_row() for result in results])
    witnesses = [
        {"property": result.name, "witness": repr(witness)}
        for result in results for witness in result.witnesses
    ]
    if witnesses:
        report.sections["Witnesses"] = witnesses
    if not all(result.passed for result in results):
        report.exit_code = EXIT_MISMATCH
    return report


COMMAND_HANDLERS = {
    "constants": cmd_constants,
    "iterate": cmd_iterate,
    "optimize-theta": cmd_optimize_theta,
    "verify": cmd_verify,
}


def parse_arguments(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="Compute an explicit zero-free region for the Riemann zeta function")

    parser.add_argument("command", choices=config.COMMANDS,
                        help="Computation to run")
    parser.add_argument("--config", type=str,
                        help="Flat key = value configuration file; flags override its values")
    parser.add_argument("--theta", type=float,
                        help=f"Kernel parameter in (pi/2, pi) (default: {config.DEFAULT_THETA})")
    parser.add_argument("--T0", type=float, dest="T0",
                        help=f"Height of the verified region (default: {config.T0})")
    parser.add_argument("--t0", type=float, dest="t0",
                        help=f"Shift t0 in log(4 T0 + t0) (default: {config.T_ZERO_SHIFT})")
    parser.add_argument("--R-init", type=float, dest="R_init",
                        help=f"Starting region constant (default: {config.R_INIT})")
    parser.add_argument("--schedule", type=str,
                        help=f"r schedule: {config.PUBLISHED_SCHEDULE}, auto or a comma-separated list "
                             f"(default: {config.PUBLISHED_SCHEDULE})")
    parser.add_argument("--polynomial", type=str,
                        help=f"{config.DEFAULT_POLYNOMIAL}, rs or custom:c,c' (default: {config.DEFAULT_POLYNOMIAL})")
    parser.add_argument("--format", type=str, choices=config.OUTPUT_FORMATS, dest="output_format",
                        help="Output format (default: text)")
    parser.add_argument("--omega-mode", type=str, choices=config.OMEGA_MODES, dest="omega_mode",
                        help="omega = r log T0 / (R log(4 T0 + t0)) or the r/R diagnostic (default: log)")
    parser.add_argument("--single-step", action="store_true", default=None,
                        help="Run only the first step of the schedule")
    parser.add_argument("--kappa", type=float,
                        help="Inject kappa instead of solving for it (verify)")
    parser.add_argument("--delta", type=float,
                        help="Inject delta instead of solving for it (verify)")
    parser.add_argument("--output", type=str,
                        help="Write the report to this file instead of stdout")
    parser.add_argument("--log-level", type=str, choices=["DEBUG", "INFO", "WARNING", "ERROR"], default="INFO",
                        help="Console logging level (default: INFO)")
    parser.add_argument("--log-file", type=str, default=config.LOG_FILE,
                        help=f"Log file (default: {config.LOG_FILE})")
    parser.add_argument("--no-cache", action="store_true",
                        help="Disable the kernel constants cache")
    parser.add_argument("--clear-cache", action="store_true",
                        help="Clear the kernel constants cache before running")

    return parser.parse_args(argv)


def build_config(args):
    """
    Merge the optional config file with the command-line flags.

    Returns:
        RunConfig: Validated configuration

    Raises:
        ConfigError: If the config file is unreadable or malformed
        ParameterError: If a value violates its invariant
    """
    cfg = config.load_config_file(args.config) if args.config else config.RunConfig()
    cfg.command = args.command
    for name in ("theta", "T0", "t0", "R_init", "output_format", "omega_mode", "single_step",
                 "kappa", "delta", "output"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)
    if args.schedule is not None:
        cfg.schedule = config.parse_schedule(args.schedule)
    if args.polynomial is not None:
        cfg.polynomial, cfg.custom_roots = config.parse_polynomial(args.polynomial)
    if args.no_cache:
        cfg.use_cache = False
    return cfg.validate()


def main(argv=None):
    """
    Main function that runs the application.

    Returns:
        int: 0 on success, 1 on computation failures, 2 on configuration
             errors, 3 on reference mismatches or failed properties
    """
    args = parse_arguments(argv)
    setup_logging(log_file=args.log_file, console_level=getattr(logging, args.log_level))

    try:
        cfg = build_config(args)
    except ParameterError as e:
        logger.error(f"Invalid configuration: {str(e)}")
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_CONFIG

    if args.clear_cache:
        try:
            cleared = ConstantsCache().clear(max_age=0)
            KernelFactory.clear()
            print(f"Cleared {cleared} cached kernel constants")
        except OSError as e:
            print(f"Error clearing cache: {str(e)}", file=sys.stderr)

    logger.info(f"Running {cfg.command}")
    try:
        report = COMMAND_HANDLERS[cfg.command](cfg)
    except ConfigError as e:
        logger.error(f"Invalid configuration: {str(e)}")
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_CONFIG
    except ZetaRegionError as e:
        logger.error(f"{cfg.command} failed: {str(e)}")
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_FAILURE

    write_output(render(report.rows, cfg.output_format, report.title, report.sections), cfg.output)
    if report.exit_code == EXIT_MISMATCH:
        print("Error: results differ from the reference values or a property failed", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

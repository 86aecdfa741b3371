"""
Configuration settings for the zero-free region engine.

Module constants hold the published inputs and the numerical defaults;
`RunConfig` is the command-line surface, optionally seeded from a flat
``key = value`` file.
"""

import logging
import math
import os
from dataclasses import dataclass, field, replace

from .exceptions import ConfigError, ParameterError

logger = logging.getLogger("zeta_region.config")

# Height up to which the Riemann hypothesis has been checked numerically
T0 = 3330657430.697
# t0 in sigma = 1 - 1/(R log(4 gamma0 + t0))
T_ZERO_SHIFT = 1.0
# Ordinate of the first non-trivial zero
FIRST_ZERO_ORDINATE = 14.134725146

# Simplified zero-counting envelope: 0.29992 log u + 5.225
BACKLUND_LOG = 0.29992
BACKLUND_CONST = 5.225
# Original envelope: 0.137 log u + 0.443 log log u + 5.225
BACKLUND_ORIGINAL_LOG = 0.137
BACKLUND_ORIGINAL_LOGLOG = 0.443

# Kernel and iteration defaults
DEFAULT_THETA = 1.848
R_INIT = 9.645908801
PUBLISHED_R_SCHEDULE = (5.97484, 5.73045, 5.70487, 5.70208, 5.70178, 5.70174)
THETA_R_SCHEDULE = (5.97145, 5.73008, 5.70483, 5.70208, 5.70178, 5.70174, 5.70174)
R_FLOOR = 5.0
ITERATION_PRECISION = 1e-5
MAX_AUTO_STEPS = 50

# Trigonometric polynomials 8 (c + cos y)^2 (c' + cos y)^2
DEFAULT_ROOTS = (0.91, 0.265)
ROSSER_SCHOENFELD_ROOTS = (0.9126, 0.2766)

# Positivity machinery
DELTA_BRACKET = (0.5, 0.75)
CONTOUR_HEIGHT = 10.0
SIGMA0_FLOOR = 0.99
ETA0_CEILING = 1e-2

# Monotonicity thresholds at theta = 1.848, per unit of eta
MONOTONICITY_EPS = (4.99, 5.735, 7.857)

# Numerical defaults
QUAD_ABS_TOL = 1e-11
QUAD_REL_TOL = 1e-13
ROOT_TOL = 1e-12
MINIMIZE_TOL = 1e-9
MAX_SUBDIVISIONS = 10_000
SUPREMUM_GRID_POINTS = 10_000
THETA_MARGIN = 0.05

# Output and storage
APP_DIR_NAME = ".zeta_region"
LOG_FILE = "zeta_region.log"
OUTPUT_DIR_ENV = "ZETA_REGION_OUTPUT_DIR"
CACHE_TTL = 30 * 86400
JSON_SIGNIFICANT_DIGITS = 12

COMMANDS = ("constants", "iterate", "optimize-theta", "verify")
OUTPUT_FORMATS = ("text", "csv", "json")
# Selectors of the published polynomial and r schedule, with their accepted aliases
DEFAULT_POLYNOMIAL = "kadiri"
PUBLISHED_SCHEDULE = "paper"
POLYNOMIAL_ALIASES = {
    DEFAULT_POLYNOMIAL: DEFAULT_POLYNOMIAL, "default": DEFAULT_POLYNOMIAL,
    "rs": "rosser_schoenfeld", "rosser_schoenfeld": "rosser_schoenfeld", "rosser-schoenfeld": "rosser_schoenfeld",
}
SCHEDULE_ALIASES = {PUBLISHED_SCHEDULE: PUBLISHED_SCHEDULE, "published": PUBLISHED_SCHEDULE, "auto": "auto"}
POLYNOMIALS = (DEFAULT_POLYNOMIAL, "rosser_schoenfeld", "custom")
OMEGA_MODES = ("log", "ratio")


def app_dir():
    """
    Directory for cached constants and default output.

    Returns:
        str: ``$ZETA_REGION_OUTPUT_DIR`` when set, otherwise ``~/.zeta_region``
    """
    override = os.environ.get(OUTPUT_DIR_ENV)
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), APP_DIR_NAME)


@dataclass
class RunConfig:
    """
    Everything a CLI command needs.

    ``schedule`` is PUBLISHED_SCHEDULE, ``"auto"`` or a tuple of r values.
    ``polynomial`` is one of POLYNOMIALS; ``custom_roots`` is only read for
    ``"custom"``.
    """

    command: str = "constants"
    theta: float = DEFAULT_THETA
    T0: float = T0
    t0: float = T_ZERO_SHIFT
    R_init: float = R_INIT
    schedule: object = PUBLISHED_SCHEDULE
    polynomial: str = DEFAULT_POLYNOMIAL
    custom_roots: tuple = DEFAULT_ROOTS
    output_format: str = "text"
    omega_mode: str = "log"
    single_step: bool = False
    kappa: float = None
    delta: float = None
    quad_abs_tol: float = QUAD_ABS_TOL
    quad_rel_tol: float = QUAD_REL_TOL
    root_tol: float = ROOT_TOL
    minimize_tol: float = MINIMIZE_TOL
    max_subdivisions: int = MAX_SUBDIVISIONS
    use_cache: bool = True
    output: str = None
    extra: dict = field(default_factory=dict)

    def validate(self):
        """
        Check every field before any computation starts.

        Returns:
            RunConfig: self, for chaining

        Raises:
            ParameterError: if a field violates its owning module's invariant
        """
        if self.command not in COMMANDS:
            raise ParameterError(f"Unknown command: {self.command}")
        if not math.pi / 2 < self.theta < math.pi:
            raise ParameterError(f"theta must lie in (pi/2, pi), got {self.theta}")
        if self.T0 <= FIRST_ZERO_ORDINATE + 1:
            raise ParameterError(f"T0 must exceed t1 + 1, got {self.T0}")
        if self.t0 < 1:
            raise ParameterError(f"t0 must be at least 1, got {self.t0}")
        if self.R_init < R_FLOOR:
            raise ParameterError(f"R_init must be at least {R_FLOOR}, got {self.R_init}")
        if self.schedule not in (PUBLISHED_SCHEDULE, "auto"):
            schedule = tuple(float(r) for r in self.schedule)
            if not schedule:
                raise ParameterError("An explicit r schedule cannot be empty")
            if any(r < R_FLOOR for r in schedule):
                raise ParameterError(f"Every r must be at least {R_FLOOR}: {schedule}")
            self.schedule = schedule
        if self.polynomial not in POLYNOMIALS:
            raise ParameterError(f"Unknown polynomial: {self.polynomial}")
        if self.polynomial == "custom" and len(self.custom_roots) != 2:
            raise ParameterError(f"custom polynomial needs two roots, got {self.custom_roots}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ParameterError(f"Unknown output format: {self.output_format}")
        if self.omega_mode not in OMEGA_MODES:
            raise ParameterError(f"Unknown omega mode: {self.omega_mode}")
        for name in ("quad_abs_tol", "root_tol", "minimize_tol"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"{name} must be strictly positive")
        if self.quad_rel_tol < 0:
            raise ParameterError("quad_rel_tol cannot be negative")
        if self.max_subdivisions < 1:
            raise ParameterError("max_subdivisions must be positive")
        if self.kappa is not None and not 0 <= self.kappa < 1:
            raise ParameterError(f"kappa must lie in [0, 1), got {self.kappa}")
        if self.delta is not None and not 0 < self.delta <= 1:
            raise ParameterError(f"delta must lie in (0, 1], got {self.delta}")
        return self

    @property
    def uses_reference_theta(self):
        """True when golden values apply (the published runs fix theta = 1.848)."""
        return self.theta == DEFAULT_THETA


def parse_polynomial(text):
    """
    Parse a name from POLYNOMIAL_ALIASES or ``custom:c,c'``.

    DEFAULT_POLYNOMIAL (alias ``default``) selects the published polynomial
    and ``rs`` the Rosser-Schoenfeld one.

    Args:
        text (str): Polynomial selector

    Returns:
        tuple: (name, roots)

    Raises:
        ConfigError: If the selector is malformed
    """
    text = text.strip().lower()
    name = POLYNOMIAL_ALIASES.get(text)
    if name == DEFAULT_POLYNOMIAL:
        return name, DEFAULT_ROOTS
    if name == "rosser_schoenfeld":
        return name, ROSSER_SCHOENFELD_ROOTS
    if text.startswith("custom:"):
        try:
            c, c2 = (float(part) for part in text[len("custom:"):].split(","))
        except ValueError as e:
            raise ConfigError(f"Malformed custom polynomial '{text}': {str(e)}")
        return "custom", (c, c2)
    raise ConfigError(f"Unknown polynomial selector: {text}")


def parse_schedule(text):
    """
    Parse PUBLISHED_SCHEDULE (alias ``published``), ``auto`` or a comma-separated list of r values.

    Raises:
        ConfigError: If a list entry is not a number
    """
    text = text.strip().lower()
    if text in SCHEDULE_ALIASES:
        return SCHEDULE_ALIASES[text]
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ConfigError(f"Malformed r schedule '{text}': {str(e)}")


def _parse_bool(text):
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"Not a boolean: {text}")


_FILE_KEYS = {
    "command": str,
    "theta": float,
    "T0": float,
    "t0": float,
    "R_init": float,
    "schedule": parse_schedule,
    "polynomial": parse_polynomial,
    "output_format": str,
    "format": str,
    "omega_mode": str,
    "single_step": _parse_bool,
    "kappa": float,
    "delta": float,
    "quad_abs_tol": float,
    "quad_rel_tol": float,
    "root_tol": float,
    "minimize_tol": float,
    "max_subdivisions": int,
    "use_cache": _parse_bool,
    "output": str,
}


def load_config_file(path, base=None):
    """
    Read a flat ``key = value`` configuration file.

    Blank lines and ``#`` comments are ignored; unknown keys are an error.

    Args:
        path (str): Path to the configuration file
        base (RunConfig, optional): Configuration to update. Defaults to a fresh RunConfig.

    Returns:
        RunConfig: Updated configuration (not yet validated)

    Raises:
        ConfigError: On unreadable files, unknown keys or malformed values
    """
    config = replace(base) if base is not None else RunConfig()
    try:
        with open(path, "r") as f:
            lines = f.readlines()
    except OSError as e:
        logger.error(f"Cannot read config file {path}: {str(e)}")
        raise ConfigError(f"Cannot read config file {path}: {str(e)}")

    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{number}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _FILE_KEYS:
            raise ConfigError(f"{path}:{number}: unknown key '{key}'")
        try:
            parsed = _FILE_KEYS[key](value)
        except ValueError as e:
            raise ConfigError(f"{path}:{number}: bad value for {key}: {str(e)}")
        if key == "polynomial":
            config.polynomial, config.custom_roots = parsed
        elif key == "format":
            config.output_format = parsed
        else:
            setattr(config, key, parsed)
        logger.debug(f"Config file sets {key} = {value}")

    return config


"""
Published reference values and their acceptance tolerances.

A tolerance of None marks a value that is reported next to the computed one
but never enforced (printed slips and pure diagnostics).
"""

from dataclasses import dataclass

from . import config


@dataclass(frozen=True)
class GoldenValue:
    value: float
    tol: float = None
    relative: bool = False
    note: str = ""

    def allowed(self):
        if self.tol is None:
            return None
        return self.tol * abs(self.value) if self.relative else self.tol

    def matches(self, computed):
        """True, False, or None when the value is informational only."""
        allowed = self.allowed()
        if allowed is None:
            return None
        return abs(computed - self.value) <= allowed


KERNEL_CONSTANTS = {
    "g1": GoldenValue(147.84112, 1e-4),
    "g2": GoldenValue(62.17067, 1e-4),
    "g3": GoldenValue(48.76676, 1e-4),
    "d1": GoldenValue(1.05161, 1e-4),
    "m": GoldenValue(1322.86625, 1e-4),
    "m1": GoldenValue(4135.12706, 1e-4),
    "M0": GoldenValue(521.632466, 1e-5),
    "M_neg1": GoldenValue(822.67426, 1e-4),
}

# sigma0 and eta0 at R = 9.645908801, r = 5.97484
STARTING_POINT = {
    "sigma0": GoldenValue(0.99555, 5e-6),
    "eta0": GoldenValue(7.63319e-3, 1e-8, note="the constants block prints 0.00913, which no r in the table gives"),
}

# The printed C4 sits about 1.0e4 above the integral computed here, which moves
# alpha3 by that much and C(eta0) by about 1e4 eta0^3 < 0.006. The computed
# S = sum_k a_k c30(k T0) is about 0.0084 above the printed one, so p2 runs
# about 2.2 high.
ALPHA2_TOL = 2.5
ALPHA3_TOL = 1.2e4
C_AT_ETA0_TOL = 0.008
# C4 implied by the first table row, alpha3 - q3 - p3
PRINTED_C4 = 2388690.465
ALPHA3_WITHOUT_C4 = GoldenValue(5799250.773 - PRINTED_C4, 15.0)
P3 = GoldenValue(3384045.191, 15.0)

_STEP_COLUMNS = ("R_in", "r_in", "eta0", "kappa", "delta", "alpha1", "alpha2", "alpha3", "C_at_eta0", "R0_out")
_STEP_ROWS = (
    (9.645908801, 5.97484, 7.63319, 0.438904, 0.620626, -3915.260, 344602.065, 5799250.773, -7.22827, 5.974849075),
    (5.974849075, 5.73045, 7.95873, 0.438525, 0.620748, -3916.747, 344602.065, 5841345.585, -7.22089, 5.730454010),
    (5.730454010, 5.70487, 7.99441, 0.438483, 0.620762, -3916.907, 344602.065, 5846103.683, -6.30271, 5.704872616),
    (5.704872616, 5.70208, 7.99832, 0.438479, 0.620763, -3916.907, 344602.065, 5846103.683, -6.29209, 5.702089881),
    (5.702089881, 5.70178, 7.99874, 0.438478, 0.620763, -3916.926, 344602.065, 5846682.864, -6.29080, 5.701785245),
    (5.701785245, 5.70174, 7.99880, 0.438478, 0.620763, -3916.927, 344602.065, 5846689.069, -6.29065, 5.701752890),
)


def _step_row(step, values):
    R_in, r_in, eta0_milli, kappa, delta, alpha1, alpha2, alpha3, C_value, R0 = values
    # Step 2's C(eta0) does not follow from its own alphas
    C_tol = None if step == 2 else C_AT_ETA0_TOL
    return {
        "R_in": GoldenValue(R_in, 1e-5),
        "r_in": GoldenValue(r_in, 1e-12),
        "eta0": GoldenValue(eta0_milli * 1e-3, 1e-8),
        "kappa": GoldenValue(kappa, 1e-5),
        "delta": GoldenValue(delta, 1e-5),
        "alpha1": GoldenValue(alpha1, 0.05),
        "alpha2": GoldenValue(alpha2, ALPHA2_TOL),
        "alpha3": GoldenValue(alpha3, ALPHA3_TOL),
        "C_at_eta0": GoldenValue(C_value, C_tol),
        "R0_out": GoldenValue(R0, 1e-5),
    }


STEP_TABLE = tuple(_step_row(step, values) for step, values in enumerate(_STEP_ROWS, start=1))

_THETA_ROWS = (
    (9.645908801, 5.97145, 1.85362, 5.97146),
    (5.97146, 5.73008, 1.84834, 5.73009),
    (5.73009, 5.70483, 1.84781, 5.70484),
    (5.70484, 5.70208, 1.84775, 5.70210),
    (5.70210, 5.70178, 1.84774, 5.70180),
    (5.70180, 5.70174, 1.84774, 5.70176),
    (5.70176, 5.70174, 1.84774, 5.70175),
)

THETA_TABLE = tuple(
    {
        "R_in": GoldenValue(R_in, 1e-4),
        "r_in": GoldenValue(r_in, 1e-12),
        "theta": GoldenValue(theta, 5e-4),
        "R0_out": GoldenValue(R0, 1e-4),
    }
    for R_in, r_in, theta, R0 in _THETA_ROWS
)

FINAL_R0 = GoldenValue(5.70175, 1e-4)
ROSSER_SCHOENFELD_R0 = GoldenValue(5.70216, 1e-4)
RATIO_OMEGA_R0 = GoldenValue(5.65267, None, note="printed diagnostic at omega = r/R")
C4_COEFFICIENT = GoldenValue(2.3887e6, 5e-3, relative=True, note="printed as an upper bound")
SUM_INVERSE_GAMMA_SQ = GoldenValue(0.098178, None, note="upper bound, checked as an inequality")
# Lower end of the interval the t = 0 zero sum must land in
SUM_INVERSE_GAMMA_SQ_FLOOR = 0.09


def compare_row(computed, reference, label):
    """
    Compare a dict of computed values against a dict of GoldenValues.

    Args:
        computed (dict): name -> computed float
        reference (dict): name -> GoldenValue
        label (str): Prefix for the row names, e.g. "step 3"

    Returns:
        list: One dict per shared name with computed, reference, delta, tolerance and status
    """
    rows = []
    for name, golden in reference.items():
        if name not in computed:
            continue
        value = float(computed[name])
        ok = golden.matches(value)
        rows.append({
            "name": f"{label} {name}".strip(),
            "computed": value,
            "reference": golden.value,
            "delta": value - golden.value,
            "tolerance": golden.allowed(),
            "status": "info" if ok is None else ("ok" if ok else "MISMATCH"),
        })
    return rows


def compare_records(records, table):
    """Row-by-row comparison of IterationRecords against STEP_TABLE or THETA_TABLE."""
    rows = []
    for record, reference in zip(records, table):
        rows.extend(compare_row(record.to_dict(), reference, f"step {record.step}"))
    return rows


def mismatches(rows):
    return [row for row in rows if row["status"] == "MISMATCH"]


def reference_theta_applies(theta):
    return theta == config.DEFAULT_THETA

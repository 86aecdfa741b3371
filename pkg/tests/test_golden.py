"""
Tests for the reference values and the comparison rows.
"""

import pytest

from zeta_region import golden
from zeta_region.golden import GoldenValue, compare_records, compare_row, mismatches


class TestGoldenValue:
    """Test suite for GoldenValue."""

    def test_absolute_tolerance(self):
        value = GoldenValue(5.70175, 1e-4)

        assert value.matches(5.70180)
        assert not value.matches(5.70190)

    def test_relative_tolerance(self):
        value = GoldenValue(2.3887e6, 0.02, relative=True)

        assert value.allowed() == 0.02 * 2.3887e6
        assert value.matches(2.3787e6)

    def test_informational_value(self):
        assert GoldenValue(5.65267).matches(5.7) is None


class TestComparisons:
    """Test suite for compare_row and compare_records."""

    def test_row_statuses(self):
        reference = {"a": GoldenValue(1.0, 0.1), "b": GoldenValue(2.0, 0.1), "c": GoldenValue(3.0)}

        rows = compare_row({"a": 1.05, "b": 2.5, "c": 9.0}, reference, "step 1")

        assert [row["status"] for row in rows] == ["ok", "MISMATCH", "info"]
        assert rows[1]["name"] == "step 1 b"
        assert rows[1]["delta"] == 0.5
        assert [row["name"] for row in mismatches(rows)] == ["step 1 b"]

    def test_missing_names_are_skipped(self):
        assert compare_row({}, {"a": GoldenValue(1.0, 0.1)}, "") == []

    def test_records_use_their_step_label(self):
        class Record:
            step = 3

            def to_dict(self):
                return {"R0_out": 5.704872616}

        rows = compare_records([Record()], golden.STEP_TABLE[2:])

        assert rows == [{
            "name": "step 3 R0_out", "computed": 5.704872616, "reference": 5.704872616,
            "delta": 0.0, "tolerance": 1e-5, "status": "ok",
        }]


class TestTables:
    """Test suite for the shape of the reference tables."""

    def test_step_table(self):
        assert len(golden.STEP_TABLE) == 6
        assert golden.STEP_TABLE[1]["C_at_eta0"].tol is None
        assert golden.STEP_TABLE[0]["eta0"].value == pytest.approx(7.63319e-3, rel=1e-12)

    def test_step_inputs_chain(self):
        for previous, current in zip(golden.STEP_TABLE, golden.STEP_TABLE[1:]):
            assert current["R_in"].value == previous["R0_out"].value

    def test_theta_table(self):
        assert len(golden.THETA_TABLE) == 7
        assert golden.THETA_TABLE[-1]["R0_out"].value == golden.FINAL_R0.value

    def test_tabulated_C4_follows_first_row(self):
        alpha3 = golden.STEP_TABLE[0]["alpha3"].value

        assert alpha3 - 26515.117 - golden.P3.value == pytest.approx(golden.PRINTED_C4, abs=1e-6)
        assert golden.ALPHA3_WITHOUT_C4.value + golden.PRINTED_C4 == pytest.approx(alpha3, abs=1e-6)
        assert golden.PRINTED_C4 <= golden.C4_COEFFICIENT.value

"""
Tests for the verification suites.
"""
import pytest

from src.theory_checks.corpus import CLASSIFICATION_CORPUS
from src.theory_checks.suites import (
    SUITES,
    abelian_p_group_types,
    bounds_suite,
    classification_suite,
    compute_records,
    extraspecial_suite,
    formulas_suite,
    gn_suite,
    group_record,
    lemmas_suite,
    run_suite,
    simple_mccl_scan,
    tuples_suite,
    verify_maol_classification,
)


class TestGroupRecords:

    def test_sym3_record(self):
        """Test the record of S3."""
        record = group_record("sym:3")
        assert record.order == 6
        assert record.aut_order == 6
        assert record.maol == 3
        assert record.mccl == 3
        assert record.d == 2
        assert record.orbit_lengths == [1, 2, 3]
        assert record.to_dict()["name"] == "sym:3"

    def test_parallel_records_keep_order(self):
        """Test that parallel records keep input order."""
        names = ["cyclic:6", "sym:3", "abelian:2x2", "quaternion"]
        assert compute_records(names, jobs=2) == compute_records(names, jobs=1)


class TestSuites:

    def test_classification_on_small_records(self):
        """Test the classification check on a few groups."""
        report = verify_maol_classification(compute_records(["cyclic:3", "cyclic:5", "sym:3", "dih:4"]))
        assert report.passed
        assert len(report.results) == 4

    def test_extraspecial(self):
        """Test the extraspecial suite."""
        report = extraspecial_suite()
        assert report.passed
        assert report.results[-1].computed == {"extraspecial:27:exp3": 24, "extraspecial:27:exp9": 18}

    def test_gn_default(self):
        """Test the default G_n suite."""
        report = gn_suite()
        assert report.passed
        names = {r.check_name for r in report.results}
        assert {"gn_order", "gn_center", "gn_alpha_valid", "gn_maol", "gn_central_index"} <= names
        assert any("--long" in note for note in report.notes)

    def test_tuples_on_small_groups(self):
        """Test the tuples suite on small groups."""
        report = tuples_suite(names=["cyclic:4", "abelian:2x2", "sym:3", "quaternion", "dih:4"])
        assert report.passed
        assert len(report.results) == 10

    def test_bounds_on_small_records(self):
        """Test the bounds suite on a few groups."""
        report = bounds_suite(records=compute_records(["cyclic:1", "cyclic:4", "sym:3", "alt:5"]))
        assert report.passed
        assert report.notes

    def test_lemmas_on_small_records(self):
        """Test the lemma checks on a few groups."""
        records = compute_records(["cyclic:6", "abelian:2x2", "quaternion*cyclic:3"])
        report = lemmas_suite(records=records)
        assert report.passed
        assert "maol_sylow_product" in {r.check_name for r in report.results}

    def test_simple_scan_subset(self):
        """Test the simple-group scan on two groups."""
        report = simple_mccl_scan(["alt:5", "psl:7:deg7"])
        assert report.passed

    def test_p_group_types(self):
        """Test enumeration of abelian 2-group types."""
        types = abelian_p_group_types(order_limit=8, primes=(2,))
        assert sorted(tuple(t.exponents) for t in types) == sorted([(1,), (1, 1), (2,), (1, 1, 1), (1, 2), (3,)])

    def test_unknown_suite(self):
        """Test that unknown suites are rejected."""
        with pytest.raises(ValueError):
            run_suite("nope")

    def test_suite_names(self):
        """Test the suite order."""
        assert SUITES == ["classification", "gn", "bounds", "formulas", "simple-scan",
                          "extraspecial", "tuples", "lemmas"]


@pytest.mark.slow
def test_formulas_suite():
    """Test the full formulas suite."""
    assert formulas_suite(jobs=2).passed


@pytest.mark.slow
def test_classification_suite():
    """Test the classification, bounds and lemma suites on the full corpus."""
    records = compute_records(CLASSIFICATION_CORPUS, jobs=2)
    assert classification_suite(records=records).passed
    assert bounds_suite(records=records).passed
    assert lemmas_suite(records=records).passed


@pytest.mark.slow
def test_simple_scan():
    """Test the full simple-group scan."""
    assert simple_mccl_scan().passed


@pytest.mark.slow
def test_gn_long():
    """Test the G_n suite for n up to 3."""
    report = gn_suite(long=True)
    assert report.passed
    assert {r.inputs["n"] for r in report.results if r.check_name == "gn_maol"} == {1, 2, 3}


@pytest.mark.slow
def test_tuples_suite():
    """Test the full tuples suite."""
    assert tuples_suite(jobs=2).passed

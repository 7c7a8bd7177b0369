"""Tests for the verification suites: report shape, pass status on the
shipped data, witness emission on injected corruption, and the erratum
diagnostics for the published full-group forms."""
from __future__ import annotations

import json

import pytest

import horogrowth.verify as verify
from horogrowth.series import poly, poly_str, rf_normalize
from horogrowth.verify import SUITES, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_suite_passes_and_serializes(suite):
    report = run_suite(suite)
    assert report["suite"] == suite
    assert report["pass"] is True
    assert report["checks"]
    assert all(c["pass"] for c in report["checks"])
    json.dumps(report)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_appendix_restricted_to_one_rank():
    report = verify.verify_appendix(m=7)
    assert report["pass"] is True
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "rank 7: subgroup series rational form",
        "rank 7: subgroup series row",
    ]


def test_appendix_witness_on_corruption(monkeypatch):
    good = verify.subgroup_series

    def tampered(m):
        f = good(m)
        return rf_normalize(f.num + poly(0, 1), f.den)

    monkeypatch.setattr(verify, "subgroup_series", tampered)
    report = verify.verify_appendix(m=1)
    assert report["pass"] is False
    failed = [c for c in report["checks"] if not c["pass"]]
    assert failed
    series_fail = next(c for c in failed if "row" in c["name"])
    assert series_fail["witness"]["index"] == 1


def test_bfs_erratum_diagnostics():
    report = verify.verify_bfs(m=1, radius=4)
    assert report["pass"] is True
    (diag,) = report["erratum"]
    assert diag["erratum"] is True
    assert diag["first_mismatch"] == 1
    assert diag["published_prefix"][1] == 2
    assert diag["enumerated_prefix"][1] == 4


def test_bfs_erratum_rank_two():
    report = verify.verify_bfs(m=2, radius=3)
    (diag,) = report["erratum"]
    assert diag["published_prefix"][1] == 7
    assert diag["enumerated_prefix"][1] == 6


def test_census_reports_fitted_numerators():
    report = verify.verify_census(m=1)
    fit = next(c for c in report["checks"] if "certified" in c["name"])
    assert fit["pass"] is True
    assert fit["data"]["p_hat"] == poly_str(poly(0, 1, 0, -1))
    assert fit["data"]["q_hat"] == poly_str(poly(1, 0, -1))
    assert fit["data"]["certified_to"] >= 2 * (1 + 4) + 6


def test_language_rejects_large_rank():
    with pytest.raises(ValueError):
        verify.verify_language(3)


def test_golden_data_notes_present():
    data = verify._golden()
    assert len(data["notes"]) == 2
    assert len(data["subgroup"]) == 10

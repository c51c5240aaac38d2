"""Smoke tests for the compiled extension module."""

import pytest

import qcap


def test_version():
    assert qcap.__version__ == "1.0.0"


def test_counts():
    assert qcap.count_cm(2, 0) == 1
    assert qcap.count_cm(2, 5) == 1
    assert qcap.count_dj(1, 5) == 1
    assert qcap.count_c2star(5) == qcap.count_dj(2, 5)
    assert [qcap.chi3(k) for k in range(6)] == [1, -1, 0, 1, -1, 0]


def test_expand_c4():
    out = qcap.expand("C4-finite", order=7, alpha=1, beta=1)
    assert out["lo"] == 0
    assert out["order"] == 7
    assert out["terms"] == [(0, 0, 1), (1, 1, 1), (2, -1, 1), (3, 0, 1), (4, 1, 1), (6, 0, 1)]


def test_expand_false_theta():
    out = qcap.expand("Theta2", order=2)
    assert out["terms"] == [(0, 0, 1), (1, 1, -1)]


def test_run_check():
    result = qcap.run_check("refined-c2", order=20)
    assert result["status"] == "pass"
    assert "discrepancy" not in result


def test_run_check_unknown_name():
    with pytest.raises(ValueError):
        qcap.run_check("nonsense")


def test_run_all_small_order():
    report = qcap.run_all(order=8)
    assert report["summary"]["total"] == 27
    assert report["summary"]["failed"] == 0
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)


def test_list_checks():
    checks = qcap.list_checks()
    assert len(checks) == 27
    assert any(c["name"] == "theorem-mainab" for c in checks)
    assert all(c["label"] for c in checks)

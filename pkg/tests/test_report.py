import pytest

from src.zpc.errors import EmptyGridError
from src.zpc.report import ScanReport


def test_csv_keeps_full_precision_and_nan():
    report = ScanReport("demo", [{"x": 0.1, "value": 1.0 / 3.0}, {"x": 2.0, "value": float("nan")}])
    assert report.to_csv() == "x,value\n0.10000000000000001,0.33333333333333331\n2,nan\n"


def test_columns_and_statistics():
    report = ScanReport("demo", [{"r": 1.0}, {"r": -2.0}, {"r": float("nan")}, {"r": 0.0}, {"r": 3.0}])
    assert report.columns == ["r"]
    assert report.column_max("r") == 3.0
    assert report.sign_changes("r") == 2
    report.record(note="kept")
    assert report.metadata == {"note": "kept"}


def test_write_csv_creates_parents(tmp_path):
    path = ScanReport("demo", [{"a": 1}]).write_csv(tmp_path / "deep" / "out.csv")
    assert path.read_text(encoding="utf-8") == "a\n1\n"


def test_empty_report_is_rejected():
    with pytest.raises(EmptyGridError):
        ScanReport("demo", [])

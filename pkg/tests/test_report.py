import csv

from rta.growth import check_growth_lower_bound
from rta.report import render_growth_report, render_scan_report
from rta.scan import scan_d2


class TestScanReport:
    def test_csv_rows(self, tmp_path):
        reports = scan_d2((4, 8))
        paths = render_scan_report(reports, tmp_path)
        assert [p.name for p in paths] == ["scan.csv", "scan.png"]

        with open(tmp_path / "scan.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        # n=4 keeps only side A (B skipped), 5-7 collapse to one blank row
        assert len(rows) == 6
        r4a = next(r for r in rows if r["index"] == "4" and r["side"] == "A")
        assert r4a["outcome"] == "not_representable"
        assert r4a["poison"] == "5" and r4a["poison_exponent"] == "1"
        assert r4a["overall"] == "poisoned"
        assert not any(r["index"] == "4" and r["side"] == "B" for r in rows)
        r8a = next(r for r in rows if r["index"] == "8" and r["side"] == "A")
        assert (r8a["witness_w"], r8a["witness_t"]) == ("1031", "192")
        r5 = next(r for r in rows if r["index"] == "5")
        assert r5["side"] == "" and r5["overall"] == "filtered_out"

    def test_png_written(self, tmp_path):
        render_scan_report(scan_d2((4, 8)), tmp_path)
        assert (tmp_path / "scan.png").read_bytes()[:4] == b"\x89PNG"


class TestGrowthReport:
    def test_files_and_monotone_gap(self, tmp_path):
        assert check_growth_lower_bound(2, 40)
        paths = render_growth_report(2, 40, tmp_path)
        assert [p.name for p in paths] == ["growth.csv", "growth.png"]
        with open(tmp_path / "growth.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert rows[0] == {"n": "2", "lower_bound_bits": "2", "y_bits": "4"}
        for row in rows:
            assert int(row["y_bits"]) >= int(row["lower_bound_bits"])

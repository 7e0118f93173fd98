import json

import pytest

from mrap import tables
from mrap.qfield import Field, parse_element
from mrap.scan import ResultCache, ScanRow, ScanSpec, imaginary_shortlist, scan, scan_field, verify_paper
from mrap.solver import APTriple, MRInstance, rational_ap, solve_ap


class TestSpec:
    def test_empty_d_range(self):
        with pytest.raises(ValueError):
            ScanSpec(d_range=(3, 2), D_list=(2,))

    def test_needs_one_field_source(self):
        with pytest.raises(ValueError):
            ScanSpec(d_range=(1, 2))
        with pytest.raises(ValueError):
            ScanSpec(d_range=(1, 2), D_list=(2,), disc_range=(2, 10))

    def test_fields_dedup(self):
        spec = ScanSpec(d_range=(1, 1), D_list=(2, 8, 18, 3))
        assert [f.D for f in spec.fields()] == [2, 3]

    def test_disc_range(self):
        spec = ScanSpec(d_range=(1, 1), disc_range=(2, 30))
        assert [f.disc for f in spec.fields()] == [5, 8, 12, 13, 17, 21, 24, 28, 29]


class TestScanRows:
    def test_sqrt2_d1(self):
        (row,) = scan(ScanSpec(d_range=(1, 1), D_list=(2,))).rows
        assert row.count == 12 and not row.same_as_rational

    def test_sqrt5_d11(self):
        (row,) = scan(ScanSpec(d_range=(11, 11), D_list=(5,))).rows
        assert row.count == 3
        f = Field(5)
        got = {APTriple(*(parse_element(x, f) for x in t.split("|"))) for t in row.triples}
        assert got - {APTriple(f.zero, f.zero)} == tables.table_triples(11, 5)

    def test_sqrt2_quiet_rows(self):
        rows = scan(ScanSpec(d_range=(4, 10), D_list=(2,))).rows
        for r in rows:
            if r.d in (5, 8, 10):
                assert r.same_as_rational and r.count == len(rational_ap(1, 1, 1, r.d))

    def test_admissible_shortcut_is_exact(self):
        rows = scan_field(2, 1, 1, 1, tuple(range(1, 13)))
        for r in rows:
            rep = solve_ap(MRInstance.of(1, 1, 1, r.d, Field(2)))
            assert tuple(t.render() for t in rep.triples) == r.triples

    def test_exists_mode(self):
        rows = scan(ScanSpec(d_range=(1, 6), D_list=(2,), mode="exists")).rows
        assert [r.nontrivial for r in rows] == [True, True, True, True, False, False]
        assert [r.clause for r in rows[:4]] == ["a", "b", "a", "b"]


class TestDeterminism:
    def test_byte_identical(self, tmp_path):
        outs = []
        for name in ("a", "b"):
            spec = ScanSpec(d_range=(1, 4), disc_range=(2, 30), output=tmp_path / name / "scan.csv")
            files = scan(spec).files
            outs.append([f.read_bytes() for f in files])
        assert outs[0] == outs[1]

    def test_parallel_equals_serial(self, tmp_path):
        base = dict(d_range=(1, 3), disc_range=(2, 60))
        serial = scan(ScanSpec(**base, output=tmp_path / "s.json", fmt="json", plot=False))
        par = scan(ScanSpec(**base, output=tmp_path / "p.json", fmt="json", plot=False, jobs=3))
        assert serial.rows == par.rows
        assert (tmp_path / "s.json").read_bytes() == (tmp_path / "p.json").read_bytes()


class TestCache:
    def test_resume_is_noop(self, tmp_path):
        cache = tmp_path / "journal.jsonl"
        spec = ScanSpec(d_range=(1, 3), D_list=(2, 5), cache=cache)
        first = scan(spec).rows
        size = cache.stat().st_size
        second = scan(spec).rows
        assert first == second
        assert cache.stat().st_size == size

    def test_digest_matches_recompute(self, tmp_path):
        cache = tmp_path / "journal.jsonl"
        scan(ScanSpec(d_range=(1, 3), D_list=(2, 3), cache=cache))
        loaded = ResultCache(cache)
        fresh = scan(ScanSpec(d_range=(1, 3), D_list=(2, 3))).rows
        for row in fresh:
            assert loaded.get(row.key).digest() == row.digest()

    def test_corruption_detected(self, tmp_path):
        cache = tmp_path / "journal.jsonl"
        scan(ScanSpec(d_range=(1, 1), D_list=(2,), cache=cache))
        entry = json.loads(cache.read_text())
        entry["row"]["count"] = 99
        cache.write_text(json.dumps(entry) + "\n")
        with pytest.raises(ValueError):
            ResultCache(cache)

    def test_partial_progress_kept(self, tmp_path):
        cache = tmp_path / "journal.jsonl"
        scan(ScanSpec(d_range=(1, 2), D_list=(2,), cache=cache))
        rc = ResultCache(cache)
        assert (1, 1, 1, 1, 2) in rc and (1, 1, 1, 2, 2) in rc
        assert (1, 1, 1, 1, 3) not in rc


class TestReports:
    def test_csv_schema(self, tmp_path):
        out = tmp_path / "scan.csv"
        res = scan(ScanSpec(d_range=(1, 2), D_list=(2, -1), output=out))
        lines = out.read_text().splitlines()
        assert lines[0] == "a,b,c,d,D,disc,count,triples"
        assert len(lines) == 1 + len(res.rows)
        for line in lines[1:]:
            cols = line.split(",")
            assert len(cols) == 8
            assert int(cols[6]) == len(cols[7].split(";"))
        assert (tmp_path / "scan_heatmap.png").stat().st_size > 0

    def test_json_schema(self, tmp_path):
        out = tmp_path / "scan.json"
        scan(ScanSpec(d_range=(1, 1), D_list=(5,), output=out, fmt="json", plot=False))
        doc = json.loads(out.read_text())
        assert "omega_convention" in doc
        (row,) = doc["rows"]
        assert set(row) >= {"a", "b", "c", "d", "D", "disc", "count", "triples", "omega"}
        assert row["count"] == 26 and row["omega"].startswith("a = (1+sqrt(5))/2")
        assert not (tmp_path / "scan_heatmap.png").exists()

    def test_nonrational_only(self, tmp_path):
        out = tmp_path / "scan.csv"
        scan(ScanSpec(d_range=(1, 5), D_list=(2,), output=out, nonrational_only=True, plot=False))
        rows = out.read_text().splitlines()[1:]
        assert [r.split(",")[3] for r in rows] == ["1", "2", "4"]

    def test_row_roundtrip(self):
        row = ScanRow(1, 1, 1, 2, 2, 8, 3, ("0|0", "4-2*a|2*a"), False)
        assert ScanRow.from_dict(row.to_dict()) == row


class TestShortlist:
    def test_filtered(self):
        assert imaginary_shortlist(1, 1, 1) == [(1, -1), (2, -1)]

    def test_unfiltered_superset(self):
        raw = imaginary_shortlist(1, 1, 1, filtered=False)
        assert {(1, -1), (2, -1)} <= set(raw)
        assert all(D < 0 and -D <= 400 for _, D in raw)

    def test_degenerate(self):
        with pytest.raises(ValueError):
            imaginary_shortlist(1, 1, -1)


class TestVerifyPaper:
    def test_all_rows_pass(self):
        ver = verify_paper()
        failed = [c.line() for c in ver.checks if not c.ok]
        assert not failed, failed
        assert ver.computed_total == tables.CONJECTURED_TOTAL

    def test_reports_rather_than_raises(self, monkeypatch):
        monkeypatch.setitem(tables.COUNTS, (1, 2), 13)
        ver = verify_paper(d_max_trivial=3)
        bad = [c for c in ver.checks if not c.ok]
        assert any("d=1 D=2" in c.name for c in bad)
        assert bad[0].line().startswith("FAIL")

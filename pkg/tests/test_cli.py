"""Command-line interface: reports, exit codes, JSON/CSV round trips."""

import csv
import io
import json

import pytest

from pgk.cli import CSV_COLUMNS, Report, build_report, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- kappa ---------------------------------------------------------------------


def test_kappa_json_36(capsys):
    code, out, _ = run(capsys, "kappa", "36", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "pgk/1"
    assert data["n"] == 36
    assert data["case"] == "case-iii"
    assert data["kappa_computed"] == 18
    assert data["kappa_formula"] == 18
    assert data["agreement"] is True


def test_kappa_human_prime_power(capsys):
    code, out, _ = run(capsys, "kappa", "8")
    assert code == 0
    assert "kappa (computed): 7" in out
    assert "prime-power" in out


def test_kappa_2310_reports_strict_bound(capsys):
    code, out, _ = run(capsys, "kappa", "2310", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["case"] == "computed-only"
    assert data["kappa_computed"] == 630
    assert data["kappa_formula"] is None
    assert data["bound_ii"] == 642
    assert data["bound_strict"] is True


def test_kappa_method_both(capsys):
    code, out, _ = run(capsys, "kappa", "12", "--method", "both", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["kappa_computed"] == 6
    assert data["kappa_element"] == 6


def test_kappa_element_guard_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("PGK_ELEMENT_GUARD", "10")
    code, _, err = run(capsys, "kappa", "12", "--method", "element")
    assert code == 1
    assert "guard" in err
    code, out, _ = run(capsys, "kappa", "12", "--method", "element", "--force", "--json")
    assert code == 0
    assert json.loads(out)["kappa_computed"] == 6


def test_kappa_mismatch_exits_2(capsys, monkeypatch):
    rigged = Report(     # impossible numbers, only to exercise the exit contract
        n=6,
        factorization=((2, 1), (3, 1)),
        case_tag="case-i",
        kappa_computed=3,
        kappa_formula=4,
        agreement=False,
    )
    monkeypatch.setattr("pgk.cli.build_report", lambda *a, **k: rigged)
    code, out, _ = run(capsys, "kappa", "6")
    assert code == 2
    assert "MISMATCH" in out


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kappa", "0"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["kappa", "not-a-number"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
    capsys.readouterr()


# --- separators ------------------------------------------------------------------


def test_separators_all_min_36(capsys):
    code, out, _ = run(capsys, "separators", "36", "--all-min", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["kappa"] == 18
    assert [s["classes"] for s in data["separators"]] == [
        [1, 2, 3, 6, 36],
        [1, 2, 12, 36],
    ]
    assert all(s["weight"] == 18 for s in data["separators"])


def test_separators_all_min_15(capsys):
    code, out, _ = run(capsys, "separators", "15", "--all-min", "--json")
    assert code == 0
    data = json.loads(out)
    assert [s["classes"] for s in data["separators"]] == [[1, 15]]


def test_separators_complete_graph(capsys):
    code, out, _ = run(capsys, "separators", "9")
    assert code == 0
    assert "complete graph, kappa = 8" in out


def test_separators_witness_blocks(capsys):
    code, out, _ = run(capsys, "separators", "36", "--witness", "--json")
    assert code == 0
    data = json.loads(out)
    (sep,) = data["separators"]
    assert sep["witness"]["block_a"] == [4]
    assert sep["witness"]["block_b"] == [3, 6, 9, 18]


def test_separators_guard(capsys):
    code, _, err = run(capsys, "separators", "1680", "--all-min")
    assert code == 1
    assert "guard" in err


# --- bound and the 2310 certificate ----------------------------------------------


def test_bound_2310(capsys):
    code, out, _ = run(capsys, "bound", "2310", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["bound_ii"] == 642
    assert data["P"] == 210 and data["phiP"] == 48


def test_bound_wrong_case_exits_1(capsys):
    code, _, err = run(capsys, "bound", "45")
    assert code == 1
    assert "2*phi(P)" in err


def test_example2310(capsys):
    code, out, _ = run(capsys, "example2310")
    assert code == 0
    assert "|X| = 630 = phi(n) + 150" in out
    assert "630 < 642" in out
    assert "block A: [30]" in out
    code, out, _ = run(capsys, "example2310", "--json")
    data = json.loads(out)
    assert data["verified"] is True and data["weight"] == 630


# --- sweep ------------------------------------------------------------------------


def test_sweep_small_range_with_oracle(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "30", "--oracle-max-n", "30")
    assert code == 0
    rows = [Report.from_json(line) for line in out.strip().splitlines()]
    assert [r.n for r in rows] == list(range(2, 31))
    assert all(r.agreement for r in rows)
    assert all(r.kappa_element == r.kappa_computed for r in rows)
    summary = json.loads(err)
    assert summary["rows"] == 29
    assert summary["mismatches"] == []
    assert summary["oracle_checked"] == 29


def test_sweep_json_round_trip(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "20")
    assert code == 0
    for line in out.strip().splitlines():
        report = Report.from_json(line)
        assert Report.from_json(report.to_json()) == report


def test_sweep_csv_to_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(
        capsys, "sweep", "--max-n", "10", "--format", "csv", "--out", str(target)
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["rows"] == 9
    with open(target, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(CSV_COLUMNS)
    assert len(rows) == 10
    by_n = {int(r[0]): r for r in rows[1:]}
    assert by_n[8][CSV_COLUMNS.index("kappa_computed")] == "7"
    assert by_n[6][CSV_COLUMNS.index("case")] == "case-iii"
    assert by_n[10][CSV_COLUMNS.index("case")] == "case-iii"


def test_sweep_extra_flags_2310(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "10", "--extra", "2310")
    assert code == 0
    rows = [Report.from_json(line) for line in out.strip().splitlines()]
    assert rows[-1].n == 2310
    assert rows[-1].bound_strict is True
    summary = json.loads(err)
    assert summary["bound_strict"] == [2310]


def test_sweep_parallel_matches_serial(capsys):
    code, serial_out, _ = run(capsys, "sweep", "--max-n", "40")
    assert code == 0
    code, parallel_out, _ = run(capsys, "sweep", "--max-n", "40", "--jobs", "2")
    assert code == 0

    def strip_ms(text):
        rows = [json.loads(line) for line in text.strip().splitlines()]
        for row in rows:
            row.pop("ms")
        return rows

    assert strip_ms(serial_out) == strip_ms(parallel_out)


def test_sweep_bad_range(capsys):
    code, _, err = run(capsys, "sweep", "--max-n", "1")
    assert code == 1
    assert "--max-n" in err


def test_sweep_unwritable_out(capsys):
    code, _, err = run(
        capsys, "sweep", "--max-n", "5", "--out", "/no/such/dir/rows.json"
    )
    assert code == 1
    assert "cannot write" in err


# --- report plumbing ----------------------------------------------------------------


def test_build_report_fields():
    report = build_report(36, use_element=True)
    assert report.kappa_formula == report.kappa_computed == report.kappa_element == 18
    assert report.bound_ii is None
    assert report.agreement and report.r == 2
    assert report.ms >= 0


def test_report_rejects_unknown_schema():
    report = build_report(6)
    payload = report.to_dict()
    payload["schema"] = "pgk/999"
    with pytest.raises(ValueError):
        Report.from_dict(payload)


def test_report_csv_row_shapes():
    report = build_report(150)
    row = report.csv_row()
    assert len(row) == len(CSV_COLUMNS)
    assert row[CSV_COLUMNS.index("kappa_formula")] == "52"
    assert row[CSV_COLUMNS.index("agreement")] == "true"

import json

import pytest

from symspec import cli
from symspec.catalog import lookup, serialize


def run_json(*argv):
    code, rec, text = cli.run(list(argv) + ["--format", "json"])
    return code, json.loads(text)


def test_spectrum_cp2_json():
    code, out = run_json("spectrum", "CP^n", "--n", "2", "--k-max", "3")
    assert code == 0
    assert out["schema_version"] == 1
    rows = out["result"]["rows"]
    assert len(rows) == 4
    assert rows[1]["multiplicity_closed"] == rows[1]["multiplicity_weyl"] == 8
    assert rows[1]["eigenvalue"] == {"exact": "12", "decimal": 12.0}
    assert rows[1]["energy"]["exact"] == "8"


def test_spectrum_trivial_and_hp1():
    _, out = run_json("spectrum", "CP^n", "--n", "2", "--k-max", "0")
    (row,) = out["result"]["rows"]
    assert row["eigenvalue"]["exact"] == "0" and row["multiplicity_weyl"] == 1
    _, out = run_json("spectrum", "HP^n", "--n", "1", "--k-max", "1")
    assert out["result"]["rows"][1]["multiplicity_closed"] == 5


def test_spectrum_rank_two_rows():
    _, out = run_json("spectrum", "SU3/SO3", "--k-max", "1")
    mults = [r["multiplicity_weyl"] for r in out["result"]["rows"]]
    assert mults == [1, 6, 6]


def test_json_round_trip_is_deterministic():
    code, rec, text = cli.run(["splitting", "8281", "--format", "json"])
    assert json.loads(text) == rec.to_json_obj()
    assert cli.run(["splitting", "8281", "--format", "json"])[2] == text


@pytest.mark.parametrize("Q,count", [(8281, 5), (2, 0), (4, 1)])
def test_splitting(Q, count):
    code, out = run_json("splitting", str(Q))
    assert code == 0
    assert out["result"]["count"] == count == len(out["result"]["rows"])


def test_splitting_total_dimension():
    _, out = run_json("splitting", "4")
    (row,) = out["result"]["rows"]
    assert row["weyl_dim"] == row["class_dim"] == out["result"]["total_dimension"] == 8


def test_verify_passes():
    code, out = run_json("verify", "CP^n", "--n", "2", "--k", "1")
    assert code == 0 and out["result"]["passed"] and out["result"]["rank"] == 8
    code, out = run_json("verify", "HP^n", "--n", "1", "--k", "1")
    assert code == 0 and out["result"]["rank"] == 5


@pytest.mark.slow
def test_verify_su3_1_1():
    code, out = run_json("verify", "SU3/SO3", "--p", "1", "--q", "1")
    assert code == 0 and out["result"]["rank"] == 27
    status = {c["check"]: c["status"] for c in out["result"]["checks"]}
    assert status["casimir_normalization"] == "pass"


def test_verify_emit_polynomials():
    _, out = run_json("verify", "CP^n", "--n", "1", "--k", "1", "--emit", "2")
    assert len(out["result"]["polynomials"]) == 2
    assert "z[" in out["result"]["polynomials"][0]


def test_verify_failure_exit_code(tmp_path, capsys):
    # a catalog entry with the wrong metric constant fails the normalization check
    path = tmp_path / "bad.txt"
    path.write_text(serialize(lookup("SU3/SO3")).replace('sigma = "3"', 'sigma = "1"'))
    assert cli.main(["verify", "SU3/SO3", "--p", "1", "--q", "0", "--catalog", str(path)]) == 2
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("argv,b2", [
    (["diagram", "grassmannian", "--p", "2", "--q", "5"], 4),
    (["diagram", "SU3/SO3"], 2),
    (["diagram", "CaP2"], 1),
])
def test_diagram(argv, b2):
    code, out = run_json(*argv)
    assert code == 0 and out["result"]["b2"] == b2


def test_diagram_su3_all_white():
    _, out = run_json("diagram", "SU3/SO3")
    assert out["result"]["white_nodes"] == [1, 2]
    assert out["result"]["satake"].startswith("A2: o-o")


@pytest.mark.parametrize("argv", [
    ["spectrum", "G2/SO4"],
    ["spectrum", "CP^n"],
    ["spectrum", "CP^n", "--n", "2", "--k-max", "-1"],
    ["splitting", "0"],
    ["diagram", "grassmannian", "--p", "2"],
    ["verify", "SU3/SO3", "--p", "1"],
    ["verify", "S^n", "--n", "3", "--k", "1"],
    ["nonsense"],
    ["spectrum", "CP^n", "--n", "2", "--format", "xml"],
])
def test_usage_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(cli.main(argv))
    assert exc.value.code == 1
    assert capsys.readouterr().err


def test_table_and_csv(monkeypatch):
    _, _, text = cli.run(["spectrum", "HP^n", "--n", "1", "--k-max", "2"])
    assert "multiplicity_closed" in text.splitlines()[1]
    monkeypatch.setenv("SYMSPEC_FORMAT", "csv")
    _, _, text = cli.run(["spectrum", "HP^n", "--n", "1", "--k-max", "2"])
    lines = text.splitlines()
    assert lines[0].startswith("k,energy,eigenvalue")
    assert lines[2].split(",")[3] == "5"


def test_catalog_override(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text(serialize(lookup("CP^n", 2)).replace('sigma = "1"', 'sigma = "2"'))
    _, out = run_json("spectrum", "CP^n", "--n", "2", "--k-max", "1", "--catalog", str(path))
    assert out["result"]["rows"][1]["eigenvalue"]["exact"] == "6"


def test_bad_catalog_is_usage_error(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("schema_version = 1\nfoo = 2\n")
    assert cli.main(["spectrum", "CP^n", "--n", "2", "--catalog", str(path)]) == 1

import csv
import io
import json
import subprocess
import sys


from abdiam.cli import main, setting, build_parser


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def payload(text):
    return json.loads(text)


def test_diam(capsys):
    code, out, _ = run(capsys, "diam", "--group", "2,8")
    assert code == 0
    d = payload(out)
    assert d["schema"] == 1 and d["diam_formula"] == 5


def test_diam_of_set_and_brute(capsys, tmp_path):
    out_file = tmp_path / "d.json"
    code, out, _ = run(capsys, "diam", "--group", "7", "--set", "{1}", "--brute", "--json", str(out_file))
    assert code == 0
    d = json.loads(out_file.read_text())
    assert d["diam"] == 3 and d["witnesses"]


def test_length(capsys):
    code, out, _ = run(capsys, "length", "--group", "9", "--set", "{3}")
    assert code == 0
    lengths = payload(out)["lengths"]
    assert lengths[0] == 0 and lengths[3] == 1
    assert lengths[1] == "inf"


def test_trho_both(capsys):
    code, out, _ = run(capsys, "trho", "--group", "12", "--rho", "3", "--both")
    d = payload(out)
    assert code == 0 and d["value"] == d["formula"] == 5
    assert {"group", "rho", "method", "value", "witnesses", "elapsed_ms"} <= set(d)


def test_srho_via_quotients(capsys):
    code, out, _ = run(capsys, "srho", "--group", "12", "--rho", "3", "--brute", "--via-quotients")
    d = payload(out)
    assert d["value"] == d["via_quotients"]["value"] == 6


def test_construct_ok_and_failing(capsys):
    code, out, _ = run(capsys, "construct", "--family", "thm212", "--group", "2,8", "--rho", "4")
    assert code == 0
    assert all(s["claims"] for s in payload(out)["sets"])
    code, out, _ = run(capsys, "construct", "--family", "homocyclic4", "--r", "2")
    assert code == 1


def test_construct_periodic_census(capsys):
    code, out, _ = run(capsys, "construct", "--family", "example25", "--n", "2")
    d = payload(out)
    assert code == 0 and d["diam"] == 5 and d["all_periodic"] and d["t"] == 0


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--theorem", "2.13", "--group", "8", "--rho", "4", "--set", "{1}")
    d = payload(out)
    assert code == 0 and d["result"] == "witness" and d["quotient"] == [8]
    code, out, _ = run(capsys, "classify", "--theorem", "2.12", "--group", "8", "--set", "{0,1,2}")
    assert payload(out)["result"] == "refusal"


def test_code(capsys, tmp_path):
    p = tmp_path / "h.txt"
    p.write_text("0001111\n0110011\n1010101\n")
    code, out, _ = run(capsys, "code", "--check-matrix", str(p), "--covering-radius")
    d = payload(out)
    assert code == 0 and d["covering_radius"] == 1 and d["distance_at_least_3"]
    code, out, _ = run(capsys, "code", "--verify-dt", "--r", "4")
    d = payload(out)
    assert code == 0 and d["certified"] and [d["t4"], d["s4"]] == d["expected"] == [5, 5]


def test_verify_exit_codes(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--max-order", "8", "--claims", "thm2.1,prop2.6", "--json", str(report))
    assert code == 0
    d = json.loads(report.read_text())
    assert d["schema"] == 1 and d["summary"]["FAILED"] == 0
    assert all(e["status"] == "certified" for e in d["entries"])
    code, _, _ = run(capsys, "verify", "--max-order", "16", "--claims", "thm2.7")
    assert code == 1


def test_tabulate(capsys, tmp_path):
    code, out, _ = run(capsys, "tabulate", "--groups", "12;4,4;1", "--rho-range", "3", "--formula-only",
                       "--csv", str(tmp_path / "t.csv"))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    row = next(r for r in rows if r["group"] == "4,4")
    assert (row["t_formula"], row["s_formula"]) == ("6", "8")
    trivial = next(r for r in rows if r["diam"] == "0")
    assert trivial["t_formula"] == ""


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "diam", "--group", "2,x")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "trho", "--group", "5", "--rho", "0", "--brute")
    assert code == 2


def test_formula_outside_its_domain_is_null(capsys):
    code, out, _ = run(capsys, "trho", "--group", "5", "--rho", "3", "--formula")
    assert code == 0 and payload(out)["formula"] is None


def test_settings_precedence(monkeypatch):
    args = build_parser().parse_args(["verify"])
    assert setting(args, "max_order") == 16
    monkeypatch.setenv("ABDIAM_MAX_ORDER", "9")
    assert setting(args, "max_order") == 9
    args = build_parser().parse_args(["verify", "--max-order", "5"])
    assert setting(args, "max_order") == 5


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "abdiam", "diam", "--group", "3,3"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["diam_formula"] == 2

import json

from superdegen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_verify_catalog(capsys):
    code, out = run(capsys, "verify-catalog")
    assert code == 0
    assert "coincidence" in out


def test_tables_stab(capsys):
    code, out = run(capsys, "tables", "--kind", "stab")
    assert code == 0
    lines = out.splitlines()
    row9 = next(l for l in lines if l.lstrip().startswith("(9|.)"))
    assert row9.split()[1:] == ["9", "5", "5", "9"]
    row18 = next(l for l in lines if l.lstrip().startswith("(18;l|.)"))
    assert row18.split()[1:] == ["4", "3", "2"]


def test_tables_orbit(capsys):
    code, out = run(capsys, "tables", "--kind", "orbit")
    assert code == 0
    lines = out.splitlines()
    row18 = next(l for l in lines if l.lstrip().startswith("(18;l|.)"))
    assert row18.split()[1:] == ["8", "9", "10"]
    row1 = next(l for l in lines if l.lstrip().startswith("(1|.)"))
    assert row1.split()[1:] == ["12", "12", "12"]


def test_check_shipped_files(capsys):
    code, out = run(capsys, "check", "spec_dim3", "obstructions_dim2")
    assert code == 0
    assert out.count("PASS") >= 17


def test_check_bad_label(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"certs": [{
        "kind": "obstruction", "source": "(8|1)", "target": "(8|99)", "method": "OD"}]}))
    code, out = run(capsys, "check", str(bad))
    assert code == 1
    assert "FAIL" in out


def test_diagram_json(capsys):
    code, out = run(capsys, "--json", "diagram", "--component", "2", "--format", "json")
    assert code == 0
    # the diagram document precedes the run report on stdout
    doc = out.split('{\n "command"')[0]
    data = json.loads(doc)
    assert {p["source"] for p in data["undetermined"]} <= {"(14|3)", "(15|3)", "(18;l|2)", "(1|2)", "(2|3)"}
    assert len(data["undetermined"]) == 6


def test_diagram_dot_component1(capsys, tmp_path):
    out_path = tmp_path / "c1.dot"
    code, _ = run(capsys, "diagram", "--component", "1", "--format", "dot", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert '"(9|3)"' in text
    assert "->" not in text.replace("rankdir", "")  # single node, no edges


def test_fingerprint_cmd(capsys):
    code, out = run(capsys, "fingerprint", "(16|1)")
    assert code == 0
    data = json.loads(out[: out.rindex("}") + 1])
    assert data["orbit_dim"] == 9
    assert data["j_kills_odd_right"] is True and data["j_kills_odd_left"] is False


def test_fingerprint_with_lambda(capsys):
    code, out = run(capsys, "fingerprint", "(18;l|1)", "--lambda", "5")
    assert code == 0
    assert '"orbit_dim": 9' in out


def test_generic_cmd(capsys):
    code, out = run(capsys, "generic", "--component", "3")
    assert code == 0
    assert out.count("PASS") == 6


def test_determinism_byte_identical(capsys):
    _, out1 = run(capsys, "tables", "--kind", "orbit")
    _, out2 = run(capsys, "tables", "--kind", "orbit")
    assert out1 == out2
    _, j1 = run(capsys, "--json", "check", "family_limits")
    _, j2 = run(capsys, "--json", "check", "family_limits")
    assert j1 == j2


def test_json_and_text_verdicts_agree(capsys):
    code_t, out_t = run(capsys, "check", "obstructions_dim3")
    code_j, out_j = run(capsys, "--json", "check", "obstructions_dim3")
    assert code_t == code_j == 0
    payload = json.loads(out_j)
    assert payload["exit_code"] == 0
    assert payload["counts"].get("pass") == out_t.count("PASS")


def test_tables_flag_mismatches(capsys, tmp_path):
    import importlib.resources as r
    data = json.loads(r.files("superdegen.data").joinpath("catalog.json").read_text("utf-8"))
    rec = next(e for e in data["entries"] if e["label"] == "(13|1)")
    rec["expected_stab_dim"] = 7  # wrong on purpose
    p = tmp_path / "doctored.json"
    p.write_text(json.dumps(data))
    code = main(["--catalog", str(p), "tables", "--kind", "stab"])
    out = capsys.readouterr().out
    assert code == 1
    assert "1!" in out  # computed value flagged against the doctored declaration


def test_broken_catalog_file_fails_cleanly(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("[")
    code = main(["--catalog", str(p), "verify-catalog"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_corrupted_entry_fails_naming_it(capsys, tmp_path):
    import importlib.resources as r
    data = json.loads(r.files("superdegen.data").joinpath("catalog.json").read_text("utf-8"))
    rec = next(e for e in data["entries"] if e["label"] == "(5|0)")
    idx = next(i for i, lit in enumerate(rec["alpha"]) if lit == "1" and i > 16)
    rec["alpha"][idx] = "2"
    p = tmp_path / "corrupt.json"
    p.write_text(json.dumps(data))
    code = main(["--catalog", str(p), "verify-catalog"])
    out = capsys.readouterr().out
    assert code == 1
    assert "(5|0)" in out

import json
import math
import subprocess
import sys

import pytest

from trifermion.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    f = tmp_path / name
    f.write_text(json.dumps(doc))
    return str(f)


def test_gen_is_seeded_and_byte_identical(capsys):
    _, first, _ = run(capsys, "gen", "--kind", "fermion20", "--seed", "3", "--count", "2")
    _, second, _ = run(capsys, "gen", "--kind", "fermion20", "--seed", "3", "--count", "2")
    assert first == second
    assert len(json.loads(first)["states"]) == 2


def test_invariants_of_w_point(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--name", "w-point")
    code, out, _ = run(capsys, "invariants", "--in", write(tmp_path, "w.json", json.loads(out)))
    assert code == 0
    M = json.loads(out)["M"]
    for got, want in zip(M, (1, 2 / 3, 1 / 9, 4 / 27, 0, 8 / 729, 0)):
        assert got == pytest.approx(want, abs=1e-10)


def test_qubit_invariants_include_hyperdeterminant(tmp_path, capsys):
    doc = {"kind": "qubit8", "amplitudes": [{"index": [0, 0, 0], "re": 1}, {"index": [1, 1, 1], "re": 1}]}
    _, out, _ = run(capsys, "invariants", "--in", write(tmp_path, "g.json", doc))
    res = json.loads(out)
    # unnormalized input: Hdet of (|000> + |111>) is 1
    assert res["Hdet"] == [1.0, 0.0]
    assert res["Q"][5] == pytest.approx(res["M"][4])


def test_canonicalize_batch_with_jobs(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--seed", "1", "--count", "3")
    path = write(tmp_path, "s.json", json.loads(out))
    _, serial, _ = run(capsys, "canonicalize", "--in", path)
    _, parallel, _ = run(capsys, "canonicalize", "--in", path, "--jobs", "2")
    assert serial == parallel
    res = json.loads(serial)
    assert len(res) == 3 and all(r["case"] == "SinglePoint_i" for r in res)
    assert all(r["residuals"]["invariant_match"] < 1e-8 for r in res)


def test_canonicalize_w_state_reports_partner(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--name", "W")
    code, out, _ = run(capsys, "canonicalize", "--in", write(tmp_path, "w.json", json.loads(out)))
    res = json.loads(out)
    assert code == 0 and res["case"] == "Pair_iv"
    assert res["point"]["d"] == pytest.approx(2 / 3, abs=1e-8)
    assert res["partner"]["y"] == pytest.approx(-res["point"]["y"])


def test_qubit_witness(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--kind", "qubit8", "--seed", "2")
    code, out, _ = run(capsys, "canonicalize", "--in", write(tmp_path, "q.json", json.loads(out)), "--witness")
    res = json.loads(out)
    assert code == 0 and res["witness"]["residual"] < 1e-8
    assert len(res["witness"]["unitaries"]) == 3


def test_equiv(tmp_path, capsys):
    _, a, _ = run(capsys, "gen", "--seed", "4")
    _, b, _ = run(capsys, "gen", "--seed", "5")
    pa, pb = write(tmp_path, "a.json", json.loads(a)), write(tmp_path, "b.json", json.loads(b))
    _, out, _ = run(capsys, "equiv", "--a", pa, "--b", pa)
    assert json.loads(out)["equivalent"] is True
    _, out, _ = run(capsys, "equiv", "--a", pa, "--b", pb)
    assert json.loads(out)["equivalent"] is False


def test_classify_and_gme(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--name", "GHZ")
    path = write(tmp_path, "g.json", json.loads(out))
    _, out, _ = run(capsys, "classify", "--in", path)
    assert json.loads(out) == {"type": "GHZ", "quasi_real": True}
    _, out, _ = run(capsys, "gme", "--in", path)
    assert json.loads(out)["mu"] == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_region_sample_csv_and_check(tmp_path, capsys):
    code, out, _ = run(capsys, "region", "sample", "--count", "3", "--format", "csv")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "a,b,c,d,x,y,interior_flag,case_tag" and len(lines) == 4
    doc = {"kind": "w6", "a": 1 / 2, "b": 1 / 2, "c": 1 / 2, "d": 1 / 2}
    _, out, _ = run(capsys, "region", "check", "--in", write(tmp_path, "p.json", doc))
    assert json.loads(out)["violated"] == ["gap"]


def test_qubit_map_roundtrip(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--kind", "qubit8", "--seed", "6")
    q = json.loads(out)
    _, f, _ = run(capsys, "qubit-map", "--in", write(tmp_path, "q.json", q))
    _, back, _ = run(capsys, "qubit-map", "--in", write(tmp_path, "f.json", json.loads(f)))
    assert json.loads(back) == q


def test_domain_error_exit_code(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "--seed", "7")
    code, out, _ = run(capsys, "qubit-map", "--in", write(tmp_path, "f.json", json.loads(out)))
    assert code == 1 and json.loads(out)["error"] == "NotSOV"
    zero = {"kind": "fermion20", "amplitudes": []}
    code, out, _ = run(capsys, "canonicalize", "--in", write(tmp_path, "z.json", zero))
    assert code == 1 and json.loads(out)["error"] == "ZeroState"


def test_input_error_exit_code(tmp_path, capsys):
    code, _, err = run(capsys, "invariants", "--in", str(tmp_path / "missing.json"))
    assert code == 2 and "InputError" in err
    code, _, err = run(capsys, "invariants")
    assert code == 2
    code, _, err = run(capsys, "gen", "--precision", "quad")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "w-point")
    res = json.loads(out)
    assert code == 0 and res["passed"] and res["w-point"]["passed"]


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "jacobian", "--format", "text")
    assert code == 0 and "passed: True" in out


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "trifermion.cli", "gen", "--name", "e246"],
                          capture_output=True, text=True, check=True)
    doc = json.loads(proc.stdout)
    assert doc["kind"] == "fermion20"
    assert [e for e in doc["amplitudes"] if e["re"] == 1.0][0]["index"] == [2, 4, 6]

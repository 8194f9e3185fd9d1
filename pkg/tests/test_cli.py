from __future__ import annotations

import json

import pytest

from nichols_forge.cli import main
from nichols_forge.fixtures import builtin


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip() else None
    return code, report, out.err


def test_hilbert(capsys):
    code, rep, _ = run(capsys, "hilbert", "--builtin", "O2_4_minus", "--max-degree", "13")
    assert code == 0
    assert rep["results"]["total"] == 576 and rep["results"]["dims"][13] == 0
    assert set(rep) == {"command", "inputs", "results", "timing", "version"}


def test_bound(capsys):
    code, rep, _ = run(capsys, "bound", "--builtin", "O2_4_minus", "--group-order", "24")
    assert code == 0 and rep["results"]["bound"] == 13824


def test_bound_refuses_when_not_terminated(capsys):
    code, rep, _ = run(capsys, "bound", "--builtin", "O2_4_minus", "--max-degree", "8")
    assert code == 1 and rep["results"]["bound"] is None


def test_canon(capsys):
    code, rep, _ = run(capsys, "canon", "--family", "Qchi", "--lambda", "7")
    assert code == 0 and rep["results"]["canonical"] == 1
    code, rep, _ = run(capsys, "canon", "--family", "D", "--params", "2,3")
    assert rep["results"]["canonical"] == [1, "3/2"]
    code, _, err = run(capsys, "canon", "--family", "Qminus", "--lambda", "1")
    assert code == 2 and "two parameters" in err


def test_rack_and_cocycle(capsys):
    code, rep, _ = run(capsys, "rack", "--builtin", "O4_4_minus")
    assert code == 0 and rep["results"]["axioms"]["valid"]
    code, rep, _ = run(capsys, "cocycle-check", "--builtin", "O2_4_chi")
    assert code == 0 and rep["results"]["valid"]


def test_relations(capsys):
    code, rep, _ = run(capsys, "relations", "--builtin", "O2_4_chi")
    assert code == 0
    assert rep["results"]["admissible"] == rep["results"]["kernel_dimension"] == 17


def test_derive(capsys):
    code, rep, _ = run(capsys, "derive", "--builtin", "O2_4_chi", "--word", "abacabacdedf",
                       "--chain", "cbcabdcbfdfe")
    assert code == 0 and rep["results"]["nonzero"] and rep["results"]["scalar"] != 0
    code, rep, _ = run(capsys, "derive", "--builtin", "O2_4_chi", "--word", "abacabacdedf")
    assert code == 0 and rep["results"]["found"]


def test_derive_zero_chain_fails_validation(capsys):
    code, rep, _ = run(capsys, "derive", "--builtin", "O2_4_chi", "--word", "aa", "--chain", "aa")
    assert code == 1 and rep["results"]["nonzero"] is False


def test_long_running_gates(capsys):
    code, _, err = run(capsys, "hilbert", "--builtin", "O2_5_minus")
    assert code == 2 and "--long-running" in err
    code, _, err = run(capsys, "derive", "--builtin", "O2_5_chi", "--witness", "5")
    assert code == 2


def test_ql(capsys):
    code, rep, _ = run(capsys, "ql", "validate", "--family", "Qminus", "--params", "1,2")
    assert code == 0 and rep["results"]["ok"]
    code, rep, _ = run(capsys, "ql", "present", "--family", "D")
    assert code == 0 and len(rep["results"]["quadratic"]) == 17
    code, _, _ = run(capsys, "ql", "validate", "--family", "nope")
    assert code == 2


def test_verify_rep(capsys):
    code, rep, _ = run(capsys, "verify-rep", "--family", "D")
    assert code == 0 and rep["results"]["presentation"]["ok"]
    assert rep["results"]["conditions"]["1,1"]["irreducible"]


def test_fixture_files(capsys, tmp_path):
    q = builtin("O2_3_minus")
    rack = tmp_path / "rack.json"
    rack.write_text(json.dumps(q.rack.to_json()))
    coc = tmp_path / "cocycle.json"
    coc.write_text(json.dumps({"values": q.to_json()["values"]}))
    code, rep, _ = run(capsys, "hilbert", "--rack", str(rack), "--cocycle", str(coc))
    assert code == 0 and rep["results"]["total"] == 12
    assert rep["inputs"]["rack"] == str(rack.resolve())


def test_non_rack_fails_validation(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"table": [[0, 2, 1], [2, 1, 0], [0, 1, 2]]}))
    code, rep, _ = run(capsys, "rack", "--rack", str(bad))
    assert code == 1 and not rep["results"]["axioms"]["valid"]


@pytest.mark.parametrize("content", ["{not json", json.dumps({"size": 2}),
                                     json.dumps({"table": [[0, 7], [1, 1]]})])
def test_malformed_fixture_files(capsys, tmp_path, content):
    path = tmp_path / "f.json"
    path.write_text(content)
    code, rep, err = run(capsys, "rack", "--rack", str(path))
    assert code == 2 and rep is None and err.startswith("error:")


def test_missing_file_and_usage_errors(capsys, tmp_path):
    assert run(capsys, "rack", "--rack", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "hilbert")[0] == 2
    assert run(capsys, "hilbert", "--builtin", "O2_3_minus", "--threads", "0")[0] == 2


def test_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("NICHOLS_FORGE_CACHE", str(tmp_path))
    code, first, _ = run(capsys, "hilbert", "--builtin", "O2_4_chi")
    code, second, _ = run(capsys, "hilbert", "--builtin", "O2_4_chi")
    assert not first["results"]["cache_hit"] and second["results"]["cache_hit"]
    assert first["results"]["dims"] == second["results"]["dims"]
    code, third, _ = run(capsys, "hilbert", "--builtin", "O2_4_chi", "--max-degree", "12")
    assert not third["results"]["cache_hit"]
    assert len(list(tmp_path.glob("*.json"))) == 2


def test_deterministic_results(capsys):
    _, a, _ = run(capsys, "relations", "--builtin", "O4_4_minus")
    _, b, _ = run(capsys, "relations", "--builtin", "O4_4_minus")
    assert a["results"] == b["results"]

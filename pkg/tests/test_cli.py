import json
import subprocess
import sys

import pytest

from wonderful.cli import FORMAT_ENV, main, render_text
from wonderful.monoids import monoid_from_json
from wonderful.systems import system_from_json

B2_VALID = '{"diagram":"B2","sp":[],"sigma":[{"coeffs":[1,1]}]}'
B2_ST = '{"diagram":"B2","sp":["a2"],"sigma":[{"coeffs":[1,1]}]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith(("{", "[")) else out)


def test_sph_roots_counts(capsys):
    for spec, n in (("G2", 4), ("A1", 1), ("A3", 8)):
        code, out = run(capsys, "sph-roots", spec)
        assert code == 0 and out["count"] == n
    code, out = run(capsys, "sph-roots", "A1")
    assert out["roots"] == [{"coeffs": [2], "row": "2alpha"}]


def test_roots(capsys):
    code, out = run(capsys, "roots", "G2")
    assert code == 0 and out["cartan"] == [[2, -3], [-1, 2]] and len(out["positive_roots"]) == 6


def test_bad_spec_exit_2(capsys):
    assert run(capsys, "sph-roots", "Q7")[0] == 2


def test_check_system(capsys, tmp_path):
    assert run(capsys, "check-system", B2_VALID)[0] == 0
    code, out = run(capsys, "check-system", B2_ST)
    assert code == 1
    assert out["axioms"]["St"] is False
    assert out["witnesses"]["St"][0]["sigma"] == [1, 1]
    assert run(capsys, "check-system", "{not json")[0] == 2
    path = tmp_path / "sys.json"
    path.write_text(B2_VALID)
    assert run(capsys, "check-system", str(path))[0] == 0
    assert run(capsys, "check-system", '{"diagram":"B2","sigma":[{"coeffs":[1,3]}]}')[0] == 2


def test_colors(capsys):
    code, out = run(capsys, "colors", B2_VALID)
    assert code == 0 and sorted(c["weight"] for c in out["colors"]) == [[0, 1], [1, 0]]
    assert run(capsys, "colors", B2_ST)[0] == 1


def test_enumerate_round_trip(capsys):
    code, out = run(capsys, "enumerate", "B2", "--primitive")
    assert code == 0 and out["count"] == 3
    for obj in out["systems"]:
        assert system_from_json(obj).to_json() == obj
    assert run(capsys, "enumerate", "E8")[0] == 3


def test_saturation_and_sp(capsys):
    code, out = run(capsys, "saturated", '{"diagram":"A2","generators":[[1,1],[3,0]]}')
    assert code == 1 and not out["saturated"] and not out["bruteforce_saturated"]
    code, out = run(capsys, "--box", "3", "saturated", '{"diagram":"B2","generators":[[1,0],[0,1]]}')
    assert code == 0 and out["saturated"] and out["bruteforce_box"] == 3
    assert run(capsys, "saturated", '{"diagram":"A2","generators":[[1,0],[2,0]]}')[0] == 2
    code, out = run(capsys, "sp", '{"diagram":"B2","generators":[[1,0]]}')
    assert out["sp"] == ["a2"]


def test_predict_and_tangent(capsys):
    m = '{"diagram":"A1xA1","generators":[[1,1]]}'
    code, out = run(capsys, "predict-sigma", m)
    assert code == 0 and out["sigma"] == [{"coeffs": [1, 1], "row": "A1xA1"}]
    assert monoid_from_json(out["monoid"]).to_json() == out["monoid"]
    code, out = run(capsys, "tangent", "--monoid", m, "--method", "both")
    assert code == 0 and out["agree"] and out["oracle"]["dimension"] == 1
    code, out = run(capsys, "tangent", "--monoid", '{"diagram":"A1","generators":[[1]]}')
    assert out["oracle"]["dimension"] == 0


def test_smoothness(capsys):
    code, out = run(capsys, "smoothness", "--monoid", '{"diagram":"A1","generators":[[2]]}')
    assert code == 0 and out["smooth"]
    code, out = run(capsys, "smoothness", "--monoid", '{"diagram":"A2","generators":[[1,1]]}',
                    "--cocycles")
    assert code == 1 and out["kernel_dim"] == 1 and "cocycle_check" in out
    assert run(capsys, "--v-cap", "5", "smoothness", "--monoid",
               '{"diagram":"A2","generators":[[1,1]]}')[0] == 3


def test_cross_validate(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    code, out = run(capsys, "cross-validate", "--corpus", str(empty))
    assert code == 0 and out["status"] == "PASS" and out["total"] == 0
    corpus = tmp_path / "c.json"
    corpus.write_text(json.dumps([
        {"diagram": "A1", "generators": [[2]]},
        {"diagram": "A2", "generators": [[1, 1], [3, 0]]},
        {"diagram": "B3", "generators": [[3, 3, 3]]},
    ]))
    code, out = run(capsys, "--v-cap", "100", "cross-validate", "--corpus", str(corpus), "--jobs", "2")
    assert [e["status"] for e in out["entries"]] == ["PASS", "REJECTED", "SKIPPED"]
    assert "not saturated" in out["entries"][1]["reason"]
    assert code == 1


def test_text_format_and_env(capsys, monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "text")
    code, out = run(capsys, "sp", '{"diagram":"B2","generators":[[1,0]]}')
    assert code == 0 and "sp: [a2]" in out
    monkeypatch.setenv(FORMAT_ENV, "json")
    code, out = run(capsys, "--format", "text", "sph-roots", "A1")
    assert "count: 1" in out


def test_render_text_is_derived_from_json():
    assert render_text({"a": [1, 2], "b": {"c": None}}) == "a: [1, 2]\nb:\n  c: -"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wonderful", "sph-roots", "B2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["count"] == 4

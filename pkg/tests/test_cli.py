import json
import os
import shutil

import pytest

from quadcomplex import jsonio
from quadcomplex.cli import main
from quadcomplex.corpus import default_corpus_dir
from quadcomplex.normalform import paper_case

CORPUS = default_corpus_dir()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_pencil(tmp_path, P, name="p.json"):
    path = tmp_path / name
    path.write_text(jsonio.dumps(jsonio.pencil_to_json(P)))
    return str(path)


def test_segre_paper_case_20(capsys, tmp_path):
    path = write_pencil(tmp_path, paper_case(20))
    code, out, _ = run(capsys, "segre", "--pencil", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["symbol"] == "[(111)111]"


def test_segre_routes_agree(capsys, tmp_path):
    path = write_pencil(tmp_path, paper_case(18))
    code, out, _ = run(capsys, "segre", "--pencil", path, "--route", "all")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and doc["symbol"] == "[(21)(11)1]"


def test_segre_on_proportional_pencil_exits_2(capsys, tmp_path):
    doc = jsonio.pencil_to_json(paper_case(1))
    doc["F"] = doc["G"]
    path = tmp_path / "fg.json"
    path.write_text(jsonio.dumps(doc))
    code, out, err = run(capsys, "segre", "--pencil", str(path))
    assert code == 2
    assert "degenerate pencil" in err


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "segre", "--pencil", "/nonexistent/x.json")
    assert code == 1
    assert "file not found" in err


def test_malformed_json_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    code, _, err = run(capsys, "segre", "--pencil", str(path))
    assert code == 1
    assert "line 1" in err and "column" in err


def test_output_determinism(capsys, tmp_path):
    path = write_pencil(tmp_path, paper_case(11))
    _, out1, _ = run(capsys, "surface", "--pencil", path)
    _, out2, _ = run(capsys, "surface", "--pencil", path)
    assert out1 == out2


def test_normal_form_roundtrip(capsys):
    code, out, _ = run(capsys, "normal-form", "--symbol", "[2211]",
                       "--roots", "0,1,2,3")
    doc = json.loads(out)
    assert code == 0 and doc["symbol"] == "[2211]"


def test_normal_form_case(capsys):
    code, out, _ = run(capsys, "normal-form", "--case", "20")
    assert code == 0
    assert json.loads(out)["symbol"] == "[(111)111]"


def test_stability_quadric(capsys, tmp_path):
    path = write_pencil(tmp_path, paper_case(1))
    code, out, _ = run(capsys, "stability", "quadric", "--pencil", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["semistable"] is True
    assert doc["pattern_unstable"] is False


def test_stability_quartic(capsys, tmp_path):
    from quadcomplex.surface import singular_surface
    q = singular_surface(paper_case(1))
    path = tmp_path / "q.json"
    path.write_text(jsonio.dumps(jsonio.quartic_to_json(q)))
    code, out, _ = run(capsys, "stability", "quartic", "--quartic", str(path),
                       "--point", "1,0,0,0")
    doc = json.loads(out)
    assert code == 0
    assert doc["pattern_unstable"] is False
    assert doc["triple_point"]["is_triple"] is False


def test_moduli_and_table(capsys):
    code, out, _ = run(capsys, "moduli", "--symbol", "[(111)111]")
    doc = json.loads(out)
    assert code == 0 and doc["dim_mqc"] == 2 and doc["dim_fiber"] == 2
    code, out, _ = run(capsys, "table73")
    assert code == 0 and json.loads(out)["all_match"]


def test_isomorphic_command(capsys, tmp_path):
    a = write_pencil(tmp_path, paper_case(1), "a.json")
    b = write_pencil(tmp_path, paper_case(1), "b.json")
    code, out, _ = run(capsys, "isomorphic", "--a", a, "--b", b)
    assert code == 0 and json.loads(out)["isomorphic"]


def test_cosingular_command(capsys):
    code, out, _ = run(capsys, "cosingular", "--lambdas", "0,1,2,3,4,5",
                       "--rho", "6", "--verify-phi", "--limit", "7", "--mobius")
    doc = json.loads(out)
    assert code == 0
    assert doc["symbol"] == "[111111]"
    assert doc["phi_verified"] is True
    assert doc["limit_equals_F_plus_rho0_G"] is True
    assert doc["mobius"]["equivalent"] is True


def test_klein_frame_show(capsys):
    code, out, _ = run(capsys, "klein-frame", "--show")
    doc = json.loads(out)
    assert code == 0 and len(doc["klein_from_plucker"]) == 6


def test_corpus_green(capsys):
    code, out, _ = run(capsys, "corpus")
    doc = json.loads(out)
    assert code == 0
    assert doc["failed"] == 0 and doc["passed"] == doc["total"] > 0


def test_corpus_filter(capsys):
    code, out, _ = run(capsys, "corpus", "--filter", "surface")
    doc = json.loads(out)
    assert code == 0
    assert doc["total"] > 0
    assert all(r["kind"] == "surface-class" for r in doc["results"])


def test_corpus_detects_corruption(capsys, tmp_path):
    dst = tmp_path / "corpus"
    shutil.copytree(CORPUS, dst)
    manifest = json.loads((dst / "manifest.json").read_text())
    victim = next(c for c in manifest["checks"] if c["kind"] == "segre")
    victim["expect"] = "[111111]" if victim["expect"] != "[111111]" else "[21111]"
    (dst / "manifest.json").write_text(json.dumps(manifest))
    code, out, _ = run(capsys, "corpus", "--dir", str(dst))
    doc = json.loads(out)
    assert code == 1 and doc["failed"] == 1
    bad = [r for r in doc["results"] if not r["ok"]]
    assert bad[0]["name"] == victim["name"]


def test_corpus_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QC_CORPUS_DIR", CORPUS)
    code, out, _ = run(capsys, "corpus")
    assert code == 0


def test_text_output_mode(capsys):
    code, out, _ = run(capsys, "moduli", "--symbol", "[111111]",
                       "--output", "text")
    assert code == 0
    assert "dim_mqc: 4" in out

# tests/test_cli.py
import io
import json

import pytest

from src.interfaces.cli.cli_app import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, WorkbenchCLI
from src.infrastructure.persistence.model_file_format import parse_class_map, parse_model


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = WorkbenchCLI(out=out, err=err).run(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def clique_file(tmp_path):
    path = tmp_path / "clique.km"
    path.write_text("model\nworlds 2\nedge 0 0\nedge 0 1\nedge 1 0\nedge 1 1\nval p 0 1\nval q 0\nend\n")
    return str(path)


def test_parse_and_render():
    code, out, _ = run("parse", "--formula", "[] ( p->q )")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "[](p -> q)"
    code, out, _ = run("render", "--fo", "builtin:phi_eq")
    assert code == EXIT_OK and out.startswith("fo 3\n")


def test_syntax_error_exit_code():
    code, out, err = run("parse", "--formula", "p &")
    assert code == EXIT_ERROR
    assert out == ""
    assert "linha 1" in err


def test_check_global_and_local(clique_file):
    assert run("check", "--model", clique_file, "--formula", "[]p")[0] == EXIT_OK
    code, out, _ = run("check", "--model", clique_file, "--formula", "q")
    assert code == EXIT_NEGATIVE
    assert "1" in out
    assert run("check", "--model", clique_file, "--formula", "q", "--world", "0")[0] == EXIT_OK
    assert run("check", "--model", clique_file, "--formula", "p", "--world", "5")[0] == EXIT_ERROR


def test_frame_check(clique_file):
    assert run("frame-check", "--model", clique_file, "--fo", "builtin:phi_grid")[0] == EXIT_OK
    code, out, _ = run("frame-check", "--model", clique_file, "--fo", "R(x1,x2) -> false")
    assert code == EXIT_NEGATIVE
    assert out.startswith("false: x1=")
    assert run("frame-check", "--model", clique_file, "--fo", "phi_grid")[0] == EXIT_ERROR


def test_quotient_writes_class_map(clique_file, tmp_path):
    output = tmp_path / "q.km"
    code, _, _ = run("quotient", "--model", clique_file, "--vars", "p,q", "--output", str(output))
    assert code == EXIT_OK
    text = output.read_text()
    abstract = parse_model(text)
    assert abstract.world_count == 1
    assert abstract.truth_set("p") == {0}
    assert abstract.truth_set("q") == frozenset()
    assert parse_class_map(text) == [(0, 1)]


def test_reduce_local_and_emit_fo():
    code, out, _ = run("reduce", "--formula", "<>true", "--local", "--emit-fo")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("__u & []!__u & [](")
    assert "fo 9" in out


def test_reduce_rejects_reserved_names():
    assert run("reduce", "--formula", "__d8a")[0] == EXIT_ERROR


def test_make_torus_with_valuation_file(tmp_path):
    val_file = tmp_path / "v.tv"
    val_file.write_text("torus-val\nval p 0,0 1,1\nend\n")
    code, out, _ = run("make-torus", "--width", "8", "--height", "4", "--val-file", str(val_file))
    assert code == EXIT_OK
    m = parse_model(out)
    assert m.world_count == 32
    assert m.truth_set("p") == {0, 5}
    assert run("make-torus", "--width", "5", "--height", "4")[0] == EXIT_ERROR


def test_find_exit_codes(tmp_path):
    witness = tmp_path / "w.km"
    code, out, _ = run("find", "--fo", "builtin:phi_final", "--formula", "__u & []!__u",
                       "--max-worlds", "1", "--emit-model", str(witness))
    assert code == EXIT_OK
    assert out.startswith("found")
    assert parse_model(witness.read_text()).world_count == 1
    assert run("find", "--fo", "true", "--formula", "p & !p", "--max-worlds", "2")[0] == EXIT_NEGATIVE
    code, out, _ = run("find", "--fo", "true", "--formula", "p & !p", "--max-worlds", "3",
                       "--frame-limit", "4")
    assert code == EXIT_ERROR
    assert out.startswith("aborted")


def test_verify_json():
    code, out, _ = run("verify", "gbridge", "--json")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert reports[0]["suite"] == "gbridge"
    assert reports[0]["failures"] == []


def test_pipeline_table(tmp_path):
    code, out, _ = run("pipeline", "--formula", "<>true", "--k", "2")
    assert code == EXIT_OK
    assert "interior global satisfaction" in out
    code, out, _ = run("pipeline", "--formula", "p & !p", "--json")
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["stages"][-1]["stage"] == "torus-global"

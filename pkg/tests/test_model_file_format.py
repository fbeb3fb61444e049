# tests/test_model_file_format.py
import pytest

from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import ModelFormatError
from src.infrastructure.persistence.file_model_repository import FileModelRepository
from src.infrastructure.persistence.model_file_format import (
    parse_class_map, parse_model, parse_torus_valuation, render_model, render_torus_valuation,
)

SAMPLE = """\
# cadeia com p no fim
model
worlds 3
edge 0 1
edge 1 2   # comentário no fim da linha
val p 2
val p 1
end
"""


def test_parse_sample():
    m = parse_model(SAMPLE)
    assert m.world_count == 3
    assert m.frame.edges == {(0, 1), (1, 2)}
    assert m.truth_set("p") == {1, 2}


def test_render_is_canonical():
    m = Model.create(2, [(1, 0), (0, 0)], {"q": [1], "p": [0, 1]})
    text = render_model(m, class_map=[[0, 3], [1]])
    assert text == (
        "# class 0: 0 3\n# class 1: 1\n"
        "model\nworlds 2\nedge 0 0\nedge 1 0\nval p 0 1\nval q 1\nend\n"
    )
    assert parse_model(text).structurally_equal(m)
    assert parse_class_map(text) == [(0, 3), (1,)]


@pytest.mark.parametrize("text, line", [
    ("worlds 2\nend\n", 1),
    ("model\nworlds 2\nedge 0 2\nend\n", 3),
    ("model\nworlds 2\nfoo 1\nend\n", 3),
    ("model\nedge 0 0\nend\n", 2),
    ("model\nworlds 2\nval 9p 0\nend\n", 3),
    ("model\nworlds 1\nval true 0\nend\n", 3),
    ("model\nworlds 1\nval false\nend\n", 3),
    ("model\nworlds 1\nend\nedge 0 0\n", 4),
    ("model\nworlds 1\n", 2),
    ("model\nworlds x\nend\n", 2),
])
def test_strict_errors_report_line(text, line):
    with pytest.raises(ModelFormatError) as info:
        parse_model(text)
    assert info.value.line_number == line


def test_torus_valuation_format():
    text = "torus-val\nval p 0,0 1,1\nval q\nend\n"
    valuation = parse_torus_valuation(text)
    assert valuation == {"p": {(0, 0), (1, 1)}, "q": set()}
    assert parse_torus_valuation(render_torus_valuation(valuation)) == valuation
    with pytest.raises(ModelFormatError):
        parse_torus_valuation("torus-val\nval p 0-0\nend\n")


def test_file_repository_round_trip(tmp_path):
    repository = FileModelRepository(str(tmp_path))
    m = Model.create(2, [(0, 1)], {"p": [1]})
    repository.save_model(m, "m.km")
    assert repository.load_model("m.km").structurally_equal(m)
    with pytest.raises(ModelFormatError):
        repository.load_model("missing.km")

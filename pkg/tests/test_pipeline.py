# tests/test_pipeline.py
from src.application.usecases.pipeline_usecases import INTERIOR_STAGE, PipelineUseCases
from src.infrastructure.parsing.modal_parser import parse_modal
from src.infrastructure.parsing.text_codec import TextCodec


def test_diamond_true_passes_every_stage():
    report = PipelineUseCases(TextCodec()).run(parse_modal("<>true"), 8, 4, {}, 3)
    assert report.passed
    assert report.stages[-1].stage == INTERIOR_STAGE
    assert len(report.stages) == 10


def test_checkerboard_passes(checkerboard_cells):
    psi = parse_modal("(p -> []!p) & (!p -> []p)")
    report = PipelineUseCases(TextCodec()).run(psi, 8, 4, {"p": checkerboard_cells}, 3)
    assert report.passed, [s for s in report.stages if not s.passed]


def test_contradiction_stops_on_input_torus():
    report = PipelineUseCases(TextCodec()).run(parse_modal("p & !p"), 8, 4, {}, 3)
    assert not report.passed
    assert report.stages[-1].stage == "torus-global"
    assert report.stages[-1].world == 0


def test_deep_formula_is_rejected_first():
    report = PipelineUseCases(TextCodec()).run(parse_modal("[][]true"), 8, 4, {}, 3)
    assert [s.stage for s in report.stages] == ["modal-depth"]
    assert not report.passed


def test_bad_dimensions_fail_at_hat_stage():
    report = PipelineUseCases(TextCodec()).run(parse_modal("<>true"), 6, 4, {}, 3)
    assert report.stages[-1].stage == "hat-phi-grid"
    assert not report.stages[-1].passed

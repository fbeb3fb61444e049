# tests/test_verification.py
import asyncio

import pytest

from src.application.dtos.reports import CaseFailure
from src.application.interfaces.services.model_finder_interface import ModelFinderInterface
from src.application.usecases.verification_usecases import (
    SUITE_NAMES, SuiteOptions, SuitePorts, VerificationUseCases, _failure, replay_failure,
    resp_grid_models, reflexive_frames, roundtrip_failures, run_suite, suite_oracle,
    torus_pattern,
)
from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import UnknownSuiteError
from src.domain.services.builtin_kernels import builtin
from src.domain.services.grid_encoding import make_torus_hat_model
from src.domain.value_objects.modal_formula import Box, Not, Var
from src.domain.value_objects.search_outcome import SearchMode, SearchOutcome, SearchStatus
from src.infrastructure.parsing.modal_parser import parse_modal

SMALL = SuiteOptions(
    lemma3_max_worlds=3, lemma4_max_worlds=2, subframe_max_worlds=3,
    oracle_max_worlds=2, oracle_max_depth=1,
)


class FixedStatusFinder(ModelFinderInterface):
    """Buscador que sempre responde o mesmo status, sem modelo."""

    def __init__(self, status: SearchStatus):
        self.status = status

    def find_model(self, kernel, formula, max_worlds, mode=SearchMode.LOCAL):
        return SearchOutcome(status=self.status, max_worlds=max_worlds)


def assert_replays(failure: CaseFailure, codec):
    restored = CaseFailure.parse_raw(failure.json())
    assert replay_failure(restored, codec) == (failure.formula_holds, failure.kernel_holds)


def test_reflexive_frame_counts():
    assert len(list(reflexive_frames(1))) == 1
    assert len(list(reflexive_frames(3))) == 64
    assert all(frame.is_reflexive() for frame in reflexive_frames(3))


def test_torus_patterns():
    assert len(torus_pattern(8, 4, "checkerboard")) == 16
    assert torus_pattern(8, 4, "random", seed=3) == torus_pattern(8, 4, "random", seed=3)
    with pytest.raises(ValueError):
        torus_pattern(8, 4, "spiral")


def test_resp_grid_generator_has_enough_models():
    models = list(resp_grid_models())
    assert len(models) >= 50
    assert any(m.world_count > 32 and m.world_count < 64 for _, m, _ in models)


@pytest.mark.parametrize("name", ["lemma3", "lemma4", "subframe", "oracle"])
def test_exhaustive_suites_small_limits(name, suite_ports):
    report = run_suite(name, SMALL, suite_ports)
    assert report.cases_run > 0
    assert report.passed, report.failures[:1]


@pytest.mark.parametrize("name", ["thm6-forward", "thm8-roundtrip"])
def test_reduction_suites(name, suite_ports):
    report = run_suite(name, SMALL, suite_ports)
    assert report.cases_run >= 3
    assert report.passed, report.failures[:1]


def test_quotient_suite_with_random_extension(suite_ports):
    options = SuiteOptions(lemma4_max_worlds=2, seed=4, random_cases=10)
    assert run_suite("lemma4", options, suite_ports).passed


def test_unknown_suite(suite_ports):
    with pytest.raises(UnknownSuiteError):
        run_suite("lemma9", SMALL, suite_ports)
    with pytest.raises(UnknownSuiteError):
        VerificationUseCases.resolve(["lemma3", "nope"])


def test_resolve_all_keeps_canonical_order():
    assert VerificationUseCases.resolve(["all"]) == list(SUITE_NAMES)
    assert VerificationUseCases.resolve(["lemma4", "lemma3", "lemma4"]) == ["lemma4", "lemma3"]


def test_verify_many_orders_reports(suite_ports):
    usecases = VerificationUseCases(suite_ports, SMALL, workers=1)
    reports = asyncio.run(usecases.verify_many(["subframe", "lemma3"]))
    assert [r.suite for r in reports] == ["subframe", "lemma3"]


def test_verify_many_in_parallel(suite_ports):
    usecases = VerificationUseCases(suite_ports, SMALL, workers=2)
    reports = asyncio.run(usecases.verify_many(["lemma3", "thm6-forward"]))
    assert [r.suite for r in reports] == ["lemma3", "thm6-forward"]
    assert all(r.passed for r in reports)


def test_failure_at_world_replays(suite_ports, codec, chain_model):
    failure = _failure(suite_ports, 0, "[]!p em 0", chain_model, Box(Not(Var("p"))), world=0)
    assert failure.formula_holds is False
    assert failure.kernel_text is None and failure.kernel_holds is None
    assert_replays(failure, codec)


def test_failure_with_kernel_replays(suite_ports, codec, chain_model):
    failure = _failure(suite_ports, 1, "kernel", chain_model, Var("p"), kernel=builtin("phi_1step"))
    assert failure.formula_holds is False
    assert failure.kernel_holds is False
    assert failure.kernel_text.startswith("fo 4")
    assert_replays(failure, codec)


def test_failure_on_empty_frame_replays(suite_ports, codec):
    failure = _failure(suite_ports, 2, "vazio", Model(frame=Frame.create(0)), Var("p"),
                       kernel=builtin("phi_eq"))
    assert failure.model_text == "model\nworlds 0\nend\n"
    assert (failure.formula_holds, failure.kernel_holds) == (True, True)
    assert_replays(failure, codec)


def test_oracle_disagreement_records_the_found_model(suite_ports, codec):
    ports = SuitePorts(
        codec=codec, primary_finder=suite_ports.primary_finder,
        oracle_finder=FixedStatusFinder(SearchStatus.EXHAUSTED),
    )
    report = suite_oracle(SMALL, ports)
    assert report.failures
    for failure in report.failures:
        assert failure.world is not None
        assert (failure.formula_holds, failure.kernel_holds) == (True, True)
        assert_replays(failure, codec)


def test_oracle_disagreement_without_models_records_empty_frame(codec):
    ports = SuitePorts(
        codec=codec,
        primary_finder=FixedStatusFinder(SearchStatus.ABORTED),
        oracle_finder=FixedStatusFinder(SearchStatus.EXHAUSTED),
    )
    report = suite_oracle(SMALL, ports)
    assert len(report.failures) == report.cases_run
    failure = report.failures[0]
    assert "frame vazio" in failure.description
    assert failure.model_text == "model\nworlds 0\nend\n"
    assert_replays(failure, codec)


def test_roundtrip_passes_on_checkerboard(suite_ports, checkerboard_cells):
    psi = parse_modal("(p -> []!p) & (!p -> []p)")
    hat = make_torus_hat_model(8, 4, {"p": checkerboard_cells})
    assert roundtrip_failures(suite_ports, 0, psi, hat) == []


def test_roundtrip_failure_replays(suite_ports, codec, checkerboard_cells):
    hat = make_torus_hat_model(8, 4, {"p": checkerboard_cells})
    failures = roundtrip_failures(suite_ports, 0, parse_modal("p"), hat)
    assert len(failures) == 1
    assert failures[0].world is not None
    assert failures[0].formula_holds is False
    assert_replays(failures[0], codec)


@pytest.mark.slow
@pytest.mark.parametrize("name", SUITE_NAMES)
def test_full_suites(name, suite_ports):
    report = run_suite(name, SuiteOptions.from_settings(), suite_ports)
    assert report.passed, report.failures[:1]

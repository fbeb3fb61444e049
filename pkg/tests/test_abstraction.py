# tests/test_abstraction.py
import pytest

from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import PreconditionViolation
from src.domain.services.abstraction import (
    check_abstraction_structure, compute_partition, quotient, quotient_frame,
    respect_violations, respects, two_step_targets,
)
from src.domain.services.model_checker import check
from src.domain.value_objects.partition import Partition
from src.infrastructure.parsing.modal_parser import parse_modal

from test_fo_evaluator import grid_fragment


def test_clique_is_one_class(reflexive_clique):
    assert compute_partition(reflexive_clique).classes == (frozenset({0, 1}),)


def test_antichain_is_discrete():
    m = Model.create(3, [(0, 0), (1, 1), (2, 2)])
    assert compute_partition(m).is_discrete()


def test_hat_torus_is_discrete(hat_torus):
    assert compute_partition(hat_torus).is_discrete()


def test_partition_rejects_non_reflexive(chain_model):
    with pytest.raises(PreconditionViolation) as info:
        compute_partition(chain_model)
    assert info.value.check == "reflexive"
    assert info.value.witnesses == (0,)


def test_partition_rejects_phi_eq_failure():
    # 0 ~ 1 e 1 -> 2, mas não 0 -> 2
    m = Model.create(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2)])
    with pytest.raises(PreconditionViolation) as info:
        compute_partition(m)
    assert info.value.check == "phi_eq"
    assert info.value.witnesses


def test_partition_classes_are_validated():
    with pytest.raises(ValueError):
        Partition.from_classes([{0, 1}, {1, 2}])
    with pytest.raises(ValueError):
        Partition.from_classes([{0}, {2}])


def test_quotient_all_members_rule(reflexive_clique):
    both = reflexive_clique.with_valuation({"p": [0, 1]})
    abstract = quotient(both, {"p"})
    assert abstract.world_count == 1
    assert abstract.frame.edges == {(0, 0)}
    assert abstract.truth_set("p") == {0}

    one = reflexive_clique.with_valuation({"p": [0]})
    assert quotient(one, {"p"}).truth_set("p") == frozenset()


def test_quotient_drops_variables_outside_p(reflexive_clique):
    m = reflexive_clique.with_valuation({"p": [0, 1], "q": [0, 1]})
    abstract = quotient(m, {"p"})
    assert "q" not in abstract.valuation


def test_quotient_is_idempotent():
    m = Model.create(
        4,
        [(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 0), (0, 2), (1, 2), (2, 3)],
        {"p": [0, 1, 3]},
    )
    once = quotient(m, {"p"})
    twice = quotient(once, {"p"})
    assert once.world_count == 3
    assert twice.structurally_equal(once)


def test_quotient_preserves_formulas_when_p_is_respected():
    m = Model.create(
        4,
        [(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 0), (0, 2), (1, 2), (2, 3)],
        {"p": [0, 1, 3]},
    )
    partition = compute_partition(m)
    abstract = quotient(m, {"p"}, partition)
    for text in ("[]p", "<>!p", "[]<>p", "p -> []<>!p", "<>[]p"):
        f = parse_modal(text)
        for w in m.worlds:
            assert check(m, w, f) == check(abstract, partition.class_of[w], f)


def test_respects_examples(reflexive_clique, hat_torus):
    assert respects(hat_torus, {"__d8a", "__d8b", "__d8c"})
    assert respects(Model.create(2, [(0, 1)], {"p": [0]}), {"p"})
    differing = reflexive_clique.with_valuation({"p": [0]})
    assert not respects(differing, {"p"})
    assert respect_violations(differing, {"p"}) == ((0, 1, "p"),)


def test_structure_of_grid_closure():
    assert check_abstraction_structure(grid_fragment(5).reflexive_closure()).all_hold()


def test_structure_of_reflexive_star():
    star = Frame.create(4, [(0, 1), (0, 2), (0, 3)]).reflexive_closure()
    structure = check_abstraction_structure(star)
    assert structure.reflexive
    assert not structure.max_two_succ


def test_structure_of_singleton_and_empty():
    assert check_abstraction_structure(Frame.create(1, [(0, 0)])) == (True, True, True)
    assert check_abstraction_structure(Frame.create(0)).all_hold()


def test_quotient_frame_and_two_step_targets():
    frame = Frame.create(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (0, 2)])
    abstract, partition = quotient_frame(frame)
    assert partition.classes == (frozenset({0, 1}), frozenset({2}))
    assert abstract.edges == {(0, 0), (1, 1), (0, 1)}
    assert two_step_targets(grid_fragment(3).reflexive_closure(), 0) == {2, 4, 6}

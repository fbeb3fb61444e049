# tests/test_model_checker.py
import random

import pytest

from src.domain.entities.frame import Frame
from src.domain.entities.model import Model, is_isomorphic
from src.domain.exceptions.domain_exceptions import WorldOutOfRangeError
from src.domain.services.formula_generator import random_formulas
from src.domain.services.model_checker import (
    check, check_global, partial_labeling, satisfying_worlds,
)
from src.domain.value_objects.modal_formula import And, Box, Dia, Not, Or, Var
from src.infrastructure.parsing.modal_parser import parse_modal


def random_models(seed: int, count: int, max_worlds: int = 5):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_worlds)
        edges = [(i, j) for i in range(n) for j in range(n) if rng.random() < 0.35]
        valuation = {name: [w for w in range(n) if rng.random() < 0.5] for name in ("p", "q")}
        yield Model.create(n, edges, valuation)


def test_reflexive_world_box():
    m = Model.create(1, [(0, 0)], {"p": [0]})
    assert check(m, 0, parse_modal("[]p"))


def test_vacuous_box():
    m = Model.create(1)
    assert check(m, 0, parse_modal("[]false"))


def test_chain_diamond(chain_model):
    assert check(chain_model, 0, parse_modal("<>p & !p"))


def test_check_global_examples(chain_model):
    assert check_global(Model.create(2), parse_modal("[]false"))
    assert not check_global(chain_model, parse_modal("<>true"))


def test_world_out_of_range(chain_model):
    with pytest.raises(WorldOutOfRangeError):
        check(chain_model, 2, parse_modal("p"))


def test_sym_related(reflexive_clique, chain_model):
    assert Model.create(1, [(0, 0)]).sym_related(0, 0)
    assert not chain_model.sym_related(0, 1)
    assert reflexive_clique.sym_related(0, 1)


def test_reflexive_closure_and_drop():
    frame = Frame.create(2, [(0, 1)])
    assert frame.reflexive_closure().edges == {(0, 0), (1, 1), (0, 1)}
    reflexive = Frame.create(2, [(0, 0), (1, 1), (1, 0)])
    assert reflexive.drop_reflexive_edges().reflexive_closure() == reflexive
    assert not frame.is_reflexive()


def test_absent_variables_are_false(chain_model):
    assert not check(chain_model, 1, Var("q"))
    assert satisfying_worlds(chain_model, Not(Var("q"))) == {0, 1}


def test_labeling_agrees_with_recursive_check():
    formulas = random_formulas(7, 40, ("p", "q"), 4)
    for m in random_models(11, 25):
        for f in formulas:
            holding = satisfying_worlds(m, f)
            assert holding == {w for w in m.worlds if check(m, w, f)}
            assert check_global(m, f) == all(check(m, w, f) for w in m.worlds)


def test_boolean_laws_and_diamond_abbreviation():
    formulas = random_formulas(3, 15, ("p", "q"), 3)
    for m in random_models(5, 15):
        for f in formulas:
            for g in formulas[:5]:
                for w in m.worlds:
                    assert check(m, w, And(f, g)) == (check(m, w, f) and check(m, w, g))
                    assert check(m, w, Or(f, g)) == (check(m, w, f) or check(m, w, g))
                    assert check(m, w, Not(f)) != check(m, w, f)
            for w in m.worlds:
                assert check(m, w, Dia(f)) == (not check(m, w, Box(Not(f))))


def test_partial_labeling_is_sound_and_complete_on_total_valuations():
    f = parse_modal("[]p -> <>(q & !p)")
    for m in random_models(21, 10, 4):
        full = m.frame.full_mask
        partial = {
            name: (m.truth_mask(name), full & ~m.truth_mask(name)) for name in ("p", "q")
        }
        true_mask, false_mask = partial_labeling(m.frame, partial, f)
        holding = satisfying_worlds(m, f)
        assert {w for w in m.worlds if true_mask >> w & 1} == holding
        assert {w for w in m.worlds if false_mask >> w & 1} == set(m.worlds) - holding


def test_partial_labeling_leaves_unknown_cells_undecided():
    frame = Frame.create(2, [(0, 1)])
    # p indefinida em 1
    true_mask, false_mask = partial_labeling(frame, {"p": (0, 0b01)}, parse_modal("<>p"))
    assert not (true_mask | false_mask) & 0b01
    assert false_mask & 0b10


def test_inflate_world_preserves_formulas():
    m = Model.create(3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)], {"p": [1]})
    inflated = m.inflate_world(1)
    assert inflated.world_count == 4
    assert inflated.sym_related(1, 3)
    for f in random_formulas(9, 30, ("p",), 3):
        for w in m.worlds:
            assert check(m, w, f) == check(inflated, w, f)
        assert check(inflated, 3, f) == check(m, 1, f)


def test_induced_submodel_and_isomorphism():
    m = Model.create(3, [(0, 1), (1, 2)], {"p": [2]})
    sub, mapping = m.induced_submodel([2, 1])
    assert mapping == {2: 0, 1: 1}
    assert sub.frame.edges == {(1, 0)}
    assert sub.truth_set("p") == {0}
    assert is_isomorphic(sub, Model.create(2, [(0, 1)], {"p": [1]}))
    assert not is_isomorphic(sub, Model.create(2, [(0, 1)], {"p": [0]}))


def test_successors_predecessors_and_induced_subframe():
    frame = Frame.create(4, [(0, 1), (0, 2), (3, 2), (2, 2)])
    assert frame.successors(0) == (1, 2)
    assert frame.predecessors(2) == (0, 2, 3)
    assert frame.predecessors(3) == ()
    sub = frame.induced_subframe([2, 0])
    assert sub.world_count == 2
    assert sub.edges == {(0, 0), (1, 0)}
    with pytest.raises(ValueError):
        frame.induced_subframe([1, 1])
    with pytest.raises(WorldOutOfRangeError):
        frame.successors(4)


def test_equal_models_hash_equal():
    first = Model.create(2, [(0, 1)], {"p": [1]})
    second = Model.create(2, [(0, 1)], {"p": {1}})
    other = Model.create(2, [(0, 1)], {"p": [0]})
    assert first == second and hash(first) == hash(second)
    assert first != other
    assert {first, second, other} == {first, other}

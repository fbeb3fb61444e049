# tests/test_grid_encoding.py
import random

import pytest
from hypothesis import given, settings, strategies as st

from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import (
    DimensionError, PreconditionViolation, ReservedNameError, UnfoldError,
)
from src.domain.services.abstraction import respects
from src.domain.services.builtin_kernels import builtin
from src.domain.services.fo_evaluator import eval_universal
from src.domain.services.formula_generator import random_formula
from src.domain.services.grid_encoding import (
    D8_BITS, U_VAR, add_universal_world, d8_eq, d8_offset_violations, d8_value, degrid,
    extract_generated_submodel, fragment_world, interior_worlds, localize,
    make_torus_hat_model, make_torus_model, nonsymmetric_successors, psi_resp,
    psi_succ, reduce_f, torus_world, translate_g, unfold_grid_fragment,
)
from src.domain.services.model_checker import check, check_global, satisfying_worlds
from src.domain.value_objects.modal_formula import (
    TRUE, And, Box, Imp, Not, Var, conjunction, modal_depth, subformulas, variables,
)
from src.infrastructure.parsing.modal_parser import parse_modal, render_modal


def test_d8_eq_examples():
    assert render_modal(d8_eq(0)) == "!__d8a & !__d8b & !__d8c"
    assert render_modal(d8_eq(7)) == "__d8a & __d8b & __d8c"
    assert render_modal(d8_eq(5)) == "__d8a & !__d8b & __d8c"
    with pytest.raises(ValueError):
        d8_eq(8)


def test_exactly_one_d8_value_per_world(hat_torus):
    for w in hat_torus.worlds:
        holding = [d for d in range(8) if check(hat_torus, w, d8_eq(d))]
        assert holding == [d8_value(hat_torus, w)]


def test_psi_resp_shapes():
    empty = psi_resp(set())
    assert modal_depth(empty) == 1
    assert variables(empty) == set(D8_BITS)
    with_p = psi_resp({"p"})
    here = d8_eq(0)
    p = Var("p")
    assert Imp(here, Imp(p, Box(Imp(here, p)))) in set(subformulas(with_p))
    assert modal_depth(with_p) == 1


def test_psi_resp_literal_scoping():
    assert psi_resp(set(), literal_scoping=True) == TRUE
    literal = psi_resp({"p"}, literal_scoping=True)
    assert variables(literal) == {"p"} | set(D8_BITS)


def test_psi_resp_rejects_reserved_names():
    with pytest.raises(ReservedNameError):
        psi_resp({"__u"})


def test_psi_succ():
    assert modal_depth(psi_succ()) == 1
    wrap = Imp(d8_eq(6), And(parse_modal("<>(!__d8a & !__d8b & !__d8c)"),
                             parse_modal("<>(!__d8a & !__d8b & __d8c)")))
    assert wrap in set(subformulas(psi_succ()))
    lonely = Model.create(1, [(0, 0)])
    assert not check(lonely, 0, psi_succ())


def test_translate_g_examples():
    p = Var("p")
    assert translate_g(p) == p
    boxed = translate_g(Box(p))
    assert boxed == conjunction(
        Imp(d8_eq(d), Box(Imp(Not(d8_eq(d)), p))) for d in range(8)
    )
    assert translate_g(Not(Box(p))) == Not(boxed)
    assert variables(boxed) == {"p"} | set(D8_BITS)
    with pytest.raises(ReservedNameError):
        translate_g(Var("__d8a"))


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_translate_g_preserves_modal_depth(seed):
    f = random_formula(random.Random(seed), ("p", "q"), 5)
    assert modal_depth(translate_g(f)) == modal_depth(f)


def test_reduce_f_examples():
    assert reduce_f(TRUE) == And(psi_resp(set()), psi_succ())
    reduced = reduce_f(parse_modal("[]p"))
    assert variables(reduced) == {"p"} | set(D8_BITS)
    assert modal_depth(reduced) == 1


def test_localize():
    assert render_modal(localize(TRUE)) == "__u & []!__u & []true"
    assert modal_depth(localize(parse_modal("[]p"))) == 2
    with pytest.raises(ReservedNameError):
        localize(Var(U_VAR))


def test_torus_d8_layout(hat_torus):
    assert d8_value(hat_torus, torus_world(0, 0, 4)) == 0
    assert d8_value(hat_torus, torus_world(1, 0, 4)) == 3
    assert d8_value(hat_torus, torus_world(0, 1, 4)) == 2
    assert hat_torus.is_reflexive()


def test_torus_dimension_checks():
    with pytest.raises(DimensionError):
        make_torus_hat_model(6, 4)
    with pytest.raises(DimensionError):
        make_torus_hat_model(8, 2)
    with pytest.raises(DimensionError):
        make_torus_model(3, 3, {"p": [(3, 0)]})
    with pytest.raises(ReservedNameError):
        make_torus_model(3, 3, {"__u": [(0, 0)]})


def test_hat_torus_satisfies_grid_and_reduction(hat_torus):
    assert eval_universal(hat_torus.frame, builtin("phi_grid"))
    assert check_global(hat_torus, And(psi_resp(set()), psi_succ()))
    assert check_global(hat_torus, reduce_f(parse_modal("<>true")))


def test_universal_world(hat_torus):
    universal, w_u = add_universal_world(hat_torus)
    assert w_u == 32
    assert not universal.frame.has_edge(w_u, w_u)
    assert check(universal, w_u, parse_modal("__u & []!__u"))
    assert eval_universal(universal.frame, builtin("phi_final"))
    extracted, mapping = extract_generated_submodel(universal, w_u)
    assert mapping == {w: w for w in hat_torus.worlds}
    assert extracted.structurally_equal(hat_torus)


def test_universal_world_preconditions(chain_model, reflexive_clique):
    with pytest.raises(PreconditionViolation):
        add_universal_world(chain_model)
    universal, w_u = add_universal_world(reflexive_clique)
    assert eval_universal(universal.frame, builtin("phi_univ"))
    with pytest.raises(PreconditionViolation):
        extract_generated_submodel(reflexive_clique, 0)


def test_degrid_recovers_plain_torus(checkerboard_cells):
    base = {"p": checkerboard_cells}
    hat = make_torus_hat_model(8, 4, base)
    m0 = degrid(hat, {"p"})
    plain = make_torus_model(8, 4, base)
    assert m0.frame == plain.frame
    assert m0.truth_set("p") == plain.truth_set("p")
    assert all(len(m0.frame.successors(w)) == 2 for w in m0.worlds)
    assert check_global(m0, psi_resp({"p"}))


def test_degrid_rejects_missing_preconditions(chain_model):
    with pytest.raises(PreconditionViolation) as info:
        degrid(chain_model, set())
    assert info.value.check == "reflexive"


def test_unfold_fragment_matches_torus(checkerboard_cells):
    base = {"p": checkerboard_cells}
    m0 = degrid(make_torus_hat_model(8, 4, base), {"p"})
    k = 2
    fragment = unfold_grid_fragment(m0, 0, k)
    assert fragment.world_count == 9
    for i in range(k + 1):
        for j in range(k + 1):
            w = fragment_world(i, j, k)
            assert fragment.true_at("p", w) == ((i + j) % 2 == 0)
            assert d8_value(fragment, w) == (3 * i + 2 * j) % 8
    assert fragment.frame.successors(fragment_world(0, 0, k)) == (
        fragment_world(0, 1, k), fragment_world(1, 0, k),
    )
    psi = parse_modal("(p -> []!p) & (!p -> []p)")
    holding = satisfying_worlds(fragment, psi)
    assert all(w in holding for w in interior_worlds(k))


def test_unfold_detects_missing_successor():
    m0 = Model.create(1, [], {})
    with pytest.raises(UnfoldError) as info:
        unfold_grid_fragment(m0, 0, 1)
    assert info.value.world == 0


def test_converse_chain_from_universal_world_to_fragment(checkerboard_cells):
    psi = parse_modal("(p -> []!p) & (!p -> []p)")
    hat = make_torus_hat_model(8, 4, {"p": checkerboard_cells})
    universal, w_u = add_universal_world(hat)
    assert eval_universal(universal.frame, builtin("phi_final"))
    assert check(universal, w_u, localize(reduce_f(psi)))

    extracted, _ = extract_generated_submodel(universal, w_u)
    k = 3
    fragment = unfold_grid_fragment(degrid(extracted, {"p"}), 0, k)
    closed = fragment.with_frame(fragment.frame.reflexive_closure())
    assert eval_universal(closed.frame, builtin("phi_grid"))
    assert not eval_universal(fragment.frame, builtin("phi_grid"))
    holding = satisfying_worlds(fragment, psi)
    assert set(interior_worlds(k)) <= holding


def test_offsets_and_bridge_on_inflated_torus(checkerboard_cells):
    m = make_torus_hat_model(8, 4, {"p": checkerboard_cells}).inflate_world(5)
    assert eval_universal(m.frame, builtin("phi_grid"))
    assert check_global(m, psi_resp({"p"}))
    assert respects(m, {"p"} | set(D8_BITS))
    assert d8_offset_violations(m) == []
    xi = parse_modal("p | <>!p")
    boxed = satisfying_worlds(m, translate_g(Box(xi)))
    inner = satisfying_worlds(m, translate_g(xi))
    for w in m.worlds:
        expected = all(s in inner for s in nonsymmetric_successors(m, w))
        assert (w in boxed) == expected

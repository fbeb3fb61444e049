# tests/test_modal_parser.py
import pytest
from hypothesis import given, settings, strategies as st

from src.domain.exceptions.domain_exceptions import FormulaSyntaxError, ReservedNameError
from src.domain.value_objects.modal_formula import (
    FALSE, TRUE, And, Box, Dia, Iff, Imp, Not, Or, Var, modal_depth, subformulas, variables,
)
from src.infrastructure.parsing.modal_parser import parse_modal, render_modal

p, q, u = Var("p"), Var("q"), Var("u")

names = st.sampled_from(["p", "q", "r", "x_1", "__d8a"])
leaves = st.one_of(names.map(Var), st.just(TRUE), st.just(FALSE))
formulas = st.recursive(
    leaves,
    lambda inner: st.one_of(
        inner.map(Not), inner.map(Box), inner.map(Dia),
        st.tuples(inner, inner).map(lambda t: And(*t)),
        st.tuples(inner, inner).map(lambda t: Or(*t)),
        st.tuples(inner, inner).map(lambda t: Imp(*t)),
        st.tuples(inner, inner).map(lambda t: Iff(*t)),
    ),
    max_leaves=24,
)


@pytest.mark.parametrize("text, expected", [
    ("[](p -> <>q)", Box(Imp(p, Dia(q)))),
    ("p & !p", And(p, Not(p))),
    ("u & [] !u", And(u, Box(Not(u)))),
    ("~p", Not(p)),
    ("p -> q -> p", Imp(p, Imp(q, p))),
    ("p <-> q <-> p", Iff(Iff(p, q), p)),
    ("p | q & p", Or(p, And(q, p))),
    ("!p & q", And(Not(p), q)),
    ("[]p -> p  # comentário", Imp(Box(p), p)),
    ("true | false", Or(TRUE, FALSE)),
])
def test_parse_examples(text, expected):
    assert parse_modal(text) == expected


@pytest.mark.parametrize("formula, text", [
    (Box(p), "[]p"),
    (Dia(TRUE), "<>true"),
    (And(p, Not(p)), "p & !p"),
    (Imp(Imp(p, q), p), "(p -> q) -> p"),
    (Not(And(p, q)), "!(p & q)"),
])
def test_render_examples(formula, text):
    assert render_modal(formula) == text


@pytest.mark.parametrize("text", ["p &", "(p", "[] ", "p q", "p -> -> q", "3p"])
def test_syntax_errors_carry_position(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_modal(text)
    assert info.value.line == 1
    assert info.value.column >= 1


def test_syntax_error_line_number():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_modal("p &\n& q")
    assert info.value.line == 2


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_render_parse_round_trip(f):
    assert parse_modal(render_modal(f)) == f


@settings(max_examples=100, deadline=None)
@given(formulas)
def test_variables_monotone_under_subformulas(f):
    for sub in subformulas(f):
        assert variables(sub) <= variables(f)


def test_modal_depth_and_variables():
    assert modal_depth(p) == 0
    assert modal_depth(Box(Dia(p))) == 2
    assert modal_depth(And(Box(p), Not(Dia(Box(q))))) == 2
    assert variables(parse_modal("p & []q")) == {"p", "q"}
    assert variables(TRUE) == frozenset()


@pytest.mark.parametrize("name", ["true", "false"])
def test_constants_are_not_variable_names(name):
    with pytest.raises(ReservedNameError):
        Var(name)


def test_constants_parse_as_constants():
    assert parse_modal("[]true") == Box(TRUE)
    assert variables(parse_modal("true -> false")) == frozenset()

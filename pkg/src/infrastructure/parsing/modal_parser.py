# src/infrastructure/parsing/modal_parser.py
"""Parser (lark, LALR) e impressão com precedência mínima de fórmulas modais."""
import logging
from typing import Tuple

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from src.domain.exceptions.domain_exceptions import FormulaSyntaxError
from src.domain.value_objects.modal_formula import (
    FALSE, TRUE, And, Bottom, Box, Dia, Iff, Imp, ModalFormula, Not, Or, Top, Var,
)

logger = logging.getLogger(__name__)

# Precedência: <-> (esq.) < -> (dir.) < | < & < unários
MODAL_GRAMMAR = r"""
    ?start: iff

    ?iff: imp
        | iff "<->" imp         -> equivalence

    ?imp: disj
        | disj "->" imp         -> implication

    ?disj: conj
         | disj "|" conj        -> disjunction

    ?conj: unary
         | conj "&" unary       -> conjunction

    ?unary: ("!" | "~") unary   -> negation
          | "[]" unary          -> box
          | "<>" unary          -> diamond
          | atom

    ?atom: "true"               -> true
         | "false"              -> false
         | IDENT                -> var
         | "(" iff ")"

    IDENT: /[a-zA-Z_][a-zA-Z0-9_]*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


class _ModalTransformer(Transformer):
    def equivalence(self, items):
        return Iff(items[0], items[1])

    def implication(self, items):
        return Imp(items[0], items[1])

    def disjunction(self, items):
        return Or(items[0], items[1])

    def conjunction(self, items):
        return And(items[0], items[1])

    def negation(self, items):
        return Not(items[0])

    def box(self, items):
        return Box(items[0])

    def diamond(self, items):
        return Dia(items[0])

    def true(self, items):
        return TRUE

    def false(self, items):
        return FALSE

    def var(self, items):
        return Var(str(items[0]))


def syntax_error_from(error: UnexpectedInput, text: str) -> FormulaSyntaxError:
    """Converte um erro do lark em FormulaSyntaxError com posição."""
    position = getattr(error, "pos_in_stream", None)
    if position is None:
        token = getattr(error, "token", None)
        position = getattr(token, "start_pos", None)
    if position is None or position < 0:
        position = len(text)
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if line is None or line < 1:
        line = text.count("\n", 0, position) + 1
        column = position - (text.rfind("\n", 0, position) + 1) + 1
    found = text[position:position + 10] or "fim da entrada"
    return FormulaSyntaxError(f"Erro de sintaxe perto de '{found}'", position, line, column)


class ModalParser:
    """Parser de fórmulas modais sobre a gramática textual do projeto."""

    def __init__(self):
        self.parser = Lark(MODAL_GRAMMAR, parser="lalr", maybe_placeholders=False)
        self.transformer = _ModalTransformer()

    def parse(self, text: str) -> ModalFormula:
        """
        Converte o texto numa fórmula.

        Args:
            text: Fórmula, p.ex. "[](p -> <>q)"

        Returns:
            A árvore sintática

        Raises:
            FormulaSyntaxError: se o texto não seguir a gramática
        """
        try:
            tree = self.parser.parse(text)
        except UnexpectedInput as e:
            raise syntax_error_from(e, text)
        try:
            return self.transformer.transform(tree)
        except VisitError as e:
            raise FormulaSyntaxError(f"Erro ao construir a fórmula: {e.orig_exc}")


_BINARY_SYMBOLS = {Iff: ("<->", 1), Imp: ("->", 2), Or: ("|", 3), And: ("&", 4)}
_UNARY_SYMBOLS = {Not: "!", Box: "[]", Dia: "<>"}
_UNARY_PRECEDENCE = 5
_ATOM_PRECEDENCE = 6


def _render(f: ModalFormula) -> Tuple[str, int]:
    if isinstance(f, Var):
        return f.name, _ATOM_PRECEDENCE
    if isinstance(f, Top):
        return "true", _ATOM_PRECEDENCE
    if isinstance(f, Bottom):
        return "false", _ATOM_PRECEDENCE
    symbol = _UNARY_SYMBOLS.get(type(f))
    if symbol is not None:
        text, precedence = _render(f.child)
        if precedence < _UNARY_PRECEDENCE:
            text = f"({text})"
        return f"{symbol}{text}", _UNARY_PRECEDENCE
    entry = _BINARY_SYMBOLS.get(type(f))
    if entry is None:
        raise TypeError(f"Nó de fórmula desconhecido: {f!r}")
    symbol, precedence = entry
    left, left_precedence = _render(f.left)
    right, right_precedence = _render(f.right)
    right_assoc = isinstance(f, Imp)
    if left_precedence < precedence or (right_assoc and left_precedence == precedence):
        left = f"({left})"
    if right_precedence < precedence or (not right_assoc and right_precedence == precedence):
        right = f"({right})"
    return f"{left} {symbol} {right}", precedence


def render_modal(f: ModalFormula) -> str:
    """
    Imprime a fórmula com o mínimo de parênteses; parse_modal(render_modal(f)) == f.
    """
    return _render(f)[0]


_default_parser = None


def parse_modal(text: str) -> ModalFormula:
    """Atalho para ModalParser().parse com uma instância compartilhada."""
    global _default_parser
    if _default_parser is None:
        _default_parser = ModalParser()
    return _default_parser.parse(text)

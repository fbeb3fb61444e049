# src/infrastructure/parsing/fo_parser.py
"""Formato textual de kernels universais de primeira ordem."""
import logging
from typing import Optional, Tuple

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput

from src.domain.value_objects.fo_kernel import (
    FO_FALSE, FO_TRUE, EdgeAtom, EqAtom, FOAnd, FOBody, FOFalse, FOImp,
    FOKernel, FONot, FOOr, FOTrue,
)
from src.infrastructure.parsing.modal_parser import syntax_error_from

logger = logging.getLogger(__name__)

FO_GRAMMAR = r"""
    ?start: kernel
          | imp

    kernel: "fo" INT imp "end"

    ?imp: disj
        | disj "->" imp         -> implication

    ?disj: conj
         | disj "|" conj        -> disjunction

    ?conj: unary
         | conj "&" unary       -> conjunction

    ?unary: ("!" | "~") unary   -> negation
          | atom

    ?atom: "true"               -> true
         | "false"              -> false
         | "R" "(" VAR "," VAR ")"   -> edge
         | "=" "(" VAR "," VAR ")"   -> equal
         | "(" imp ")"

    VAR: /x[0-9]+/
    COMMENT: /#[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


def _index(token) -> int:
    return int(str(token)[1:])


class _KernelTransformer(Transformer):
    def kernel(self, items):
        return int(items[0]), items[1]

    def implication(self, items):
        return FOImp(items[0], items[1])

    def disjunction(self, items):
        return FOOr(items[0], items[1])

    def conjunction(self, items):
        return FOAnd(items[0], items[1])

    def negation(self, items):
        return FONot(items[0])

    def true(self, items):
        return FO_TRUE

    def false(self, items):
        return FO_FALSE

    def edge(self, items):
        return EdgeAtom(_index(items[0]), _index(items[1]))

    def equal(self, items):
        return EqAtom(_index(items[0]), _index(items[1]))


class KernelParser:
    """Lê kernels no formato "fo <k> ... end" ou apenas o corpo."""

    def __init__(self):
        self.parser = Lark(FO_GRAMMAR, parser="lalr")
        self.transformer = _KernelTransformer()

    def parse(self, text: str, name: Optional[str] = None) -> FOKernel:
        """
        Converte o texto num kernel.

        Args:
            text: Kernel completo ou corpo avulso (k = maior índice usado)
            name: Nome opcional do kernel

        Returns:
            O kernel

        Raises:
            FormulaSyntaxError: erro de sintaxe
            KernelFormatError: índice fora de 1..k
        """
        try:
            tree = self.parser.parse(text)
        except UnexpectedInput as e:
            raise syntax_error_from(e, text)
        result = self.transformer.transform(tree)
        if isinstance(result, tuple):
            var_count, body = result
            return FOKernel.create(body, var_count, name)
        return FOKernel.create(result, None, name)


_PRECEDENCE = {FOImp: ("->", 2), FOOr: ("|", 3), FOAnd: ("&", 4)}


def _render(body: FOBody) -> Tuple[str, int]:
    if isinstance(body, EdgeAtom):
        return f"R(x{body.i},x{body.j})", 6
    if isinstance(body, EqAtom):
        return f"=(x{body.i},x{body.j})", 6
    if isinstance(body, FOTrue):
        return "true", 6
    if isinstance(body, FOFalse):
        return "false", 6
    if isinstance(body, FONot):
        text, precedence = _render(body.child)
        return ("!" + (f"({text})" if precedence < 5 else text)), 5
    symbol, precedence = _PRECEDENCE[type(body)]
    left, left_precedence = _render(body.left)
    right, right_precedence = _render(body.right)
    right_assoc = isinstance(body, FOImp)
    if left_precedence < precedence or (right_assoc and left_precedence == precedence):
        left = f"({left})"
    if right_precedence < precedence or (not right_assoc and right_precedence == precedence):
        right = f"({right})"
    return f"{left} {symbol} {right}", precedence


def render_body(body: FOBody) -> str:
    return _render(body)[0]


def render_kernel(kernel: FOKernel) -> str:
    """Imprime o kernel no formato "fo <k> / corpo / end"."""
    return f"fo {kernel.var_count}\n{render_body(kernel.body)}\nend\n"


_default_parser = None


def parse_kernel(text: str, name: Optional[str] = None) -> FOKernel:
    global _default_parser
    if _default_parser is None:
        _default_parser = KernelParser()
    return _default_parser.parse(text, name)

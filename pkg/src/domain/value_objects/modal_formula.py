# src/domain/value_objects/modal_formula.py
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, Iterator, Union

from src.domain.exceptions.domain_exceptions import ReservedNameError


# Prefixo reservado para variáveis introduzidas pela redução (bits d8, u)
RESERVED_PREFIX = "__"

# Constantes da gramática; não podem ser nomes de variáveis
KEYWORDS = frozenset({"true", "false"})


@dataclass(frozen=True)
class Var:
    """Variável proposicional."""

    name: str

    def __post_init__(self):
        if self.name in KEYWORDS:
            raise ReservedNameError({self.name})


@dataclass(frozen=True)
class Top:
    """Constante verdadeira."""


@dataclass(frozen=True)
class Bottom:
    """Constante falsa."""


@dataclass(frozen=True)
class Not:
    child: "ModalFormula"


@dataclass(frozen=True)
class And:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class Or:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class Imp:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class Iff:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class Box:
    child: "ModalFormula"


@dataclass(frozen=True)
class Dia:
    """Diamante; semanticamente a abreviação ¬□¬."""

    child: "ModalFormula"


ModalFormula = Union[Var, Top, Bottom, Not, And, Or, Imp, Iff, Box, Dia]

TRUE = Top()
FALSE = Bottom()

UNARY = (Not, Box, Dia)
BINARY = (And, Or, Imp, Iff)


def is_reserved(name: str) -> bool:
    """Verifica se o nome usa o prefixo reservado."""
    return name.startswith(RESERVED_PREFIX)


def children(f: ModalFormula) -> tuple:
    """Retorna os filhos diretos de um nó."""
    if isinstance(f, UNARY):
        return (f.child,)
    if isinstance(f, BINARY):
        return (f.left, f.right)
    return ()


def subformulas(f: ModalFormula) -> Iterator[ModalFormula]:
    """Percorre todas as ocorrências de subfórmulas em pré-ordem."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def modal_depth(f: ModalFormula) -> int:
    """
    Calcula o grau máximo de aninhamento de operadores modais.

    Args:
        f: Fórmula modal

    Returns:
        0 para átomos, 1 + profundidade do filho para □/◇, máximo para binários
    """
    if isinstance(f, (Box, Dia)):
        return 1 + modal_depth(f.child)
    if isinstance(f, Not):
        return modal_depth(f.child)
    if isinstance(f, BINARY):
        return max(modal_depth(f.left), modal_depth(f.right))
    return 0


def variables(f: ModalFormula) -> FrozenSet[str]:
    """Retorna o conjunto de variáveis que ocorrem na fórmula."""
    return frozenset(node.name for node in subformulas(f) if isinstance(node, Var))


def conjunction(items: Iterable[ModalFormula]) -> ModalFormula:
    """Conjunção aninhada à esquerda; a conjunção vazia é TRUE."""
    items = list(items)
    if not items:
        return TRUE
    return reduce(And, items)


def disjunction(items: Iterable[ModalFormula]) -> ModalFormula:
    """Disjunção aninhada à esquerda; a disjunção vazia é FALSE."""
    items = list(items)
    if not items:
        return FALSE
    return reduce(Or, items)

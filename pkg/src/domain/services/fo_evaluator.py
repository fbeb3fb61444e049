# src/domain/services/fo_evaluator.py
"""
Avaliação de kernels universais de primeira ordem sobre frames finitos.

O corpo é normalizado em cláusulas "antecedente → consequente". Os átomos de
aresta positivos do antecedente restringem os candidatos de cada variável
(sucessores, predecessores, mundos reflexivos) e cada atribuição parcial é
avaliada em lógica trivalente: subárvores já satisfeitas ou já violadas são
cortadas. Isso mantém φ_2-step tratável em toros de dezenas de mundos.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.domain.entities.frame import Frame
from src.domain.value_objects.fo_kernel import (
    EdgeAtom, EqAtom, FOAnd, FOBody, FOFalse, FOImp, FOKernel, FONot, FOOr,
    FOTrue, atoms,
)

logger = logging.getLogger(__name__)

Assignment = Tuple[int, ...]


@dataclass(frozen=True)
class Clause:
    """Cláusula universal: conjunção de antecedentes implica o consequente."""

    antecedents: Tuple[FOBody, ...]
    consequent: FOBody

    @property
    def body(self) -> FOBody:
        body = self.consequent
        for antecedent in reversed(self.antecedents):
            body = FOImp(antecedent, body)
        return body


def _conjuncts(body: FOBody) -> List[FOBody]:
    if isinstance(body, FOAnd):
        return _conjuncts(body.left) + _conjuncts(body.right)
    if isinstance(body, FOTrue):
        return []
    return [body]


def normalize_clauses(body: FOBody) -> List[Clause]:
    """
    Decompõe o corpo em cláusulas equivalentes à conjunção original.

    A ∧ B gera as cláusulas de A e de B; A → C gera as cláusulas de C com os
    conjunções de A acrescentadas ao antecedente.
    """
    if isinstance(body, FOAnd):
        return normalize_clauses(body.left) + normalize_clauses(body.right)
    if isinstance(body, FOTrue):
        return []
    if isinstance(body, FOImp):
        prefix = tuple(_conjuncts(body.left))
        return [
            Clause(prefix + clause.antecedents, clause.consequent)
            for clause in normalize_clauses(body.right)
        ]
    return [Clause((), body)]


def evaluate_body(frame: Frame, body: FOBody, assignment: Sequence[int]) -> bool:
    """
    Avalia o corpo sob uma atribuição completa (x_i -> assignment[i-1]).

    Args:
        frame: Frame de avaliação
        body: Corpo livre de quantificadores
        assignment: Mundos atribuídos às variáveis

    Returns:
        Valor de verdade do corpo
    """
    value = _eval3(frame.edges, body, list(assignment))
    return bool(value)


def _eval3(edges, body: FOBody, values: Sequence[Optional[int]]) -> Optional[bool]:
    """Kleene forte: None quando alguma variável necessária está livre."""
    if isinstance(body, EdgeAtom):
        a, b = values[body.i - 1], values[body.j - 1]
        if a is None or b is None:
            return None
        return (a, b) in edges
    if isinstance(body, EqAtom):
        if body.i == body.j:
            return True
        a, b = values[body.i - 1], values[body.j - 1]
        if a is None or b is None:
            return None
        return a == b
    if isinstance(body, FOTrue):
        return True
    if isinstance(body, FOFalse):
        return False
    if isinstance(body, FONot):
        value = _eval3(edges, body.child, values)
        return None if value is None else not value
    if isinstance(body, FOAnd):
        left = _eval3(edges, body.left, values)
        if left is False:
            return False
        right = _eval3(edges, body.right, values)
        if right is False:
            return False
        return True if left and right else None
    if isinstance(body, FOOr):
        left = _eval3(edges, body.left, values)
        if left is True:
            return True
        right = _eval3(edges, body.right, values)
        if right is True:
            return True
        return False if left is False and right is False else None
    if isinstance(body, FOImp):
        left = _eval3(edges, body.left, values)
        if left is False:
            return True
        right = _eval3(edges, body.right, values)
        if right is True:
            return True
        return False if left is True and right is False else None
    raise TypeError(f"Nó de kernel desconhecido: {body!r}")


@dataclass(frozen=True)
class _CompiledClause:
    clause: Clause
    body: FOBody
    order: Tuple[int, ...]
    # por posição na ordem: restrições (tipo, índice da variável já atribuída)
    guides: Tuple[Tuple[Tuple[str, int], ...], ...]


def _variable_order(clause: Clause) -> Tuple[int, ...]:
    """Ordem gulosa: começa pela variável mais conectada e segue pelas arestas."""
    used = sorted({index for atom in atoms(clause.body) for index in (atom.i, atom.j)})
    if not used:
        return ()
    links: Dict[int, set] = {v: set() for v in used}
    for atom in atoms(clause.body):
        if atom.i != atom.j:
            links[atom.i].add(atom.j)
            links[atom.j].add(atom.i)
    guided: Dict[int, set] = {v: set() for v in used}
    for antecedent in clause.antecedents:
        if isinstance(antecedent, EdgeAtom) and antecedent.i != antecedent.j:
            guided[antecedent.i].add(antecedent.j)
            guided[antecedent.j].add(antecedent.i)

    order: List[int] = []
    remaining = set(used)
    while remaining:
        placed = set(order)

        def rank(v: int) -> tuple:
            return (
                -len(guided[v] & placed),
                -len(links[v] & placed),
                -len(guided[v]),
                -len(links[v]),
                v,
            )

        chosen = min(remaining, key=rank)
        order.append(chosen)
        remaining.discard(chosen)
    return tuple(order)


def _compile(clause: Clause) -> _CompiledClause:
    order = _variable_order(clause)
    position = {v: p for p, v in enumerate(order)}
    guides = []
    for p, v in enumerate(order):
        constraints = []
        for antecedent in clause.antecedents:
            if not isinstance(antecedent, EdgeAtom):
                continue
            i, j = antecedent.i, antecedent.j
            if i == v and j == v:
                constraints.append(("loop", v))
            elif j == v and position[i] < p:
                constraints.append(("succ", i))
            elif i == v and position[j] < p:
                constraints.append(("pred", j))
        guides.append(tuple(constraints))
    return _CompiledClause(clause, clause.body, order, tuple(guides))


@lru_cache(maxsize=256)
def compile_kernel(kernel: FOKernel) -> Tuple[_CompiledClause, ...]:
    """Normaliza e compila as cláusulas de um kernel (com cache)."""
    compiled = tuple(_compile(clause) for clause in normalize_clauses(kernel.body))
    logger.debug(f"Kernel {kernel.name or '<anônimo>'}: {len(compiled)} cláusula(s)")
    return compiled


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _candidates(frame: Frame, guides, values: List[Optional[int]], reflexive_mask: int) -> int:
    mask = frame.full_mask
    for kind, other in guides:
        if kind == "loop":
            mask &= reflexive_mask
        elif kind == "succ":
            mask &= frame.successor_masks[values[other - 1]]
        else:
            mask &= frame.predecessor_masks[values[other - 1]]
        if not mask:
            break
    return mask


def _clause_violation(frame: Frame, compiled: _CompiledClause, var_count: int,
                      reflexive_mask: int) -> Optional[Assignment]:
    edges = frame.edges
    values: List[Optional[int]] = [None] * var_count
    order = compiled.order

    def extend(depth: int) -> bool:
        verdict = _eval3(edges, compiled.body, values)
        if verdict is True:
            return False
        if verdict is False:
            return True
        if depth == len(order):
            # inalcançável: atribuição completa sempre tem valor definido
            return False
        variable = order[depth]
        for world in _bits(_candidates(frame, compiled.guides[depth], values, reflexive_mask)):
            values[variable - 1] = world
            if extend(depth + 1):
                return True
        values[variable - 1] = None
        return False

    if not extend(0):
        return None
    return tuple(0 if v is None else v for v in values)


def find_violation(frame: Frame, kernel: FOKernel) -> Optional[Assignment]:
    """
    Procura uma atribuição que falsifica o corpo do kernel.

    Args:
        frame: Frame de avaliação
        kernel: Kernel universal

    Returns:
        Tupla (x1, ..., xk) de mundos falsificando o corpo, ou None se o frame
        satisfaz o kernel. Variáveis que não afetam a cláusula violada
        recebem o mundo 0.
    """
    if frame.world_count == 0:
        return None
    reflexive_mask = sum(1 << w for w in frame.reflexive_worlds())
    for compiled in compile_kernel(kernel):
        violation = _clause_violation(frame, compiled, kernel.var_count, reflexive_mask)
        if violation is not None:
            return violation
    return None


def eval_universal(frame: Frame, kernel: FOKernel) -> bool:
    """Verifica se o frame satisfaz o kernel (quantificação universal implícita)."""
    return find_violation(frame, kernel) is None


def eval_universal_naive(frame: Frame, kernel: FOKernel) -> bool:
    """Enumeração direta das n^k atribuições; referência para testes pequenos."""
    if frame.world_count == 0:
        return True
    return all(
        evaluate_body(frame, kernel.body, assignment)
        for assignment in product(frame.worlds, repeat=kernel.var_count)
    )

# src/domain/services/abstraction.py
"""
Abstração de modelos pela relação ~ (arestas simétricas).

Sob reflexividade e φ~eq, ~ é uma equivalência e mundos equivalentes têm as
mesmas arestas de entrada e de saída; o quociente colapsa cada classe num
único mundo.
"""
import logging
from typing import FrozenSet, Iterable, NamedTuple, Optional, Tuple

import numpy as np

from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import PreconditionViolation
from src.domain.services.builtin_kernels import builtin
from src.domain.services.fo_evaluator import find_violation
from src.domain.value_objects.partition import Partition

logger = logging.getLogger(__name__)


class AbstractionStructure(NamedTuple):
    """Propriedades estruturais garantidas para quocientes de frames φ_grid."""

    reflexive: bool
    max_two_succ: bool
    max_three_twostep: bool

    def all_hold(self) -> bool:
        return self.reflexive and self.max_two_succ and self.max_three_twostep


def _frame_partition(frame: Frame) -> Partition:
    irreflexive = [w for w in frame.worlds if not frame.has_edge(w, w)]
    if irreflexive:
        raise PreconditionViolation("reflexive", "O modelo não é reflexivo", irreflexive[:1])
    violation = find_violation(frame, builtin("phi_eq"))
    if violation is not None:
        raise PreconditionViolation("phi_eq", "O frame não satisfaz φ~eq", violation)

    adjacency = frame.adjacency_matrix()
    symmetric = adjacency & adjacency.T
    # fecho transitivo não deve acrescentar nada se ~ já é equivalência
    for w in frame.worlds:
        for v in np.flatnonzero(symmetric[w]):
            for z in np.flatnonzero(symmetric[v]):
                if not symmetric[w, z]:
                    raise PreconditionViolation(
                        "equivalence", "A relação ~ não é transitiva", (w, int(v), int(z))
                    )

    classes = []
    assigned = set()
    for w in frame.worlds:
        if w in assigned:
            continue
        members = frozenset(int(v) for v in np.flatnonzero(symmetric[w]))
        classes.append(members)
        assigned |= members
    return Partition.from_classes(classes)


def compute_partition(m: Model) -> Partition:
    """
    Calcula as classes de ~-equivalência do modelo.

    Args:
        m: Modelo reflexivo que satisfaz φ~eq

    Returns:
        Partição com classes indexadas pelo menor membro

    Raises:
        PreconditionViolation: se o modelo não for reflexivo, violar φ~eq ou
            se ~ não for uma equivalência; os mundos testemunhas são informados
    """
    return _frame_partition(m.frame)


def _quotient_edges(frame: Frame, partition: Partition) -> set:
    class_of = partition.class_of
    representatives = partition.representatives
    return {
        (class_of[i], class_of[j])
        for i, j in frame.edges
        if i in representatives and j in representatives
    }


def quotient_frame(frame: Frame) -> Tuple[Frame, Partition]:
    """Frame abstraído F/~ e a partição usada."""
    partition = _frame_partition(frame)
    return Frame.create(len(partition), _quotient_edges(frame, partition)), partition


def quotient(m: Model, p_set: Iterable[str], partition: Optional[Partition] = None) -> Model:
    """
    Abstração M/~ restrita às variáveis de P.

    Uma variável p ∈ P é verdadeira numa classe sse é verdadeira em todos os
    seus membros; variáveis fora de P ficam falsas.

    Args:
        m: Modelo reflexivo que satisfaz φ~eq
        p_set: Conjunto P de variáveis preservadas
        partition: Partição já calculada (opcional)

    Returns:
        O modelo quociente
    """
    if partition is None:
        partition = compute_partition(m)
    p_set = frozenset(p_set)
    edges = _quotient_edges(m.frame, partition)
    valuation = {
        name: frozenset(
            index for index, members in enumerate(partition.classes)
            if members <= m.truth_set(name)
        )
        for name in p_set
    }
    logger.debug(f"Quociente: {m.world_count} mundos -> {len(partition)} classes")
    return Model.create(len(partition), edges, valuation)


def respects(m: Model, p_set: Iterable[str]) -> bool:
    """Verifica se mundos ~-relacionados concordam em todas as variáveis de P."""
    return not respect_violations(m, p_set)


def respect_violations(m: Model, p_set: Iterable[str]) -> Tuple[Tuple[int, int, str], ...]:
    """Pares (w, w', p) com w ~ w' e p com valores diferentes."""
    p_set = sorted(set(p_set))
    found = []
    for i, j in sorted(m.frame.edges):
        if i < j and m.frame.has_edge(j, i):
            for name in p_set:
                if m.true_at(name, i) != m.true_at(name, j):
                    found.append((i, j, name))
    return tuple(found)


def check_abstraction_structure(frame: Frame) -> AbstractionStructure:
    """
    Verifica as três propriedades estruturais dos quocientes de frames φ_grid.

    Args:
        frame: Frame (tipicamente um quociente); nenhuma pré-condição é checada

    Returns:
        (reflexivo, no máximo dois sucessores distintos de w, no máximo três
        mundos a dois passos sem usar laços)
    """
    adjacency = frame.adjacency_matrix()
    n = frame.world_count
    if n == 0:
        return AbstractionStructure(True, True, True)
    reflexive = bool(np.all(np.diagonal(adjacency)))
    proper = adjacency & ~np.eye(n, dtype=bool)
    max_two_succ = bool(np.all(proper.sum(axis=1) <= 2))
    max_three = True
    for w in range(n):
        # intermediários y ≠ w, passo y→z com z ≠ y
        middle = proper[w]
        reached = proper[middle].any(axis=0) if middle.any() else np.zeros(n, dtype=bool)
        if int(reached.sum()) > 3:
            max_three = False
            break
    return AbstractionStructure(reflexive, max_two_succ, max_three)


def two_step_targets(frame: Frame, w: int) -> FrozenSet[int]:
    """Mundos alcançáveis de w em dois passos sem usar laços."""
    frame.check_world(w)
    return frozenset(
        z for y in frame.successors(w) if y != w
        for z in frame.successors(y) if z != y
    )

# src/domain/entities/frame.py
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from src.domain.exceptions.domain_exceptions import WorldOutOfRangeError


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Frame:
    """Entidade que representa um frame finito: grafo dirigido de mundos 0..n-1."""

    world_count: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        """Valida as extremidades das arestas."""
        if self.world_count < 0:
            raise ValueError("O número de mundos não pode ser negativo")
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))
        for i, j in self.edges:
            if not (0 <= i < self.world_count):
                raise WorldOutOfRangeError(i, self.world_count)
            if not (0 <= j < self.world_count):
                raise WorldOutOfRangeError(j, self.world_count)

    @classmethod
    def create(cls, world_count: int, edges: Iterable[Edge] = ()) -> "Frame":
        """
        Cria uma nova instância de Frame.

        Args:
            world_count: Número de mundos
            edges: Pares ordenados (i, j) com i, j < world_count

        Returns:
            Uma nova instância de Frame
        """
        return cls(world_count=world_count, edges=frozenset(edges))

    @property
    def worlds(self) -> range:
        return range(self.world_count)

    @cached_property
    def _successors(self) -> Tuple[Tuple[int, ...], ...]:
        table: List[List[int]] = [[] for _ in self.worlds]
        for i, j in self.edges:
            table[i].append(j)
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def _predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        table: List[List[int]] = [[] for _ in self.worlds]
        for i, j in self.edges:
            table[j].append(i)
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def successor_masks(self) -> Tuple[int, ...]:
        """Máscaras de bits dos sucessores de cada mundo."""
        return tuple(sum(1 << j for j in row) for row in self._successors)

    @cached_property
    def predecessor_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << i for i in row) for row in self._predecessors)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.world_count) - 1

    def check_world(self, w: int) -> None:
        """Lança WorldOutOfRangeError se o mundo não existir."""
        if not (0 <= w < self.world_count):
            raise WorldOutOfRangeError(w, self.world_count)

    def successors(self, w: int) -> Tuple[int, ...]:
        self.check_world(w)
        return self._successors[w]

    def predecessors(self, w: int) -> Tuple[int, ...]:
        self.check_world(w)
        return self._predecessors[w]

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def sym_related(self, i: int, j: int) -> bool:
        """Verifica se i ~ j, ou seja, se existem as arestas (i, j) e (j, i)."""
        self.check_world(i)
        self.check_world(j)
        return (i, j) in self.edges and (j, i) in self.edges

    def reflexive_worlds(self) -> Tuple[int, ...]:
        return tuple(w for w in self.worlds if (w, w) in self.edges)

    def is_reflexive(self) -> bool:
        """Verifica se todos os mundos possuem laço."""
        return all((w, w) in self.edges for w in self.worlds)

    def reflexive_closure(self) -> "Frame":
        """Retorna o frame com todos os laços adicionados."""
        return Frame.create(self.world_count, self.edges | {(w, w) for w in self.worlds})

    def drop_reflexive_edges(self) -> "Frame":
        """Retorna o frame sem exatamente os pares (i, i)."""
        return Frame.create(self.world_count, {(i, j) for i, j in self.edges if i != j})

    def induced_subframe(self, worlds: Sequence[int]) -> "Frame":
        """
        Retorna o subframe induzido, reindexado na ordem de `worlds`.

        Args:
            worlds: Mundos mantidos (sem repetição)

        Returns:
            Frame com os mundos 0..len(worlds)-1
        """
        index = {w: position for position, w in enumerate(worlds)}
        if len(index) != len(worlds):
            raise ValueError("Mundos repetidos no subframe induzido")
        for w in worlds:
            self.check_world(w)
        return Frame.create(
            len(worlds),
            {(index[i], index[j]) for i, j in self.edges if i in index and j in index},
        )

    def adjacency_matrix(self) -> np.ndarray:
        """Matriz de adjacência booleana (linha = origem)."""
        matrix = np.zeros((self.world_count, self.world_count), dtype=bool)
        for i, j in self.edges:
            matrix[i, j] = True
        return matrix

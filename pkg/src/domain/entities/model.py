# src/domain/entities/model.py
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from src.domain.entities.frame import Edge, Frame


@dataclass(frozen=True, eq=True)
class Model:
    """Entidade que representa um modelo de Kripke (frame + valoração)."""

    frame: Frame
    valuation: Mapping[str, FrozenSet[int]] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        """Normaliza a valoração: conjuntos congelados, variáveis vazias omitidas."""
        normalized: Dict[str, FrozenSet[int]] = {}
        for name, worlds in self.valuation.items():
            worlds = frozenset(int(w) for w in worlds)
            for w in worlds:
                self.frame.check_world(w)
            if worlds:
                normalized[name] = worlds
        object.__setattr__(self, "valuation", dict(sorted(normalized.items())))

    @classmethod
    def create(cls,
               world_count: int,
               edges: Iterable[Edge] = (),
               valuation: Optional[Mapping[str, Iterable[int]]] = None) -> "Model":
        """
        Cria uma nova instância de Model.

        Args:
            world_count: Número de mundos
            edges: Arestas do frame
            valuation: Mapa variável -> mundos onde ela é verdadeira

        Returns:
            Uma nova instância de Model
        """
        valuation = {name: frozenset(worlds) for name, worlds in (valuation or {}).items()}
        return cls(frame=Frame.create(world_count, edges), valuation=valuation)

    @property
    def world_count(self) -> int:
        return self.frame.world_count

    @property
    def worlds(self) -> range:
        return self.frame.worlds

    def truth_set(self, name: str) -> FrozenSet[int]:
        """Mundos onde a variável é verdadeira (falsa em todo lugar se ausente)."""
        return self.valuation.get(name, frozenset())

    def truth_mask(self, name: str) -> int:
        return sum(1 << w for w in self.truth_set(name))

    def true_at(self, name: str, w: int) -> bool:
        return w in self.truth_set(name)

    def sym_related(self, w: int, w2: int) -> bool:
        return self.frame.sym_related(w, w2)

    def is_reflexive(self) -> bool:
        return self.frame.is_reflexive()

    def with_frame(self, frame: Frame) -> "Model":
        """Mesma valoração sobre outro frame com o mesmo número de mundos."""
        return Model(frame=frame, valuation=self.valuation)

    def with_valuation(self, valuation: Mapping[str, Iterable[int]]) -> "Model":
        return Model(frame=self.frame, valuation={k: frozenset(v) for k, v in valuation.items()})

    def restrict_variables(self, names: Iterable[str]) -> "Model":
        """Mantém apenas as variáveis informadas; as demais ficam falsas."""
        names = set(names)
        return self.with_valuation({k: v for k, v in self.valuation.items() if k in names})

    def induced_submodel(self, worlds: Sequence[int]) -> Tuple["Model", Dict[int, int]]:
        """
        Submodelo induzido, reindexado na ordem de `worlds`.

        Returns:
            O submodelo e o mapa mundo antigo -> mundo novo
        """
        mapping = {w: position for position, w in enumerate(worlds)}
        frame = self.frame.induced_subframe(worlds)
        valuation = {
            name: frozenset(mapping[w] for w in truth if w in mapping)
            for name, truth in self.valuation.items()
        }
        return Model(frame=frame, valuation=valuation), mapping

    def inflate_world(self, w: int) -> "Model":
        """
        Acrescenta uma cópia w' do mundo w (mesmas arestas e valoração).

        Se w for reflexivo, w e w' formam uma ~-clique; fórmulas modais e
        kernels universais são preservados.
        """
        self.frame.check_world(w)
        copy = self.world_count
        edges = set(self.frame.edges)
        for i, j in self.frame.edges:
            if i == w:
                edges.add((copy, j))
            if j == w:
                edges.add((i, copy))
        if (w, w) in self.frame.edges:
            edges.update({(copy, copy), (w, copy), (copy, w)})
        valuation = {
            name: truth | {copy} if w in truth else truth
            for name, truth in self.valuation.items()
        }
        return Model.create(copy + 1, edges, valuation)

    def structurally_equal(self, other: "Model", names: Optional[Iterable[str]] = None) -> bool:
        """Igualdade estrutural, opcionalmente restrita a um conjunto de variáveis."""
        if self.frame != other.frame:
            return False
        names = set(names) if names is not None else set(self.valuation) | set(other.valuation)
        return all(self.truth_set(n) == other.truth_set(n) for n in names)


def is_isomorphic(first: Model, second: Model, names: Optional[Iterable[str]] = None) -> bool:
    """
    Teste de isomorfismo por força bruta (apenas modelos pequenos).

    Args:
        first: Primeiro modelo
        second: Segundo modelo
        names: Variáveis comparadas (padrão: todas)

    Returns:
        True se existe uma bijeção que preserva arestas e valoração
    """
    if first.world_count != second.world_count or len(first.frame.edges) != len(second.frame.edges):
        return False
    names = sorted(set(names) if names is not None else set(first.valuation) | set(second.valuation))
    signature_a = [tuple(first.true_at(n, w) for n in names) for w in first.worlds]
    signature_b = [tuple(second.true_at(n, w) for n in names) for w in second.worlds]
    if sorted(signature_a) != sorted(signature_b):
        return False
    for perm in permutations(second.worlds):
        if any(signature_a[w] != signature_b[perm[w]] for w in first.worlds):
            continue
        if all((perm[i], perm[j]) in second.frame.edges for i, j in first.frame.edges):
            return True
    return False

# src/domain/value_objects/partition.py
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple


@dataclass(frozen=True)
class Partition:
    """
    Classes de ~-equivalência dos mundos de um modelo.

    As classes são numeradas pelo menor mundo membro, que também é o
    representante canônico da classe.
    """

    classes: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        """Valida disjunção, não vacuidade e cobertura."""
        seen = set()
        for members in self.classes:
            if not members:
                raise ValueError("Classe vazia na partição")
            if seen & members:
                raise ValueError("Classes da partição não são disjuntas")
            seen |= members
        if seen != set(range(len(seen))):
            raise ValueError("As classes não cobrem 0..n-1")

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        """Cria a partição ordenando as classes pelo menor membro."""
        frozen = [frozenset(c) for c in classes]
        return cls(classes=tuple(sorted(frozen, key=min)))

    @classmethod
    def discrete(cls, world_count: int) -> "Partition":
        return cls(classes=tuple(frozenset({w}) for w in range(world_count)))

    @property
    def class_of(self) -> Dict[int, int]:
        """Mapa mundo -> índice da classe."""
        return {w: index for index, members in enumerate(self.classes) for w in members}

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(min(members) for members in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def is_discrete(self) -> bool:
        return all(len(members) == 1 for members in self.classes)

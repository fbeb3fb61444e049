# src/domain/value_objects/search_outcome.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from src.domain.entities.model import Model


class SearchStatus(str, Enum):
    """Resultado da busca limitada."""

    FOUND = "found"
    EXHAUSTED = "exhausted"
    ABORTED = "aborted"


class SearchMode(str, Enum):
    """Satisfação local (em algum mundo) ou global (em todos)."""

    LOCAL = "local"
    GLOBAL = "global"


@dataclass
class SearchStats:
    frames_examined: int = 0
    frames_accepted: int = 0
    models_examined: int = 0
    elapsed_seconds: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.frames_examined += other.frames_examined
        self.frames_accepted += other.frames_accepted
        self.models_examined += other.models_examined


@dataclass
class SearchOutcome:
    """
    Resultado de find_model.

    Com status FOUND, `model` satisfaz o kernel e a fórmula em `world`
    (modo local) ou em todos os mundos (modo global, `world` é None).
    """

    status: SearchStatus
    model: Optional[Model] = None
    world: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats)
    max_worlds: int = 0
    reason: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

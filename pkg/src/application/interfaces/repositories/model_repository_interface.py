# src/application/interfaces/repositories/model_repository_interface.py
from abc import ABC, abstractmethod
from typing import Dict, Optional, Sequence, Set, Tuple

from src.domain.entities.model import Model


class ModelRepositoryInterface(ABC):
    """Interface para leitura e escrita de modelos e fórmulas."""

    @abstractmethod
    def load_model(self, location: str) -> Model:
        """
        Lê um modelo.

        Args:
            location: Caminho do arquivo

        Returns:
            O modelo lido
        """
        pass

    @abstractmethod
    def save_model(self, model: Model, location: str,
                   class_map: Optional[Sequence[Sequence[int]]] = None) -> None:
        """
        Grava um modelo, opcionalmente com o mapa de classes do quociente.

        Args:
            model: Modelo a gravar
            location: Caminho do arquivo
            class_map: Classes de origem de cada mundo
        """
        pass

    @abstractmethod
    def load_torus_valuation(self, location: str) -> Dict[str, Set[Tuple[int, int]]]:
        """
        Lê uma valoração de toro (células (i, j) por variável).

        Args:
            location: Caminho do arquivo

        Returns:
            Mapa variável -> células
        """
        pass

    @abstractmethod
    def load_text(self, location: str) -> str:
        """Lê o conteúdo bruto (fórmulas e kernels em arquivo)."""
        pass

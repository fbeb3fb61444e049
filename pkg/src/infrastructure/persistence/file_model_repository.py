# src/infrastructure/persistence/file_model_repository.py
import logging
from pathlib import Path
from typing import Dict, Optional, Sequence, Set, Tuple

from src.application.interfaces.repositories.model_repository_interface import ModelRepositoryInterface
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import ModelFormatError
from src.infrastructure.persistence.model_file_format import (
    parse_model, parse_torus_valuation, render_model,
)

logger = logging.getLogger(__name__)


class FileModelRepository(ModelRepositoryInterface):
    """Implementação do repositório sobre o sistema de arquivos."""

    def __init__(self, base_dir: Optional[str] = None):
        """
        Inicializa o repositório.

        Args:
            base_dir: Diretório base para caminhos relativos (padrão: diretório atual)
        """
        self.base_dir = Path(base_dir) if base_dir else None

    def _path(self, location: str) -> Path:
        path = Path(location)
        if self.base_dir is not None and not path.is_absolute():
            path = self.base_dir / path
        return path

    def load_text(self, location: str) -> str:
        path = self._path(location)
        try:
            return path.read_text(encoding="utf-8")
        except OSError as e:
            raise ModelFormatError(f"Não foi possível ler '{path}': {e.strerror}")

    def load_model(self, location: str) -> Model:
        model = parse_model(self.load_text(location))
        logger.debug(f"Modelo lido de {location}: {model.world_count} mundos")
        return model

    def save_model(self, model: Model, location: str,
                   class_map: Optional[Sequence[Sequence[int]]] = None) -> None:
        path = self._path(location)
        path.write_text(render_model(model, class_map=class_map), encoding="utf-8")
        logger.info(f"Modelo gravado em {path}")

    def load_torus_valuation(self, location: str) -> Dict[str, Set[Tuple[int, int]]]:
        return parse_torus_valuation(self.load_text(location))

# src/application/usecases/search_usecases.py
from typing import Optional

from config import settings
from src.application.interfaces.services.model_finder_interface import ModelFinderInterface
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula
from src.domain.value_objects.search_outcome import SearchMode, SearchOutcome


class SearchUseCases:
    """Casos de uso da busca limitada de modelos."""

    def __init__(self, model_finder: ModelFinderInterface):
        """
        Args:
            model_finder: Implementação do buscador
        """
        self.model_finder = model_finder

    def find(self, kernel: FOKernel, formula: ModalFormula,
             max_worlds: Optional[int] = None, mode: SearchMode = SearchMode.LOCAL) -> SearchOutcome:
        """
        Procura um modelo de até max_worlds mundos.

        Returns:
            Resultado com status found, exhausted ou aborted
        """
        if max_worlds is None:
            max_worlds = settings.SEARCH_DEFAULT_MAX_WORLDS
        return self.model_finder.find_model(kernel, formula, max_worlds, SearchMode(mode))

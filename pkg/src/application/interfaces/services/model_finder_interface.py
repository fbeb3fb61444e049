# src/application/interfaces/services/model_finder_interface.py
from abc import ABC, abstractmethod

from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula
from src.domain.value_objects.search_outcome import SearchMode, SearchOutcome


class ModelFinderInterface(ABC):
    """Interface para busca limitada de modelos."""

    @abstractmethod
    def find_model(self, kernel: FOKernel, formula: ModalFormula,
                   max_worlds: int, mode: SearchMode = SearchMode.LOCAL) -> SearchOutcome:
        """
        Procura um modelo baseado num frame do kernel que satisfaz a fórmula.

        Args:
            kernel: Kernel universal que define a classe de frames
            formula: Fórmula modal
            max_worlds: Maior número de mundos examinado (≥ 1)
            mode: Satisfação local (algum mundo) ou global (todos)

        Returns:
            O resultado da busca
        """
        pass

# src/application/interfaces/services/text_codec_interface.py
from abc import ABC, abstractmethod
from typing import Optional

from src.domain.entities.model import Model
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula


class TextCodecInterface(ABC):
    """Interface para leitura e impressão dos formatos textuais."""

    @abstractmethod
    def parse_formula(self, text: str) -> ModalFormula:
        """
        Converte texto numa fórmula modal.

        Raises:
            FormulaSyntaxError: se o texto não seguir a gramática
        """
        pass

    @abstractmethod
    def render_formula(self, formula: ModalFormula) -> str:
        """Imprime a fórmula de modo que parse_formula a reconstrua."""
        pass

    @abstractmethod
    def parse_kernel(self, text: str, name: Optional[str] = None) -> FOKernel:
        pass

    @abstractmethod
    def render_kernel(self, kernel: FOKernel) -> str:
        pass

    @abstractmethod
    def parse_model(self, text: str) -> Model:
        """
        Lê um modelo no formato de arquivo.

        Raises:
            ModelFormatError: com a linha problemática
        """
        pass

    @abstractmethod
    def render_model(self, model: Model) -> str:
        pass

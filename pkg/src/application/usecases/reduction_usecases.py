# src/application/usecases/reduction_usecases.py
import logging
from typing import Optional

from config import settings
from src.domain.services.builtin_kernels import builtin
from src.domain.services.grid_encoding import localize, reduce_f
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula, modal_depth

logger = logging.getLogger(__name__)


class ReductionUseCases:
    """Casos de uso da redução de Global-Grid-Sat para satisfação local."""

    def __init__(self, literal_scoping: Optional[bool] = None):
        """
        Args:
            literal_scoping: Leitura literal de ψ_resp (padrão: configuração)
        """
        self.literal_scoping = (
            settings.PSI_RESP_LITERAL_SCOPING if literal_scoping is None else literal_scoping
        )

    def reduce(self, psi: ModalFormula, local: bool = False) -> ModalFormula:
        """
        Aplica f e, opcionalmente, a localização u ∧ □¬u ∧ □·.

        Args:
            psi: Fórmula de entrada
            local: Aplica localize ao resultado

        Returns:
            A fórmula reduzida
        """
        reduced = reduce_f(psi, literal_scoping=self.literal_scoping)
        if local:
            reduced = localize(reduced)
        logger.info(f"Redução: profundidade modal {modal_depth(psi)} -> {modal_depth(reduced)}")
        return reduced

    def target_kernel(self) -> FOKernel:
        """Kernel φ_final da classe de frames alvo."""
        return builtin("phi_final")

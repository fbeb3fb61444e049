# src/application/usecases/model_usecases.py
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.application.interfaces.repositories.model_repository_interface import ModelRepositoryInterface
from src.application.interfaces.services.text_codec_interface import TextCodecInterface
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import UnknownKernelError
from src.domain.services.abstraction import compute_partition, quotient
from src.domain.services.builtin_kernels import builtin
from src.domain.services.fo_evaluator import find_violation
from src.domain.services.grid_encoding import make_torus_hat_model, make_torus_model
from src.domain.services.model_checker import check, satisfying_worlds
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula
from src.domain.value_objects.partition import Partition

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"


class ModelUseCases:
    """Casos de uso de leitura de entradas, verificação de modelos e quocientes."""

    def __init__(self, model_repository: ModelRepositoryInterface, codec: TextCodecInterface):
        """
        Inicializa os casos de uso de modelos.

        Args:
            model_repository: Implementação do repositório de modelos
            codec: Leitura dos formatos textuais
        """
        self.model_repository = model_repository
        self.codec = codec

    def read_formula(self, argument: str) -> ModalFormula:
        """
        Lê uma fórmula do texto ou de um arquivo ("@caminho").

        Args:
            argument: Texto da fórmula ou @arquivo

        Returns:
            A fórmula
        """
        if argument.startswith("@"):
            argument = self.model_repository.load_text(argument[1:])
        return self.codec.parse_formula(argument)

    def read_kernel(self, argument: str) -> FOKernel:
        """
        Lê um kernel: "builtin:NOME", "@arquivo" ou corpo em linha.

        Args:
            argument: Especificação do kernel

        Returns:
            O kernel
        """
        if argument.startswith(BUILTIN_PREFIX):
            return builtin(argument[len(BUILTIN_PREFIX):])
        if argument.startswith("@"):
            return self.codec.parse_kernel(self.model_repository.load_text(argument[1:]))
        if argument.startswith("phi_"):
            raise UnknownKernelError(f"Use '{BUILTIN_PREFIX}{argument}' para kernels embutidos")
        return self.codec.parse_kernel(argument)

    def load_model(self, location: str) -> Model:
        return self.model_repository.load_model(location)

    def check_formula(self, model: Model, formula: ModalFormula,
                      world: Optional[int] = None) -> Tuple[bool, List[int]]:
        """
        Verifica a fórmula num mundo ou globalmente.

        Args:
            model: Modelo
            formula: Fórmula modal
            world: Mundo de avaliação; None para satisfação global

        Returns:
            (resultado, mundos onde a fórmula falha)
        """
        if world is not None:
            holds = check(model, world, formula)
            return holds, [] if holds else [world]
        holding = satisfying_worlds(model, formula)
        failing = [w for w in model.worlds if w not in holding]
        return not failing, failing

    def frame_check(self, model: Model, kernel: FOKernel) -> Optional[Tuple[int, ...]]:
        """Retorna uma atribuição violadora do kernel ou None."""
        violation = find_violation(model.frame, kernel)
        if violation is not None:
            logger.info(f"Kernel {kernel.name or ''} violado por {violation}")
        return violation

    def quotient_model(self, model: Model, p_set: Iterable[str]) -> Tuple[Model, Partition]:
        """Quociente M/~ e a partição que o gerou."""
        partition = compute_partition(model)
        return quotient(model, p_set, partition), partition

    def save_model(self, model: Model, location: str,
                   class_map: Optional[Sequence[Sequence[int]]] = None) -> None:
        self.model_repository.save_model(model, location, class_map)

    def make_torus(self, width: int, height: int, valuation_location: Optional[str] = None,
                   hat: bool = True) -> Model:
        """
        Constrói o toro (com fecho reflexivo e d8 quando hat=True).

        Args:
            width: Largura
            height: Altura
            valuation_location: Arquivo "torus-val" opcional
            hat: Constrói o modelo hat-M em vez do toro simples
        """
        base: Dict[str, Set[Tuple[int, int]]] = {}
        if valuation_location:
            base = self.model_repository.load_torus_valuation(valuation_location)
        if hat:
            return make_torus_hat_model(width, height, base)
        return make_torus_model(width, height, base)

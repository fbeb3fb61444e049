# src/domain/exceptions/domain_exceptions.py
from typing import Iterable, Optional, Tuple


class DomainException(Exception):
    """Exceção base para erros de domínio."""
    pass


class FormulaSyntaxError(DomainException):
    """Exceção lançada quando o texto de uma fórmula não segue a gramática."""

    def __init__(self, message: str, position: int = 0, line: int = 1, column: int = 1):
        super().__init__(f"{message} (linha {line}, coluna {column})")
        self.position = position
        self.line = line
        self.column = column


class KernelFormatError(DomainException):
    """Exceção lançada quando um kernel de primeira ordem é malformado."""
    pass


class ModelFormatError(DomainException):
    """Exceção lançada quando um arquivo de modelo é inválido."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"linha {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class WorldOutOfRangeError(DomainException):
    """Exceção lançada quando um mundo não existe no frame."""

    def __init__(self, world: int, world_count: int):
        super().__init__(f"Mundo {world} fora do intervalo 0..{world_count - 1}")
        self.world = world
        self.world_count = world_count


class PreconditionViolation(DomainException):
    """Exceção lançada quando uma pré-condição de uma construção falha."""

    def __init__(self, check: str, message: str, witnesses: Iterable[int] = ()):
        self.check = check
        self.witnesses: Tuple[int, ...] = tuple(witnesses)
        detail = f" (mundos {list(self.witnesses)})" if self.witnesses else ""
        super().__init__(f"[{check}] {message}{detail}")


class ReservedNameError(DomainException):
    """Exceção lançada quando a entrada usa nomes reservados (da redução ou constantes) como variáveis."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__(f"Variáveis reservadas na entrada: {', '.join(self.names)}")


class UnknownKernelError(DomainException):
    """Exceção lançada quando um kernel embutido não existe."""
    pass


class DimensionError(DomainException):
    """Exceção lançada quando as dimensões de um toro são inconsistentes."""
    pass


class UnfoldError(DomainException):
    """Exceção lançada quando o desdobramento em grade falha."""

    def __init__(self, message: str, world: int):
        super().__init__(f"{message} (mundo {world})")
        self.world = world


class UnknownSuiteError(DomainException):
    """Exceção lançada quando uma bateria de verificação não existe."""
    pass


class PipelineStageError(DomainException):
    """Exceção lançada quando uma etapa do pipeline falha."""

    def __init__(self, stage: str, message: str, world: Optional[int] = None):
        detail = f" (mundo {world})" if world is not None else ""
        super().__init__(f"Etapa '{stage}' falhou: {message}{detail}")
        self.stage = stage
        self.world = world

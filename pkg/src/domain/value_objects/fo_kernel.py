# src/domain/value_objects/fo_kernel.py
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Optional, Union

from src.domain.exceptions.domain_exceptions import KernelFormatError


@dataclass(frozen=True)
class EdgeAtom:
    """Átomo x_i R x_j (índices a partir de 1)."""

    i: int
    j: int


@dataclass(frozen=True)
class EqAtom:
    """Átomo x_i = x_j."""

    i: int
    j: int


@dataclass(frozen=True)
class FOTrue:
    pass


@dataclass(frozen=True)
class FOFalse:
    pass


@dataclass(frozen=True)
class FONot:
    child: "FOBody"


@dataclass(frozen=True)
class FOAnd:
    left: "FOBody"
    right: "FOBody"


@dataclass(frozen=True)
class FOOr:
    left: "FOBody"
    right: "FOBody"


@dataclass(frozen=True)
class FOImp:
    left: "FOBody"
    right: "FOBody"


FOBody = Union[EdgeAtom, EqAtom, FOTrue, FOFalse, FONot, FOAnd, FOOr, FOImp]
Atom = Union[EdgeAtom, EqAtom]

FO_TRUE = FOTrue()
FO_FALSE = FOFalse()


def walk(body: FOBody) -> Iterator[FOBody]:
    """Percorre os nós do corpo em pré-ordem."""
    stack = [body]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, FONot):
            stack.append(node.child)
        elif isinstance(node, (FOAnd, FOOr, FOImp)):
            stack.extend((node.right, node.left))


def atoms(body: FOBody) -> Iterator[Atom]:
    return (node for node in walk(body) if isinstance(node, (EdgeAtom, EqAtom)))


def highest_index(body: FOBody) -> int:
    return max((max(a.i, a.j) for a in atoms(body)), default=0)


def fo_conj(items: Iterable[FOBody]) -> FOBody:
    items = list(items)
    return reduce(FOAnd, items) if items else FO_TRUE


def fo_disj(items: Iterable[FOBody]) -> FOBody:
    items = list(items)
    return reduce(FOOr, items) if items else FO_FALSE


def sim(i: int, j: int) -> FOBody:
    """Abreviação x_i ~ x_j := x_i R x_j ∧ x_j R x_i."""
    return FOAnd(EdgeAtom(i, j), EdgeAtom(j, i))


@dataclass(frozen=True)
class FOKernel:
    """
    Kernel universal de primeira ordem: corpo livre de quantificadores sobre
    x1..xk, todas implicitamente quantificadas universalmente.
    """

    var_count: int
    body: FOBody
    name: Optional[str] = field(default=None, compare=False)
    uses_equality: bool = field(init=False)

    def __post_init__(self):
        """Valida os índices dos átomos e calcula o uso de igualdade."""
        if self.var_count < 0:
            raise KernelFormatError("O número de variáveis não pode ser negativo")
        uses_equality = False
        for atom in atoms(self.body):
            for index in (atom.i, atom.j):
                if not (1 <= index <= self.var_count):
                    raise KernelFormatError(
                        f"Índice x{index} fora de 1..{self.var_count}"
                    )
            uses_equality = uses_equality or isinstance(atom, EqAtom)
        object.__setattr__(self, "uses_equality", uses_equality)

    @classmethod
    def create(cls, body: FOBody, var_count: Optional[int] = None, name: Optional[str] = None) -> "FOKernel":
        """
        Cria um kernel; sem var_count, usa o maior índice presente no corpo.

        Args:
            body: Corpo do kernel
            var_count: Número de variáveis declaradas
            name: Nome opcional (kernels embutidos)

        Returns:
            Uma nova instância de FOKernel
        """
        if var_count is None:
            var_count = highest_index(body)
        return cls(var_count=var_count, body=body, name=name)

    @property
    def is_basic(self) -> bool:
        """Kernel da linguagem básica de frames (sem igualdade)."""
        return not self.uses_equality


def conjoin_kernels(*kernels: FOKernel, name: Optional[str] = None) -> FOKernel:
    """Conjunção de kernels, completando até o maior número de variáveis."""
    var_count = max((k.var_count for k in kernels), default=0)
    return FOKernel.create(fo_conj(k.body for k in kernels), var_count, name)


def relativize_to_reflexive(kernel: FOKernel, name: Optional[str] = None) -> FOKernel:
    """
    Restringe o kernel aos mundos reflexivos: (x1Rx1 ∧ ... ∧ xkRxk) → corpo.
    """
    guard = fo_conj(EdgeAtom(i, i) for i in range(1, kernel.var_count + 1))
    return FOKernel.create(FOImp(guard, kernel.body), kernel.var_count, name)

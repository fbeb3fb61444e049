# src/infrastructure/logic/tensor_fo_evaluator.py
"""
Avaliador de kernels por tensores numpy: o corpo vira um arranjo booleano de
forma (n,)*k obtido por broadcasting. Usado como oráculo independente do
avaliador com poda em frames pequenos.
"""
import numpy as np

from src.domain.entities.frame import Frame
from src.domain.value_objects.fo_kernel import (
    EdgeAtom, EqAtom, FOAnd, FOBody, FOFalse, FOImp, FOKernel, FONot, FOOr, FOTrue,
)


def _place(matrix: np.ndarray, i: int, j: int, k: int) -> np.ndarray:
    """Posiciona uma relação binária nos eixos i-1 e j-1 de um tensor k-dimensional."""
    n = matrix.shape[0]
    if i == j:
        shape = [1] * k
        shape[i - 1] = n
        return np.diagonal(matrix).reshape(shape)
    a, b = i - 1, j - 1
    if a > b:
        matrix = matrix.T
        a, b = b, a
    shape = [1] * k
    shape[a] = n
    shape[b] = n
    return matrix.reshape(shape)


def _tensor(body: FOBody, adjacency: np.ndarray, identity: np.ndarray, k: int) -> np.ndarray:
    if isinstance(body, EdgeAtom):
        return _place(adjacency, body.i, body.j, k)
    if isinstance(body, EqAtom):
        return _place(identity, body.i, body.j, k)
    if isinstance(body, FOTrue):
        return np.ones([1] * k, dtype=bool)
    if isinstance(body, FOFalse):
        return np.zeros([1] * k, dtype=bool)
    if isinstance(body, FONot):
        return ~_tensor(body.child, adjacency, identity, k)
    left = _tensor(body.left, adjacency, identity, k)
    right = _tensor(body.right, adjacency, identity, k)
    if isinstance(body, FOAnd):
        return left & right
    if isinstance(body, FOOr):
        return left | right
    if isinstance(body, FOImp):
        return ~left | right
    raise TypeError(f"Nó de kernel desconhecido: {body!r}")


def eval_universal_tensor(frame: Frame, kernel: FOKernel) -> bool:
    """
    Verifica o kernel sobre todas as n^k atribuições de uma vez.

    Args:
        frame: Frame de avaliação
        kernel: Kernel universal

    Returns:
        True se o corpo vale em todas as atribuições
    """
    n = frame.world_count
    if n == 0:
        return True
    adjacency = frame.adjacency_matrix()
    identity = np.eye(n, dtype=bool)
    return bool(np.all(_tensor(kernel.body, adjacency, identity, kernel.var_count)))

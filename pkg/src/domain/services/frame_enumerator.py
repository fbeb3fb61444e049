# src/domain/services/frame_enumerator.py
"""
Enumeração de frames por matriz de adjacência em ordem lexicográfica.

A célula (0, 0) é a mais significativa e "sem aresta" vem antes de "com
aresta"; o frame vazio de arestas é sempre o primeiro de cada tamanho.
"""
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from src.domain.entities.frame import Frame
from src.domain.services.fo_evaluator import eval_universal
from src.domain.value_objects.fo_kernel import FOKernel

Cell = Tuple[int, int]


def adjacency_cells(n: int) -> List[Cell]:
    """Células da matriz n×n em ordem de linha."""
    return [(i, j) for i in range(n) for j in range(n)]


def raw_frames(n: int, prefix: Sequence[bool] = ()) -> Iterator[Frame]:
    """
    Todos os 2^(n²) grafos dirigidos com n mundos, em ordem lexicográfica.

    Args:
        n: Número de mundos
        prefix: Valores fixos das primeiras células (partição entre workers)
    """
    cells = adjacency_cells(n)
    fixed = tuple(prefix)
    if len(fixed) > len(cells):
        raise ValueError("Prefixo maior que a matriz de adjacência")
    free = cells[len(fixed):]
    head = [cell for cell, bit in zip(cells, fixed) if bit]
    for bits in product((False, True), repeat=len(free)):
        yield Frame.create(n, head + [cell for cell, bit in zip(free, bits) if bit])


def adjacency_code(frame: Frame, perm: Optional[Sequence[int]] = None) -> Tuple[bool, ...]:
    """Código da matriz (opcionalmente com os mundos renomeados por perm)."""
    n = frame.world_count
    if perm is None:
        return tuple((i, j) in frame.edges for i, j in adjacency_cells(n))
    inverse = [0] * n
    for old, new in enumerate(perm):
        inverse[new] = old
    return tuple((inverse[i], inverse[j]) in frame.edges for i, j in adjacency_cells(n))


def is_canonical(frame: Frame) -> bool:
    """True se nenhuma renomeação dos mundos produz um código anterior."""
    code = adjacency_code(frame)
    return all(code <= adjacency_code(frame, perm) for perm in permutations(frame.worlds))


def enumerate_frames(n: int, kernel: FOKernel, canonical_only: bool = False,
                     prefix: Sequence[bool] = ()) -> Iterator[Frame]:
    """
    Frames com n mundos que satisfazem o kernel, em ordem determinística.

    Args:
        n: Número de mundos (≥ 1)
        kernel: Kernel universal usado como filtro
        canonical_only: Mantém apenas o primeiro frame de cada classe de isomorfismo
        prefix: Valores fixos das primeiras células

    Returns:
        Iterador de frames
    """
    for frame in raw_frames(n, prefix):
        if canonical_only and not is_canonical(frame):
            continue
        if eval_universal(frame, kernel):
            yield frame

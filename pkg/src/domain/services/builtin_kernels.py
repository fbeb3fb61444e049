# src/domain/services/builtin_kernels.py
"""Kernels de primeira ordem embutidos (condições de frame da grade)."""
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List

from src.domain.exceptions.domain_exceptions import UnknownKernelError
from src.domain.value_objects.fo_kernel import (
    EdgeAtom, EqAtom, FOImp, FOKernel, FONot, conjoin_kernels, fo_conj,
    fo_disj, relativize_to_reflexive, sim,
)


def _phi_1step() -> FOKernel:
    # x = x1, y1..y3 = x2..x4
    x, ys = 1, (2, 3, 4)
    antecedent = fo_conj(EdgeAtom(x, y) for y in ys)
    consequent = fo_disj(
        [sim(x, y) for y in ys] + [sim(a, b) for a, b in combinations(ys, 2)]
    )
    return FOKernel.create(FOImp(antecedent, consequent), 4, "phi_1step")


def _phi_2step() -> FOKernel:
    # x = x1, y1..y4 = x2..x5, z1..z4 = x6..x9
    x = 1
    ys = (2, 3, 4, 5)
    zs = (6, 7, 8, 9)
    antecedent = fo_conj(
        fo_conj((EdgeAtom(x, y), EdgeAtom(y, z))) for y, z in zip(ys, zs)
    )
    consequent = fo_disj(
        [sim(x, y) for y in ys]
        + [sim(y, z) for y, z in zip(ys, zs)]
        + [sim(a, b) for a, b in combinations(zs, 2)]
    )
    return FOKernel.create(FOImp(antecedent, consequent), 9, "phi_2step")


def _phi_eq() -> FOKernel:
    x, y, z = 1, 2, 3
    forward = FOImp(fo_conj((sim(x, y), EdgeAtom(y, z))), EdgeAtom(x, z))
    backward = FOImp(fo_conj((sim(x, y), EdgeAtom(z, y))), EdgeAtom(z, x))
    return FOKernel.create(fo_conj((forward, backward)), 3, "phi_eq")


def _phi_grid() -> FOKernel:
    return conjoin_kernels(_phi_1step(), _phi_2step(), _phi_eq(), name="phi_grid")


def _phi_univ() -> FOKernel:
    # w_u = x1, x = x2, y = x3
    w_u, x, y = 1, 2, 3
    reach_loop = FOImp(EdgeAtom(x, y), EdgeAtom(y, y))
    universal = FOImp(FONot(EdgeAtom(w_u, w_u)), FOImp(EdgeAtom(x, y), EdgeAtom(w_u, y)))
    return FOKernel.create(fo_conj((reach_loop, universal)), 3, "phi_univ")


def _phi_final() -> FOKernel:
    return conjoin_kernels(
        _phi_univ(), relativize_to_reflexive(_phi_grid()), name="phi_final"
    )


def _phi_prior_eq() -> FOKernel:
    # versão com igualdade: no máximo dois sucessores e três mundos a dois passos
    x = 1
    ys = (2, 3, 4)
    one_step = FOImp(
        fo_conj(EdgeAtom(x, y) for y in ys),
        fo_disj(EqAtom(a, b) for a, b in combinations(ys, 2)),
    )
    y2s = (2, 3, 4, 5)
    zs = (6, 7, 8, 9)
    two_step = FOImp(
        fo_conj(fo_conj((EdgeAtom(x, y), EdgeAtom(y, z))) for y, z in zip(y2s, zs)),
        fo_disj(EqAtom(a, b) for a, b in combinations(zs, 2)),
    )
    return FOKernel.create(fo_conj((one_step, two_step)), 9, "phi_prior_eq")


_BUILDERS: Dict[str, Callable[[], FOKernel]] = {
    "phi_1step": _phi_1step,
    "phi_2step": _phi_2step,
    "phi_eq": _phi_eq,
    "phi_grid": _phi_grid,
    "phi_univ": _phi_univ,
    "phi_final": _phi_final,
    "phi_prior_eq": _phi_prior_eq,
}


def builtin_names() -> List[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def builtin(name: str) -> FOKernel:
    """
    Retorna um kernel embutido pelo nome.

    Args:
        name: Um de phi_1step, phi_2step, phi_eq, phi_grid, phi_univ,
            phi_final, phi_prior_eq

    Returns:
        O kernel correspondente (imutável)
    """
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownKernelError(
            f"Kernel embutido desconhecido: {name} (disponíveis: {', '.join(_BUILDERS)})"
        )

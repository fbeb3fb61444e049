# src/domain/services/model_checker.py
"""
Relação de satisfação sobre modelos finitos.

Duas implementações independentes convivem aqui: `check`, recursiva e mundo a
mundo, e a rotulação por máscaras de bits (`satisfying_worlds`,
`partial_labeling`), que calcula de uma vez o conjunto de mundos de cada
subfórmula. Os testes exigem que ambas concordem.
"""
from typing import Dict, FrozenSet, Mapping, Tuple

from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.value_objects.modal_formula import (
    And, Bottom, Box, Dia, Iff, Imp, ModalFormula, Not, Or, Top, Var,
)


def check(m: Model, w: int, f: ModalFormula) -> bool:
    """
    Verifica se M, w ⊨ f.

    Args:
        m: Modelo
        w: Mundo de avaliação
        f: Fórmula modal

    Returns:
        True se a fórmula é satisfeita no mundo
    """
    m.frame.check_world(w)
    return _check(m, w, f)


def _check(m: Model, w: int, f: ModalFormula) -> bool:
    if isinstance(f, Var):
        return m.true_at(f.name, w)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not _check(m, w, f.child)
    if isinstance(f, And):
        return _check(m, w, f.left) and _check(m, w, f.right)
    if isinstance(f, Or):
        return _check(m, w, f.left) or _check(m, w, f.right)
    if isinstance(f, Imp):
        return (not _check(m, w, f.left)) or _check(m, w, f.right)
    if isinstance(f, Iff):
        return _check(m, w, f.left) == _check(m, w, f.right)
    if isinstance(f, Box):
        return all(_check(m, s, f.child) for s in m.frame.successors(w))
    if isinstance(f, Dia):
        return any(_check(m, s, f.child) for s in m.frame.successors(w))
    raise TypeError(f"Nó de fórmula desconhecido: {f!r}")


def check_global(m: Model, f: ModalFormula) -> bool:
    """Verifica se a fórmula vale em todos os mundos do modelo."""
    return satisfying_worlds(m, f) == frozenset(m.worlds)


def satisfying_worlds(m: Model, f: ModalFormula) -> FrozenSet[int]:
    """Conjunto de mundos que satisfazem a fórmula (rotulação global)."""
    mask = _label(m.frame, {name: m.truth_mask(name) for name in m.valuation}, f, {})
    return frozenset(w for w in m.worlds if mask >> w & 1)


def _box_mask(frame: Frame, child: int) -> int:
    result = 0
    for w, successors in enumerate(frame.successor_masks):
        if not successors & ~child:
            result |= 1 << w
    return result


def _dia_mask(frame: Frame, child: int) -> int:
    result = 0
    for w, successors in enumerate(frame.successor_masks):
        if successors & child:
            result |= 1 << w
    return result


def _label(frame: Frame, truth: Mapping[str, int], f: ModalFormula, memo: Dict[int, tuple]) -> int:
    cached = memo.get(id(f))
    if cached is not None:
        return cached[1]
    full = frame.full_mask
    if isinstance(f, Var):
        mask = truth.get(f.name, 0)
    elif isinstance(f, Top):
        mask = full
    elif isinstance(f, Bottom):
        mask = 0
    elif isinstance(f, Not):
        mask = full & ~_label(frame, truth, f.child, memo)
    elif isinstance(f, And):
        mask = _label(frame, truth, f.left, memo) & _label(frame, truth, f.right, memo)
    elif isinstance(f, Or):
        mask = _label(frame, truth, f.left, memo) | _label(frame, truth, f.right, memo)
    elif isinstance(f, Imp):
        mask = (full & ~_label(frame, truth, f.left, memo)) | _label(frame, truth, f.right, memo)
    elif isinstance(f, Iff):
        left = _label(frame, truth, f.left, memo)
        right = _label(frame, truth, f.right, memo)
        mask = full & ~(left ^ right)
    elif isinstance(f, Box):
        mask = _box_mask(frame, _label(frame, truth, f.child, memo))
    elif isinstance(f, Dia):
        mask = _dia_mask(frame, _label(frame, truth, f.child, memo))
    else:
        raise TypeError(f"Nó de fórmula desconhecido: {f!r}")
    # guarda o nó junto para que id(f) não seja reciclado durante a rotulação
    memo[id(f)] = (f, mask)
    return mask


Trit = Tuple[int, int]


def partial_labeling(frame: Frame, partial: Mapping[str, Trit], f: ModalFormula) -> Trit:
    """
    Rotulação trivalente (Kleene forte) sob uma valoração parcial.

    Args:
        frame: Frame de avaliação
        partial: Mapa variável -> (máscara verdadeira, máscara falsa); células
            em nenhuma das máscaras estão indefinidas. Variáveis ausentes são
            falsas em todo lugar.
        f: Fórmula modal

    Returns:
        Par (mundos onde f é certamente verdadeira, mundos onde é certamente falsa)
    """
    return _label3(frame, partial, f, {})


def _label3(frame: Frame, partial: Mapping[str, Trit], f: ModalFormula, memo: Dict[int, tuple]) -> Trit:
    cached = memo.get(id(f))
    if cached is not None:
        return cached[1]
    full = frame.full_mask
    if isinstance(f, Var):
        result = partial.get(f.name, (0, full))
    elif isinstance(f, Top):
        result = (full, 0)
    elif isinstance(f, Bottom):
        result = (0, full)
    elif isinstance(f, Not):
        t, n = _label3(frame, partial, f.child, memo)
        result = (n, t)
    elif isinstance(f, (And, Or, Imp, Iff)):
        lt, lf = _label3(frame, partial, f.left, memo)
        rt, rf = _label3(frame, partial, f.right, memo)
        if isinstance(f, And):
            result = (lt & rt, lf | rf)
        elif isinstance(f, Or):
            result = (lt | rt, lf & rf)
        elif isinstance(f, Imp):
            result = (lf | rt, lt & rf)
        else:
            result = ((lt & rt) | (lf & rf), (lt & rf) | (lf & rt))
    elif isinstance(f, Box):
        t, n = _label3(frame, partial, f.child, memo)
        result = (_box_mask(frame, t), _dia_mask(frame, n))
    elif isinstance(f, Dia):
        t, n = _label3(frame, partial, f.child, memo)
        result = (_dia_mask(frame, t), _box_mask(frame, n))
    else:
        raise TypeError(f"Nó de fórmula desconhecido: {f!r}")
    memo[id(f)] = (f, result)
    return result

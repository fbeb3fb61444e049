# src/domain/services/formula_generator.py
"""Geradores determinísticos e aleatórios de fórmulas modais para as baterias."""
import random
from typing import List, Sequence

from src.domain.value_objects.modal_formula import (
    FALSE, TRUE, And, Box, Dia, Iff, Imp, ModalFormula, Not, Or, Var,
)


def formula_pool(names: Sequence[str] = ("p",), max_depth: int = 3) -> List[ModalFormula]:
    """
    Conjunto fixo de fórmulas com profundidade modal até max_depth.

    Cada camada aplica □ e ◇ à camada anterior e acrescenta duas combinações
    booleanas por fórmula; a ordem é sempre a mesma.

    Args:
        names: Variáveis usadas
        max_depth: Profundidade modal máxima

    Returns:
        Lista sem repetições, em ordem de construção
    """
    atoms = [Var(name) for name in names]
    base: List[ModalFormula] = atoms + [TRUE, FALSE] + [Not(a) for a in atoms]
    pool = list(base)
    frontier = base
    for _ in range(max_depth):
        boxed = []
        extras = []
        for f in frontier:
            boxed.extend((Box(f), Dia(f)))
            extras.append(Imp(f, Box(f)))
            extras.append(And(Dia(f), Dia(Not(f))))
        pool.extend(boxed + extras)
        frontier = boxed
    unique: List[ModalFormula] = []
    seen = set()
    for f in pool:
        if f not in seen:
            seen.add(f)
            unique.append(f)
    return unique


def random_formula(rng: random.Random, names: Sequence[str], depth: int) -> ModalFormula:
    """
    Fórmula aleatória com altura de árvore até `depth`.

    Args:
        rng: Gerador com semente
        names: Variáveis disponíveis
        depth: Altura máxima da árvore

    Returns:
        A fórmula sorteada
    """
    if depth <= 0 or rng.random() < 0.2:
        choice = rng.randrange(len(names) + 2)
        if choice < len(names):
            return Var(names[choice])
        return TRUE if choice == len(names) else FALSE
    kind = rng.choice(("not", "box", "dia", "and", "or", "imp", "iff"))
    if kind == "not":
        return Not(random_formula(rng, names, depth - 1))
    if kind == "box":
        return Box(random_formula(rng, names, depth - 1))
    if kind == "dia":
        return Dia(random_formula(rng, names, depth - 1))
    left = random_formula(rng, names, depth - 1)
    right = random_formula(rng, names, depth - 1)
    return {"and": And, "or": Or, "imp": Imp, "iff": Iff}[kind](left, right)


def random_formulas(seed: int, count: int, names: Sequence[str], depth: int) -> List[ModalFormula]:
    rng = random.Random(seed)
    return [random_formula(rng, names, depth) for _ in range(count)]

# src/domain/services/grid_encoding.py
"""
Codificação da grade: contador d8, fórmulas ψ_resp e ψ_succ, traduções g e f,
localização e os construtores/extratores de modelos usados na redução.
"""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import (
    DimensionError, PreconditionViolation, ReservedNameError, UnfoldError,
)
from src.domain.services.abstraction import compute_partition, quotient
from src.domain.services.builtin_kernels import builtin
from src.domain.services.fo_evaluator import find_violation
from src.domain.services.model_checker import satisfying_worlds
from src.domain.value_objects.modal_formula import (
    And, Bottom, Box, Dia, Iff, Imp, ModalFormula, Not, Or, TRUE, Top, Var,
    conjunction, disjunction, is_reserved, modal_depth, variables,
)

logger = logging.getLogger(__name__)

D8_BITS: Tuple[str, str, str] = ("__d8a", "__d8b", "__d8c")
U_VAR = "__u"
RIGHT_OFFSET = 3
UP_OFFSET = 2

Coordinate = Tuple[int, int]


def reject_reserved(names: Iterable[str]) -> None:
    """Lança ReservedNameError se algum nome usar o prefixo reservado."""
    reserved = {name for name in names if is_reserved(name)}
    if reserved:
        raise ReservedNameError(reserved)


@lru_cache(maxsize=8)
def d8_eq(d: int) -> ModalFormula:
    """
    Fórmula "d8 = d": conjunção dos três literais da codificação binária.

    Args:
        d: Valor 0..7 (o bit mais significativo é __d8a)

    Returns:
        A conjunção de literais
    """
    if not (0 <= d <= 7):
        raise ValueError(f"Valor d8 fora de 0..7: {d}")
    literals = []
    for position, name in enumerate(D8_BITS):
        bit = (d >> (2 - position)) & 1
        literals.append(Var(name) if bit else Not(Var(name)))
    return conjunction(literals)


def d8_bits(d: int) -> Tuple[str, ...]:
    """Bits verdadeiros na codificação de d."""
    return tuple(name for position, name in enumerate(D8_BITS) if (d >> (2 - position)) & 1)


def d8_value(m: Model, w: int) -> int:
    """Valor do contador d8 no mundo w."""
    m.frame.check_world(w)
    value = 0
    for name in D8_BITS:
        value = (value << 1) | int(m.true_at(name, w))
    return value


def psi_resp(p_set: Iterable[str], literal_scoping: bool = False) -> ModalFormula:
    """
    Fórmula ψ_resp^P: sucessores com d8 em {d, d+2, d+3} e variáveis de P
    preservadas entre mundos com o mesmo d8.

    Args:
        p_set: Conjunto P de variáveis (sem nomes reservados)
        literal_scoping: Se True, a restrição de sucessores só aparece dentro
            da conjunção sobre P (nada é emitido para P vazio)

    Returns:
        A conjunção sobre d = 0..7
    """
    names = sorted(set(p_set))
    reject_reserved(names)
    conjuncts: List[ModalFormula] = []
    for d in range(8):
        here = d8_eq(d)
        successor_values = Imp(
            here, Box(disjunction([here, d8_eq((d + 2) % 8), d8_eq((d + 3) % 8)]))
        )
        if not literal_scoping:
            conjuncts.append(successor_values)
        for name in names:
            p = Var(name)
            if literal_scoping:
                conjuncts.append(successor_values)
            conjuncts.append(Imp(here, Imp(p, Box(Imp(here, p)))))
            conjuncts.append(Imp(here, Imp(Not(p), Box(Imp(here, Not(p))))))
    return conjunction(conjuncts)


def psi_succ() -> ModalFormula:
    """Fórmula ψ_succ: todo mundo com d8 = d tem sucessores com d+2 e d+3."""
    return conjunction(
        Imp(d8_eq(d), And(Dia(d8_eq((d + UP_OFFSET) % 8)), Dia(d8_eq((d + RIGHT_OFFSET) % 8))))
        for d in range(8)
    )


def _g_box(translated_child: ModalFormula) -> ModalFormula:
    return conjunction(
        Imp(d8_eq(d), Box(Imp(Not(d8_eq(d)), translated_child))) for d in range(8)
    )


def _translate(f: ModalFormula) -> ModalFormula:
    if isinstance(f, (Var, Top, Bottom)):
        return f
    if isinstance(f, Not):
        return Not(_translate(f.child))
    if isinstance(f, And):
        return And(_translate(f.left), _translate(f.right))
    if isinstance(f, Or):
        return Or(_translate(f.left), _translate(f.right))
    if isinstance(f, Imp):
        return Imp(_translate(f.left), _translate(f.right))
    if isinstance(f, Iff):
        return Iff(_translate(f.left), _translate(f.right))
    if isinstance(f, Box):
        return _g_box(_translate(f.child))
    if isinstance(f, Dia):
        # ◇χ = ¬□¬χ
        return Not(_g_box(Not(_translate(f.child))))
    raise TypeError(f"Nó de fórmula desconhecido: {f!r}")


def translate_g(psi: ModalFormula) -> ModalFormula:
    """
    Tradução g: □ passa a quantificar apenas sucessores com d8 diferente.

    Args:
        psi: Fórmula sem variáveis reservadas (recomendado md ≤ 1)

    Returns:
        A fórmula traduzida, com a mesma profundidade modal
    """
    reject_reserved(variables(psi))
    depth = modal_depth(psi)
    if depth > 1:
        logger.warning(f"translate_g recebeu fórmula com profundidade modal {depth} > 1")
    return _translate(psi)


def reduce_f(psi: ModalFormula, literal_scoping: bool = False) -> ModalFormula:
    """
    Redução f(ψ) = g(ψ) ∧ ψ_resp^P ∧ ψ_succ com P = var(ψ).

    Quando g(ψ) é a constante verdadeira, o conjunto é omitido.
    """
    g = translate_g(psi)
    parts = [] if g == TRUE else [g]
    parts.append(psi_resp(variables(psi), literal_scoping=literal_scoping))
    parts.append(psi_succ())
    return conjunction(parts)


def localize(psi: ModalFormula) -> ModalFormula:
    """Localização __u ∧ □¬__u ∧ □ψ."""
    if U_VAR in variables(psi):
        raise ReservedNameError({U_VAR})
    u = Var(U_VAR)
    return And(And(u, Box(Not(u))), Box(psi))


def torus_world(i: int, j: int, height: int) -> int:
    """Índice do mundo (i, j) no toro (i = coluna, j = linha)."""
    return i * height + j


def torus_coordinates(w: int, height: int) -> Coordinate:
    return divmod(w, height)


def _torus_valuation(width: int, height: int,
                     base_valuation: Mapping[str, Iterable[Coordinate]]) -> Dict[str, Set[int]]:
    reject_reserved(base_valuation)
    valuation: Dict[str, Set[int]] = {}
    for name, cells in base_valuation.items():
        worlds = set()
        for i, j in cells:
            if not (0 <= i < width and 0 <= j < height):
                raise DimensionError(f"Célula ({i},{j}) fora do toro {width}x{height}")
            worlds.add(torus_world(i, j, height))
        valuation[name] = worlds
    return valuation


def make_torus_model(width: int, height: int,
                     base_valuation: Optional[Mapping[str, Iterable[Coordinate]]] = None) -> Model:
    """
    Toro simples W×H com arestas para a direita e para cima (sem laços nem d8).

    Args:
        width: Largura W
        height: Altura H
        base_valuation: Mapa variável -> células (i, j) onde é verdadeira

    Returns:
        O modelo do toro
    """
    if width < 1 or height < 1:
        raise DimensionError(f"Dimensões inválidas: {width}x{height}")
    edges = set()
    for i in range(width):
        for j in range(height):
            here = torus_world(i, j, height)
            edges.add((here, torus_world((i + 1) % width, j, height)))
            edges.add((here, torus_world(i, (j + 1) % height, height)))
    valuation = _torus_valuation(width, height, base_valuation or {})
    return Model.create(width * height, edges, valuation)


def make_torus_hat_model(width: int, height: int,
                         base_valuation: Optional[Mapping[str, Iterable[Coordinate]]] = None) -> Model:
    """
    Toro com fecho reflexivo e contador d8(i, j) = 3i + 2j mod 8.

    Raises:
        DimensionError: se W não for múltiplo de 8 ou H não for múltiplo de 4
    """
    if width < 8 or height < 4 or width % 8 or height % 4:
        raise DimensionError(
            f"O toro precisa de largura ≡ 0 (mod 8) e altura ≡ 0 (mod 4); recebido {width}x{height}"
        )
    plain = make_torus_model(width, height, base_valuation)
    valuation = {name: set(worlds) for name, worlds in plain.valuation.items()}
    for name in D8_BITS:
        valuation[name] = set()
    for i in range(width):
        for j in range(height):
            for name in d8_bits((RIGHT_OFFSET * i + UP_OFFSET * j) % 8):
                valuation[name].add(torus_world(i, j, height))
    return Model(frame=plain.frame.reflexive_closure(), valuation=valuation)


def add_universal_world(m: Model) -> Tuple[Model, int]:
    """
    Acrescenta um mundo universal irreflexivo w_u com arestas para todos os
    mundos; __u vale exatamente em w_u.

    Returns:
        O novo modelo e o índice de w_u
    """
    if not m.is_reflexive():
        missing = [w for w in m.worlds if not m.frame.has_edge(w, w)]
        raise PreconditionViolation("reflexive", "O modelo não é reflexivo", missing[:1])
    if U_VAR in m.valuation:
        raise ReservedNameError({U_VAR})
    w_u = m.world_count
    edges = set(m.frame.edges) | {(w_u, w) for w in m.worlds}
    valuation = dict(m.valuation)
    valuation[U_VAR] = frozenset({w_u})
    return Model.create(w_u + 1, edges, valuation), w_u


def extract_generated_submodel(m: Model, w_u: int) -> Tuple[Model, Dict[int, int]]:
    """
    Submodelo induzido pelos sucessores diretos de w_u, reindexado.

    Returns:
        O submodelo e o mapa mundo original -> mundo novo
    """
    m.frame.check_world(w_u)
    if m.frame.has_edge(w_u, w_u):
        raise PreconditionViolation("irreflexive", "O mundo universal é reflexivo", (w_u,))
    return m.induced_submodel(m.frame.successors(w_u))


def check_grid_preconditions(m: Model, p_set: Iterable[str]) -> None:
    """Reflexividade, φ_grid e ψ_resp^P global; lança PreconditionViolation."""
    missing = [w for w in m.worlds if not m.frame.has_edge(w, w)]
    if missing:
        raise PreconditionViolation("reflexive", "O modelo não é reflexivo", missing[:1])
    violation = find_violation(m.frame, builtin("phi_grid"))
    if violation is not None:
        raise PreconditionViolation("phi_grid", "O frame não satisfaz φ_grid", violation)
    holding = satisfying_worlds(m, psi_resp(p_set))
    failing = [w for w in m.worlds if w not in holding]
    if failing:
        raise PreconditionViolation("psi_resp", "ψ_resp não vale globalmente", failing[:1])


def degrid(m: Model, p_set: Iterable[str]) -> Model:
    """
    Modelo M⁰_grid: o quociente sobre P ∪ d8 sem as arestas entre mundos com
    o mesmo valor de d8 (em particular sem os laços).

    Args:
        m: Modelo reflexivo φ_grid que satisfaz ψ_resp^P globalmente
        p_set: Conjunto P

    Returns:
        O modelo M⁰_grid
    """
    p_set = frozenset(p_set)
    check_grid_preconditions(m, p_set)
    partition = compute_partition(m)
    abstract = quotient(m, p_set | set(D8_BITS), partition)
    edges = {
        (i, j) for i, j in abstract.frame.edges
        if d8_value(abstract, i) != d8_value(abstract, j)
    }
    logger.info(f"degrid: {m.world_count} mundos -> {abstract.world_count} classes, {len(edges)} arestas")
    return Model(frame=Frame.create(abstract.world_count, edges), valuation=abstract.valuation)


def _offset_successor(m0: Model, w: int, offset: int) -> int:
    target = (d8_value(m0, w) + offset) % 8
    candidates = [s for s in m0.frame.successors(w) if d8_value(m0, s) == target]
    if not candidates:
        raise UnfoldError(f"Sem sucessor com d8 = {target}", w)
    if len(candidates) > 1:
        raise UnfoldError(f"Sucessor com d8 = {target} ambíguo: {candidates}", w)
    return candidates[0]


def fragment_world(i: int, j: int, k: int) -> int:
    """Índice do mundo (i, j) num fragmento (k+1)×(k+1)."""
    return i * (k + 1) + j


def interior_worlds(k: int) -> List[int]:
    """Mundos (i, j) com i, j < k, cujos sucessores estão todos no fragmento."""
    return [fragment_world(i, j, k) for i in range(k) for j in range(k)]


def unfold_grid_fragment(m0: Model, start: int, k: int) -> Model:
    """
    Desdobra M⁰_grid num fragmento de grade (k+1)×(k+1) a partir de `start`.

    A direita é o sucessor com d8 + 3 e o de cima é o sucessor com d8 + 2;
    o losango direita-cima deve fechar.

    Args:
        m0: Saída de degrid
        start: Mundo de origem (0, 0)
        k: Maior coordenada do fragmento

    Returns:
        Modelo com mundos fragment_world(i, j, k), arestas só para a direita e
        para cima, valoração copiada do mundo de origem
    """
    if k < 0:
        raise DimensionError(f"k deve ser não negativo: {k}")
    m0.frame.check_world(start)
    source: Dict[Coordinate, int] = {(0, 0): start}
    for i in range(1, k + 1):
        source[(i, 0)] = _offset_successor(m0, source[(i - 1, 0)], RIGHT_OFFSET)
    for i in range(k + 1):
        for j in range(1, k + 1):
            source[(i, j)] = _offset_successor(m0, source[(i, j - 1)], UP_OFFSET)
    for i in range(k):
        for j in range(k):
            corner = _offset_successor(m0, source[(i, j + 1)], RIGHT_OFFSET)
            if corner != source[(i + 1, j + 1)]:
                raise UnfoldError("O losango direita/cima não fecha", source[(i, j)])
    for i in range(k):
        for j in range(k):
            w = source[(i, j)]
            expected = {source[(i + 1, j)], source[(i, j + 1)]}
            if set(m0.frame.successors(w)) != expected:
                raise UnfoldError("Sucessores além de direita/cima", w)

    edges = set()
    for i in range(k + 1):
        for j in range(k + 1):
            if i < k:
                edges.add((fragment_world(i, j, k), fragment_world(i + 1, j, k)))
            if j < k:
                edges.add((fragment_world(i, j, k), fragment_world(i, j + 1, k)))
    valuation = {
        name: {fragment_world(i, j, k) for (i, j), w in source.items() if w in truth}
        for name, truth in m0.valuation.items()
    }
    return Model.create((k + 1) * (k + 1), edges, valuation)


def nonsymmetric_successors(m: Model, w: int) -> FrozenSet[int]:
    """Sucessores w' de w sem a aresta de volta (w' R w)."""
    return frozenset(s for s in m.frame.successors(w) if not m.frame.has_edge(s, w))


def d8_offset_violations(m: Model) -> List[Tuple[int, int, int]]:
    """
    Mundos w' ≠ w alcançáveis em até dois passos não simétricos cujo d8 não
    difere de d8(w) por 2..6 (mod 8).

    Returns:
        Triplas (w, w', diferença) violadoras
    """
    found = []
    for w in m.worlds:
        origin = d8_value(m, w)
        reached = set(nonsymmetric_successors(m, w))
        for y in list(reached):
            reached |= nonsymmetric_successors(m, y)
        reached.discard(w)
        for target in sorted(reached):
            offset = (d8_value(m, target) - origin) % 8
            if not (2 <= offset <= 6):
                found.append((w, target, offset))
    return found

# src/application/usecases/verification_usecases.py
"""
Baterias de verificação: cada uma percorre um conjunto fixo (ou exaustivo)
de casos e devolve um VerifySuiteReport com contraexemplos reproduzíveis.
"""
import asyncio
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from config import settings
from src.application.dtos.reports import CaseFailure, VerifySuiteReport
from src.application.interfaces.services.model_finder_interface import ModelFinderInterface
from src.application.interfaces.services.text_codec_interface import TextCodecInterface
from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import DomainException, UnknownSuiteError
from src.domain.services.abstraction import (
    check_abstraction_structure, compute_partition, quotient, quotient_frame, respects,
)
from src.domain.services.builtin_kernels import builtin, builtin_names
from src.domain.services.fo_evaluator import eval_universal
from src.domain.services.frame_enumerator import raw_frames
from src.domain.services.formula_generator import formula_pool, random_formulas
from src.domain.services.grid_encoding import (
    D8_BITS, add_universal_world, d8_offset_violations, degrid,
    extract_generated_submodel, interior_worlds, localize, make_torus_hat_model,
    make_torus_model, nonsymmetric_successors, psi_resp, reduce_f, translate_g,
    unfold_grid_fragment,
)
from src.domain.services.model_checker import check, check_global, satisfying_worlds
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import TRUE, Box, ModalFormula, modal_depth, variables
from src.domain.value_objects.search_outcome import SearchMode

logger = logging.getLogger(__name__)

SUITE_NAMES = (
    "lemma3", "lemma4", "lemma5", "gbridge", "thm6-forward",
    "thm8-roundtrip", "subframe", "oracle",
)

# Fórmulas de referência (md ≤ 1) com valorações de toro 8×4 que as satisfazem
REFERENCE_CASES = (
    ("<>true", {}),
    ("(p -> []!p) & (!p -> []p)", {"p": "checkerboard"}),
    ("p -> <>true", {"p": "checkerboard"}),
)


@dataclass(frozen=True)
class SuiteOptions:
    """Parâmetros das baterias (limites e extensões aleatórias)."""

    lemma3_max_worlds: int = 4
    lemma4_max_worlds: int = 3
    subframe_max_worlds: int = 4
    oracle_max_worlds: int = 3
    oracle_max_depth: int = 2
    seed: Optional[int] = None
    random_cases: int = 0

    @classmethod
    def from_settings(cls, **overrides) -> "SuiteOptions":
        values = dict(
            lemma3_max_worlds=settings.VERIFY_LEMMA3_MAX_WORLDS,
            lemma4_max_worlds=settings.VERIFY_LEMMA4_MAX_WORLDS,
            subframe_max_worlds=settings.VERIFY_SUBFRAME_MAX_WORLDS,
            oracle_max_worlds=settings.VERIFY_ORACLE_MAX_WORLDS,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SuitePorts:
    """Dependências externas das baterias (precisam ser serializáveis por pickle)."""

    codec: TextCodecInterface
    primary_finder: ModelFinderInterface
    oracle_finder: ModelFinderInterface


def _failure(ports: SuitePorts, index: int, description: str, model: Model,
             formula: ModalFormula, world: Optional[int] = None,
             kernel: Optional[FOKernel] = None) -> CaseFailure:
    """
    Monta o contraexemplo com os vereditos que replay_failure reproduz.

    Args:
        ports: Dependências (o codec imprime modelo, fórmula e kernel)
        index: Índice canônico do caso
        description: O que falhou
        model: Modelo do contraexemplo
        formula: Fórmula avaliada no modelo
        world: Mundo avaliado; None para satisfação global
        kernel: Kernel avaliado no frame, se houver
    """
    holds = check_global(model, formula) if world is None else check(model, world, formula)
    return CaseFailure(
        case_index=index,
        description=description,
        model_text=ports.codec.render_model(model),
        formula_text=ports.codec.render_formula(formula),
        world=world,
        formula_holds=holds,
        kernel_text=ports.codec.render_kernel(kernel) if kernel is not None else None,
        kernel_holds=eval_universal(model.frame, kernel) if kernel is not None else None,
    )


def replay_failure(failure: CaseFailure, codec: TextCodecInterface) -> Tuple[bool, Optional[bool]]:
    """
    Relê um contraexemplo e refaz as verificações.

    Args:
        failure: Caso registrado num relatório
        codec: Leitura dos formatos textuais

    Returns:
        (veredito da fórmula, veredito do kernel ou None)
    """
    model = codec.parse_model(failure.model_text)
    formula = codec.parse_formula(failure.formula_text)
    if failure.world is None:
        holds = check_global(model, formula)
    else:
        holds = check(model, failure.world, formula)
    kernel_holds = None
    if failure.kernel_text is not None:
        kernel_holds = eval_universal(model.frame, codec.parse_kernel(failure.kernel_text))
    return holds, kernel_holds


def reflexive_frames(n: int) -> Iterator[Frame]:
    """Frames reflexivos com n mundos: laços fixos, arestas próprias livres."""
    loops = [(w, w) for w in range(n)]
    proper = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((False, True), repeat=len(proper)):
        yield Frame.create(n, loops + [cell for cell, bit in zip(proper, bits) if bit])


def torus_pattern(width: int, height: int, pattern: str, seed: int = 0) -> Set[Tuple[int, int]]:
    """Células de um padrão nomeado sobre o toro."""
    cells = [(i, j) for i in range(width) for j in range(height)]
    if pattern == "empty":
        return set()
    if pattern == "full":
        return set(cells)
    if pattern == "checkerboard":
        return {(i, j) for i, j in cells if (i + j) % 2 == 0}
    if pattern == "rows":
        return {(i, j) for i, j in cells if j % 2 == 0}
    if pattern == "columns":
        return {(i, j) for i, j in cells if i % 2 == 0}
    if pattern == "diagonal":
        return {(i, j) for i, j in cells if i == j % width}
    if pattern == "random":
        rng = random.Random(seed)
        return {cell for cell in cells if rng.random() < 0.5}
    raise ValueError(f"Padrão desconhecido: {pattern}")


def resp_grid_models() -> Iterator[Tuple[str, Model, Tuple[str, ...]]]:
    """
    Modelos reflexivos φ_grid que satisfazem ψ_resp^P globalmente: toros com
    valorações variadas e versões com ~-cliques obtidas por inflate_world.
    """
    patterns = ("empty", "full", "checkerboard", "rows", "columns", "diagonal")
    for width, height in ((8, 4), (16, 4)):
        for first in patterns:
            for second in ("empty", "checkerboard", "random"):
                base = {
                    "p": torus_pattern(width, height, first),
                    "q": torus_pattern(width, height, second, seed=width + len(first)),
                }
                name = f"toro {width}x{height} p={first} q={second}"
                yield name, make_torus_hat_model(width, height, base), ("p", "q")
    for seed in range(12):
        base = {
            "p": torus_pattern(16, 4, "random", seed=seed),
            "q": torus_pattern(16, 4, "random", seed=100 + seed),
            "r": torus_pattern(16, 4, "random", seed=200 + seed),
        }
        yield f"toro 16x4 aleatório (semente {seed})", make_torus_hat_model(16, 4, base), ("p", "q", "r")
    for seed in range(4):
        base = {"p": torus_pattern(8, 4, "random", seed=seed)}
        hat = make_torus_hat_model(8, 4, base)
        inflated = hat
        for w in (0, 5, 13, 21)[: seed + 1]:
            inflated = inflated.inflate_world(w)
        yield f"toro 8x4 com cliques (semente {seed})", inflated, ("p",)


class _KernelCache:
    """Memoiza eval_universal por frame (toros repetem o mesmo frame)."""

    def __init__(self):
        self._results: Dict[Tuple[str, Frame], bool] = {}

    def holds(self, frame: Frame, kernel_name: str) -> bool:
        key = (kernel_name, frame)
        if key not in self._results:
            self._results[key] = eval_universal(frame, builtin(kernel_name))
        return self._results[key]


def _report(name: str, started: float, cases: int, failures: List[CaseFailure]) -> VerifySuiteReport:
    report = VerifySuiteReport(
        suite=name, cases_run=cases, failures=failures,
        wall_time_seconds=time.monotonic() - started,
    )
    logger.info(f"Bateria {name}: {cases} casos, {len(failures)} falha(s), {report.wall_time_seconds:.1f}s")
    return report


def suite_lemma3(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Quocientes de frames reflexivos φ_grid têm as três propriedades estruturais."""
    started = time.monotonic()
    kernel = builtin("phi_grid")
    cases, failures = 0, []
    for n in range(1, options.lemma3_max_worlds + 1):
        for frame in reflexive_frames(n):
            if not eval_universal(frame, kernel):
                continue
            abstract, _ = quotient_frame(frame)
            structure = check_abstraction_structure(abstract)
            if not structure.all_hold():
                failures.append(_failure(
                    ports, cases, f"estrutura do quociente: {structure._asdict()}",
                    Model(frame=frame), TRUE, kernel=kernel,
                ))
            cases += 1
    return _report("lemma3", started, cases, failures)


def _quotient_formulas(options: SuiteOptions) -> List[ModalFormula]:
    formulas = formula_pool(("p",), 3)
    if options.seed is not None and options.random_cases:
        formulas += random_formulas(options.seed, options.random_cases, ("p",), 4)
    return formulas


def suite_lemma4(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Modelos reflexivos φ~eq que respeitam {p} e seus quocientes concordam."""
    started = time.monotonic()
    kernel = builtin("phi_eq")
    formulas = _quotient_formulas(options)
    cases, failures = 0, []
    for n in range(1, options.lemma4_max_worlds + 1):
        for frame in reflexive_frames(n):
            if not eval_universal(frame, kernel):
                continue
            partition = compute_partition(Model(frame=frame))
            for chosen in product((False, True), repeat=len(partition)):
                truth = set()
                for members, bit in zip(partition.classes, chosen):
                    if bit:
                        truth |= members
                m = Model(frame=frame, valuation={"p": frozenset(truth)})
                abstract = quotient(m, {"p"}, partition)
                class_of = partition.class_of
                for f in formulas:
                    cases += 1
                    original = satisfying_worlds(m, f)
                    lifted = satisfying_worlds(abstract, f)
                    for w in m.worlds:
                        if (w in original) != (class_of[w] in lifted):
                            failures.append(_failure(
                                ports, cases - 1,
                                f"check(m, w, ψ) difere de check(M/~, [w], ψ) com [w] = {class_of[w]}",
                                m, f, world=w, kernel=kernel,
                            ))
                            break
    return _report("lemma4", started, cases, failures)


def suite_lemma5(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """~ respeita P ∪ d8 e vizinhos não simétricos têm d8 deslocado de 2..6."""
    started = time.monotonic()
    cache = _KernelCache()
    kernel = builtin("phi_grid")
    cases, failures = 0, []
    for name, m, p_set in resp_grid_models():
        index = cases
        cases += 1
        resp = psi_resp(p_set)
        hypotheses = (
            m.is_reflexive()
            and cache.holds(m.frame, "phi_grid")
            and check_global(m, resp)
        )
        if not hypotheses:
            failures.append(_failure(
                ports, index, f"{name}: hipóteses não valem", m, resp, kernel=kernel,
            ))
            continue
        if not respects(m, set(p_set) | set(D8_BITS)):
            failures.append(_failure(
                ports, index, f"{name}: ~ não respeita P ∪ d8", m, resp, kernel=kernel,
            ))
            continue
        offsets = d8_offset_violations(m)
        if offsets:
            w, target, offset = offsets[0]
            failures.append(_failure(
                ports, index, f"{name}: mundo {target} com deslocamento d8 {offset}",
                m, resp, world=w, kernel=kernel,
            ))
    return _report("lemma5", started, cases, failures)


def suite_gbridge(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """g(□ξ) vale em w sse g(ξ) vale nos sucessores não simétricos de w."""
    started = time.monotonic()
    formulas = formula_pool(("p", "q"), 1)
    if options.seed is not None and options.random_cases:
        formulas += [
            f for f in random_formulas(options.seed, options.random_cases, ("p", "q"), 3)
            if modal_depth(f) <= 1
        ]
    cases, failures = 0, []
    for name, m, _ in resp_grid_models():
        for xi in formulas:
            cases += 1
            translated = translate_g(Box(xi))
            boxed = satisfying_worlds(m, translated)
            inner = satisfying_worlds(m, translate_g(xi))
            for w in m.worlds:
                expected = all(s in inner for s in nonsymmetric_successors(m, w))
                if (w in boxed) != expected:
                    failures.append(_failure(
                        ports, cases - 1,
                        f"{name}: ponte de g falhou para ξ = {ports.codec.render_formula(xi)}",
                        m, translated, world=w,
                    ))
                    break
    return _report("gbridge", started, cases, failures)


def _reference_models(codec: TextCodecInterface, width: int = 8, height: int = 4):
    for text, patterns in REFERENCE_CASES:
        base = {name: torus_pattern(width, height, pattern) for name, pattern in patterns.items()}
        yield codec.parse_formula(text), base


def suite_thm6_forward(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Toros que satisfazem ψ globalmente dão hat-M que satisfaz f(ψ) globalmente."""
    started = time.monotonic()
    cache = _KernelCache()
    cases, failures = 0, []
    candidates = list(_reference_models(ports.codec))
    # fórmulas do conjunto fixo com md ≤ 1 sobre as valorações de referência
    for f in formula_pool(("p",), 1):
        for pattern in ("empty", "checkerboard", "rows"):
            candidates.append((f, {"p": torus_pattern(8, 4, pattern)}))
    for psi, base in candidates:
        plain = make_torus_model(8, 4, base)
        if not check_global(plain, psi):
            continue
        cases += 1
        hat = make_torus_hat_model(8, 4, base)
        reduced = reduce_f(psi)
        if not cache.holds(hat.frame, "phi_grid"):
            failures.append(_failure(
                ports, cases - 1, "hat-M não satisfaz φ_grid", hat, reduced,
                kernel=builtin("phi_grid"),
            ))
            continue
        holding = satisfying_worlds(hat, reduced)
        failing = [w for w in hat.worlds if w not in holding]
        if failing:
            failures.append(_failure(
                ports, cases - 1, "hat-M não satisfaz f(ψ) globalmente", hat, reduced,
                world=failing[0],
            ))
    return _report("thm6-forward", started, cases, failures)


def roundtrip_failures(ports: SuitePorts, index: int, psi: ModalFormula, grid: Model,
                       k: int = 3) -> List[CaseFailure]:
    """
    Percorre a volta da redução a partir de um modelo de grade.

    Acrescenta o mundo universal, confere φ_final e localize(f(ψ)), extrai o
    submodelo gerado, aplica degrid e desdobra o fragmento (k+1)×(k+1), que
    precisa satisfazer φ_grid e ψ nos mundos interiores.

    Args:
        ports: Dependências das baterias
        index: Índice do caso nos contraexemplos
        psi: Fórmula de profundidade modal ≤ 1
        grid: Modelo φ_grid que satisfaz f(ψ) globalmente
        k: Tamanho do fragmento

    Returns:
        Lista vazia ou o contraexemplo da primeira etapa que falhou
    """
    reduced = reduce_f(psi)
    universal, w_u = add_universal_world(grid)
    phi_final = builtin("phi_final")
    if not eval_universal(universal.frame, phi_final):
        return [_failure(ports, index, "modelo com mundo universal não satisfaz φ_final",
                         universal, localize(reduced), w_u, phi_final)]
    if not check(universal, w_u, localize(reduced)):
        return [_failure(ports, index, "localize(f(ψ)) falha em w_u", universal, localize(reduced), w_u)]
    extracted, _ = extract_generated_submodel(universal, w_u)
    if not extracted.structurally_equal(grid):
        return [_failure(ports, index, "extração não inverte add_universal_world", extracted, reduced)]
    try:
        m0 = degrid(extracted, variables(psi))
        fragment = unfold_grid_fragment(m0, 0, k)
    except DomainException as e:
        return [_failure(ports, index, f"degrid/desdobramento falhou: {e}", extracted, reduced)]
    phi_grid = builtin("phi_grid")
    closed = fragment.with_frame(fragment.frame.reflexive_closure())
    if not eval_universal(closed.frame, phi_grid):
        return [_failure(ports, index, "fecho reflexivo do fragmento não satisfaz φ_grid", closed, psi,
                         kernel=phi_grid)]
    holding = satisfying_worlds(fragment, psi)
    outside = [w for w in interior_worlds(k) if w not in holding]
    if outside:
        return [_failure(ports, index, "ψ falha no interior do fragmento", fragment, psi, outside[0])]
    return []


def suite_thm8_roundtrip(options: SuiteOptions, ports: SuitePorts, k: int = 3) -> VerifySuiteReport:
    """Mundo universal, localização, extração, degrid e desdobramento."""
    started = time.monotonic()
    cases, failures = 0, []
    for psi, base in _reference_models(ports.codec):
        failures += roundtrip_failures(ports, cases, psi, make_torus_hat_model(8, 4, base), k)
        cases += 1
    return _report("thm8-roundtrip", started, cases, failures)


def suite_subframe(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Subframes induzidos de frames de um kernel básico satisfazem o kernel."""
    started = time.monotonic()
    cases, failures = 0, []
    for name in builtin_names():
        kernel = builtin(name)
        if not kernel.is_basic:
            continue
        accepted: Dict[int, Set[Frame]] = {}
        for n in range(1, options.subframe_max_worlds + 1):
            accepted[n] = {frame for frame in raw_frames(n) if eval_universal(frame, kernel)}
            for frame in sorted(accepted[n], key=lambda f: sorted(f.edges)):
                cases += 1
                for size in range(1, n):
                    bad = next(
                        (subset for subset in combinations(frame.worlds, size)
                         if frame.induced_subframe(subset) not in accepted[size]),
                        None,
                    )
                    if bad is not None:
                        failures.append(_failure(
                            ports, cases - 1,
                            f"{name}: subframe induzido por {list(bad)} de {sorted(frame.edges)} viola o kernel",
                            Model(frame=frame.induced_subframe(bad)), TRUE, kernel=kernel,
                        ))
                        break
    return _report("subframe", started, cases, failures)


def suite_oracle(options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Buscador principal e enumerador ingênuo concordam no status."""
    started = time.monotonic()
    cases, failures = 0, []
    for name in builtin_names():
        kernel = builtin(name)
        for f in formula_pool(("p",), options.oracle_max_depth):
            cases += 1
            first = ports.primary_finder.find_model(kernel, f, options.oracle_max_worlds, SearchMode.LOCAL)
            second = ports.oracle_finder.find_model(kernel, f, options.oracle_max_worlds, SearchMode.LOCAL)
            if first.status == second.status:
                continue
            description = f"{name}: {first.status.value} != {second.status.value}"
            witness = first if first.model is not None else second
            if witness.model is not None:
                failures.append(_failure(
                    ports, cases - 1, description, witness.model, f, witness.world, kernel,
                ))
            else:
                failures.append(_failure(
                    ports, cases - 1, f"{description} (nenhum modelo: frame vazio)",
                    Model(frame=Frame.create(0)), f, kernel=kernel,
                ))
    return _report("oracle", started, cases, failures)


SUITES: Dict[str, Callable[[SuiteOptions, SuitePorts], VerifySuiteReport]] = {
    "lemma3": suite_lemma3,
    "lemma4": suite_lemma4,
    "lemma5": suite_lemma5,
    "gbridge": suite_gbridge,
    "thm6-forward": suite_thm6_forward,
    "thm8-roundtrip": suite_thm8_roundtrip,
    "subframe": suite_subframe,
    "oracle": suite_oracle,
}


def run_suite(name: str, options: SuiteOptions, ports: SuitePorts) -> VerifySuiteReport:
    """Executa uma bateria pelo nome."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"Bateria desconhecida: {name} (disponíveis: {', '.join(SUITES)}, all)")
    logger.info(f"Iniciando bateria {name}")
    return suite(options, ports)


class VerificationUseCases:
    """Casos de uso das baterias de verificação."""

    def __init__(self, ports: SuitePorts, options: Optional[SuiteOptions] = None,
                 workers: Optional[int] = None):
        """
        Args:
            ports: Codec e buscadores usados pelas baterias
            options: Parâmetros das baterias (padrão: configuração)
            workers: Processos paralelos (padrão: VERIFY_WORKERS)
        """
        self.ports = ports
        self.options = options or SuiteOptions.from_settings()
        self.workers = settings.VERIFY_WORKERS if workers is None else workers

    @staticmethod
    def resolve(names: Sequence[str]) -> List[str]:
        """Expande "all" e valida os nomes."""
        resolved: List[str] = []
        for name in names:
            expanded = list(SUITE_NAMES) if name == "all" else [name]
            for item in expanded:
                if item not in SUITES:
                    raise UnknownSuiteError(f"Bateria desconhecida: {item}")
                if item not in resolved:
                    resolved.append(item)
        return resolved

    def verify(self, name: str) -> VerifySuiteReport:
        return run_suite(name, self.options, self.ports)

    async def verify_many(self, names: Sequence[str]) -> List[VerifySuiteReport]:
        """
        Executa várias baterias, em paralelo se workers > 1.

        Returns:
            Relatórios na ordem dos nomes pedidos
        """
        names = self.resolve(names)
        if self.workers <= 1:
            return [run_suite(name, self.options, self.ports) for name in names]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = [
                loop.run_in_executor(executor, run_suite, name, self.options, self.ports)
                for name in names
            ]
            return list(await asyncio.gather(*futures))

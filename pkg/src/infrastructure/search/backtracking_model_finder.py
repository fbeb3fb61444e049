# src/infrastructure/search/backtracking_model_finder.py
"""
Busca limitada de modelos: frames em ordem lexicográfica filtrados pelo
kernel e, para cada frame aceito, backtracking sobre as células (mundo,
variável) relevantes com poda pela rotulação trivalente.
"""
import logging
import math
import multiprocessing
import time
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from src.application.interfaces.services.model_finder_interface import ModelFinderInterface
from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.services.fo_evaluator import eval_universal
from src.domain.services.model_checker import check, check_global, partial_labeling
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula, modal_depth, variables
from src.domain.value_objects.search_outcome import (
    SearchMode, SearchOutcome, SearchStats, SearchStatus,
)
from src.domain.services.frame_enumerator import is_canonical, raw_frames

logger = logging.getLogger(__name__)

Cell = Tuple[int, str]


@dataclass
class _Hit:
    model: Model
    world: Optional[int]


class _Aborted(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _relevant_worlds(frame: Frame, target: int, depth: int) -> List[int]:
    """Mundos a até `depth` passos do alvo, em ordem de busca em largura."""
    order = [target]
    seen = {target}
    layer = [target]
    for _ in range(depth):
        nxt = []
        for w in layer:
            for s in frame.successors(w):
                if s not in seen:
                    seen.add(s)
                    order.append(s)
                    nxt.append(s)
        layer = nxt
    return order


class _ValuationSearch:
    """Backtracking de valorações sobre um frame fixo."""

    def __init__(self, frame: Frame, formula: ModalFormula, names: Sequence[str],
                 depth: int, stats: SearchStats):
        self.frame = frame
        self.formula = formula
        self.names = list(names)
        self.depth = depth
        self.stats = stats

    def _labels(self, true_masks: Dict[str, int], false_masks: Dict[str, int]):
        partial = {name: (true_masks[name], false_masks[name]) for name in self.names}
        return partial_labeling(self.frame, partial, self.formula)

    def solve(self, cells: List[Cell], goal_mask: int) -> Optional[Dict[str, int]]:
        """
        Procura uma valoração em que a fórmula vale certamente em goal_mask.

        Células fora de `cells` ficam falsas desde o início.
        """
        full = self.frame.full_mask
        true_masks = {name: 0 for name in self.names}
        open_masks = {name: 0 for name in self.names}
        for w, name in cells:
            open_masks[name] |= 1 << w
        false_masks = {name: full & ~open_masks[name] for name in self.names}

        def search(position: int) -> bool:
            self.stats.models_examined += 1
            certain_true, certain_false = self._labels(true_masks, false_masks)
            if certain_false & goal_mask:
                return False
            if (certain_true & goal_mask) == goal_mask:
                return True
            if position == len(cells):
                return False
            w, name = cells[position]
            bit = 1 << w
            false_masks[name] |= bit
            if search(position + 1):
                return True
            false_masks[name] &= ~bit
            true_masks[name] |= bit
            if search(position + 1):
                return True
            true_masks[name] &= ~bit
            return False

        if search(0):
            return dict(true_masks)
        return None

    def local(self, target: int) -> Optional[Dict[str, int]]:
        worlds = _relevant_worlds(self.frame, target, self.depth)
        cells = [(w, name) for w in worlds for name in self.names]
        return self.solve(cells, 1 << target)

    def global_(self) -> Optional[Dict[str, int]]:
        cells = [(w, name) for w in self.frame.worlds for name in self.names]
        return self.solve(cells, self.frame.full_mask)


def _masks_to_valuation(masks: Dict[str, int]) -> Dict[str, List[int]]:
    return {name: [w for w in range(mask.bit_length()) if mask >> w & 1] for name, mask in masks.items()}


def search_frames(kernel: FOKernel, formula: ModalFormula, n: int, mode: SearchMode,
                  prefix: Sequence[bool] = (), canonical_only: bool = False,
                  frame_limit: int = 0, deadline: Optional[float] = None,
                  frames_before: int = 0) -> Tuple[Optional[_Hit], SearchStats, Optional[str]]:
    """
    Examina os frames de tamanho n (com o prefixo dado) em ordem.

    Returns:
        (primeiro acerto ou None, estatísticas, motivo do aborto ou None)
    """
    stats = SearchStats()
    names = sorted(variables(formula))
    depth = modal_depth(formula)
    for frame in raw_frames(n, prefix):
        if frame_limit and frames_before + stats.frames_examined >= frame_limit:
            return None, stats, f"limite de {frame_limit} frames atingido"
        if deadline is not None and time.monotonic() > deadline:
            return None, stats, "limite de tempo atingido"
        stats.frames_examined += 1
        if canonical_only and not is_canonical(frame):
            continue
        if not eval_universal(frame, kernel):
            continue
        stats.frames_accepted += 1
        search = _ValuationSearch(frame, formula, names, depth, stats)
        if mode == SearchMode.GLOBAL:
            masks = search.global_()
            if masks is not None:
                return _Hit(Model.create(n, frame.edges, _masks_to_valuation(masks)), None), stats, None
        else:
            for target in frame.worlds:
                masks = search.local(target)
                if masks is not None:
                    model = Model.create(n, frame.edges, _masks_to_valuation(masks))
                    return _Hit(model, target), stats, None
    return None, stats, None


def _search_task(args) -> Tuple[Optional[_Hit], SearchStats, Optional[str]]:
    kernel, formula, n, mode, prefix, canonical_only, time_limit = args
    deadline = time.monotonic() + time_limit if time_limit else None
    return search_frames(kernel, formula, n, mode, prefix, canonical_only, 0, deadline)


class BacktrackingModelFinder(ModelFinderInterface):
    """Buscador principal de modelos limitados."""

    def __init__(self,
                 frame_limit: Optional[int] = None,
                 time_limit_seconds: Optional[float] = None,
                 workers: Optional[int] = None,
                 canonical_only: Optional[bool] = None):
        """
        Inicializa o buscador.

        Args:
            frame_limit: Máximo de frames examinados (0 = sem limite)
            time_limit_seconds: Tempo máximo (0 = sem limite)
            workers: Processos paralelos (1 = sequencial)
            canonical_only: Descarta frames não canônicos (preserva o status)
        """
        self.frame_limit = settings.SEARCH_FRAME_LIMIT if frame_limit is None else frame_limit
        self.time_limit = settings.SEARCH_TIME_LIMIT_SECONDS if time_limit_seconds is None else time_limit_seconds
        self.workers = settings.SEARCH_WORKERS if workers is None else workers
        self.canonical_only = settings.SEARCH_CANONICAL_ONLY if canonical_only is None else canonical_only

    def find_model(self, kernel: FOKernel, formula: ModalFormula,
                   max_worlds: int, mode: SearchMode = SearchMode.LOCAL) -> SearchOutcome:
        if max_worlds < 1:
            raise ValueError("max_worlds deve ser pelo menos 1")
        mode = SearchMode(mode)
        started = time.monotonic()
        deadline = started + self.time_limit if self.time_limit else None
        stats = SearchStats()
        outcome = SearchOutcome(status=SearchStatus.EXHAUSTED, stats=stats, max_worlds=max_worlds)

        for n in range(1, max_worlds + 1):
            logger.info(f"Buscando modelos com {n} mundo(s) ({mode.value})")
            if self.workers > 1 and n > 1:
                hit, reason = self._parallel(kernel, formula, n, mode, stats, deadline)
            else:
                hit, partial, reason = search_frames(
                    kernel, formula, n, mode, (), self.canonical_only,
                    self.frame_limit, deadline, stats.frames_examined,
                )
                stats.merge(partial)
            if hit is not None:
                self._revalidate(kernel, formula, hit, mode)
                outcome.status = SearchStatus.FOUND
                outcome.model = hit.model
                outcome.world = hit.world
                break
            if reason is not None:
                logger.warning(f"Busca abortada com {n} mundo(s): {reason}")
                outcome.status = SearchStatus.ABORTED
                outcome.reason = reason
                break

        stats.elapsed_seconds = time.monotonic() - started
        logger.info(
            f"Busca terminou: {outcome.status.value}, {stats.frames_examined} frames, "
            f"{stats.models_examined} nós de valoração, {stats.elapsed_seconds:.2f}s"
        )
        return outcome

    def _parallel(self, kernel, formula, n, mode, stats, deadline):
        prefix_length = min(n * n, max(1, math.ceil(math.log2(self.workers * 4))))
        prefixes = list(product((False, True), repeat=prefix_length))
        remaining = deadline - time.monotonic() if deadline is not None else 0
        tasks = [
            (kernel, formula, n, mode, prefix, self.canonical_only, remaining)
            for prefix in prefixes
        ]
        with multiprocessing.Pool(processes=self.workers) as pool:
            # imap preserva a ordem dos prefixos, que é a ordem de enumeração
            for hit, partial, reason in pool.imap(_search_task, tasks):
                stats.merge(partial)
                if hit is not None:
                    pool.terminate()
                    return hit, None
                if reason is not None:
                    pool.terminate()
                    return None, reason
                if self.frame_limit and stats.frames_examined >= self.frame_limit:
                    pool.terminate()
                    return None, f"limite de {self.frame_limit} frames atingido"
        return None, None

    @staticmethod
    def _revalidate(kernel: FOKernel, formula: ModalFormula, hit: _Hit, mode: SearchMode) -> None:
        """Confere a testemunha com avaliações independentes da busca."""
        if not eval_universal(hit.model.frame, kernel):
            raise RuntimeError("Testemunha não satisfaz o kernel")
        if mode == SearchMode.GLOBAL:
            valid = check_global(hit.model, formula)
        else:
            valid = check(hit.model, hit.world, formula)
        if not valid:
            raise RuntimeError("Testemunha não satisfaz a fórmula")

# src/infrastructure/search/naive_model_finder.py
"""
Buscador de referência, escrito de forma independente do principal: frames
por contagem binária (célula (0, 0) menos significativa), kernel avaliado por
tensores numpy, produto completo de valorações e verificação recursiva.
"""
import logging
import time
from itertools import product

from src.application.interfaces.services.model_finder_interface import ModelFinderInterface
from src.domain.entities.frame import Frame
from src.domain.entities.model import Model
from src.domain.services.model_checker import check
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula, variables
from src.domain.value_objects.search_outcome import (
    SearchMode, SearchOutcome, SearchStats, SearchStatus,
)
from src.infrastructure.logic.tensor_fo_evaluator import eval_universal_tensor

logger = logging.getLogger(__name__)


class NaiveModelFinder(ModelFinderInterface):
    """Enumerador ingênuo usado como oráculo do buscador principal."""

    def find_model(self, kernel: FOKernel, formula: ModalFormula,
                   max_worlds: int, mode: SearchMode = SearchMode.LOCAL) -> SearchOutcome:
        if max_worlds < 1:
            raise ValueError("max_worlds deve ser pelo menos 1")
        mode = SearchMode(mode)
        started = time.monotonic()
        stats = SearchStats()
        names = sorted(variables(formula))

        for n in range(1, max_worlds + 1):
            cells = [(i, j) for i in range(n) for j in range(n)]
            for code in range(2 ** (n * n)):
                stats.frames_examined += 1
                frame = Frame.create(n, [cell for b, cell in enumerate(cells) if code >> b & 1])
                if not eval_universal_tensor(frame, kernel):
                    continue
                stats.frames_accepted += 1
                slots = [(name, w) for name in names for w in range(n)]
                for bits in product((True, False), repeat=len(slots)):
                    stats.models_examined += 1
                    valuation = {name: set() for name in names}
                    for (name, w), bit in zip(slots, bits):
                        if bit:
                            valuation[name].add(w)
                    model = Model.create(n, frame.edges, valuation)
                    holding = [w for w in range(n) if check(model, w, formula)]
                    if mode == SearchMode.GLOBAL and len(holding) == n:
                        stats.elapsed_seconds = time.monotonic() - started
                        return SearchOutcome(SearchStatus.FOUND, model, None, stats, max_worlds)
                    if mode == SearchMode.LOCAL and holding:
                        stats.elapsed_seconds = time.monotonic() - started
                        return SearchOutcome(SearchStatus.FOUND, model, holding[0], stats, max_worlds)

        stats.elapsed_seconds = time.monotonic() - started
        logger.debug(f"Oráculo esgotou {stats.frames_examined} frames")
        return SearchOutcome(SearchStatus.EXHAUSTED, None, None, stats, max_worlds)

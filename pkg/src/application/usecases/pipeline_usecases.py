# src/application/usecases/pipeline_usecases.py
"""
Pipeline de ponta a ponta da redução sobre um toro: ψ → hat-M → f(ψ) →
mundo universal → extração → degrid → fragmento de grade.
"""
import logging
from typing import Callable, Iterable, Mapping, Optional, Tuple

from config import settings
from src.application.dtos.reports import PipelineReport, StageVerdict
from src.application.interfaces.services.text_codec_interface import TextCodecInterface
from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import DomainException, PipelineStageError
from src.domain.services.builtin_kernels import builtin
from src.domain.services.fo_evaluator import find_violation
from src.domain.services.grid_encoding import (
    add_universal_world, degrid, extract_generated_submodel, interior_worlds,
    localize, make_torus_hat_model, make_torus_model, reduce_f, unfold_grid_fragment,
)
from src.domain.services.model_checker import check, satisfying_worlds
from src.domain.value_objects.modal_formula import ModalFormula, modal_depth, variables

logger = logging.getLogger(__name__)

Coordinate = Tuple[int, int]

INTERIOR_STAGE = "interior global satisfaction"


def _first_failing(m: Model, f: ModalFormula, worlds: Optional[Iterable[int]] = None) -> Optional[int]:
    holding = satisfying_worlds(m, f)
    for w in (m.worlds if worlds is None else worlds):
        if w not in holding:
            return w
    return None


class PipelineUseCases:
    """Executa as etapas da redução e para na primeira que falhar."""

    def __init__(self, codec: TextCodecInterface, literal_scoping: Optional[bool] = None):
        """
        Args:
            codec: Impressão da fórmula no relatório
            literal_scoping: Leitura literal de ψ_resp (padrão: configuração)
        """
        self.codec = codec
        self.literal_scoping = (
            settings.PSI_RESP_LITERAL_SCOPING if literal_scoping is None else literal_scoping
        )

    def run(self, psi: ModalFormula, width: int, height: int,
            base_valuation: Optional[Mapping[str, Iterable[Coordinate]]] = None,
            k: Optional[int] = None) -> PipelineReport:
        """
        Executa o pipeline completo.

        Args:
            psi: Fórmula de profundidade modal ≤ 1
            width: Largura do toro
            height: Altura do toro
            base_valuation: Valoração do toro por células (i, j)
            k: Tamanho do fragmento desdobrado (padrão: PIPELINE_DEFAULT_K)

        Returns:
            Relatório com o veredito de cada etapa executada
        """
        k = settings.PIPELINE_DEFAULT_K if k is None else k
        base_valuation = base_valuation or {}
        report = PipelineReport(formula_text=self.codec.render_formula(psi), width=width, height=height, k=k)
        state = {}

        def depth():
            if modal_depth(psi) > 1:
                raise PipelineStageError("modal-depth", f"profundidade modal {modal_depth(psi)} > 1")
            return f"profundidade modal {modal_depth(psi)}"

        def torus():
            plain = make_torus_model(width, height, base_valuation)
            failing = _first_failing(plain, psi)
            if failing is not None:
                raise PipelineStageError("torus-global", "ψ não vale globalmente no toro", failing)
            return f"{plain.world_count} mundos"

        def hat_grid():
            hat = make_torus_hat_model(width, height, base_valuation)
            state["hat"] = hat
            violation = find_violation(hat.frame, builtin("phi_grid"))
            if violation is not None:
                raise PipelineStageError("hat-phi-grid", f"φ_grid violado por {violation}", violation[0])
            return "φ_grid vale"

        def hat_reduced():
            state["reduced"] = reduce_f(psi, literal_scoping=self.literal_scoping)
            failing = _first_failing(state["hat"], state["reduced"])
            if failing is not None:
                raise PipelineStageError("hat-f-global", "f(ψ) não vale globalmente em hat-M", failing)
            return f"|f(ψ)| com profundidade modal {modal_depth(state['reduced'])}"

        def universal():
            universal_model, w_u = add_universal_world(state["hat"])
            state["universal"], state["w_u"] = universal_model, w_u
            violation = find_violation(universal_model.frame, builtin("phi_final"))
            if violation is not None:
                raise PipelineStageError("universal-phi-final", f"φ_final violado por {violation}", violation[0])
            return f"w_u = {w_u}"

        def localized():
            if not check(state["universal"], state["w_u"], localize(state["reduced"])):
                raise PipelineStageError("localized", "localize(f(ψ)) falha em w_u", state["w_u"])
            return "vale em w_u"

        def extraction():
            extracted, _ = extract_generated_submodel(state["universal"], state["w_u"])
            if not extracted.structurally_equal(state["hat"]):
                raise PipelineStageError("extraction", "o submodelo extraído difere de hat-M")
            state["extracted"] = extracted
            return f"{extracted.world_count} mundos"

        def degridding():
            state["m0"] = degrid(state["extracted"], variables(psi))
            return f"{state['m0'].world_count} classes"

        def unfolding():
            state["fragment"] = unfold_grid_fragment(state["m0"], 0, k)
            return f"fragmento {k + 1}x{k + 1}"

        def interior():
            failing = _first_failing(state["fragment"], psi, interior_worlds(k))
            if failing is not None:
                raise PipelineStageError(INTERIOR_STAGE, "ψ falha num mundo interior", failing)
            return f"{len(interior_worlds(k))} mundos interiores"

        stages: Tuple[Tuple[str, Callable[[], str]], ...] = (
            ("modal-depth", depth),
            ("torus-global", torus),
            ("hat-phi-grid", hat_grid),
            ("hat-f-global", hat_reduced),
            ("universal-phi-final", universal),
            ("localized", localized),
            ("extraction", extraction),
            ("degrid", degridding),
            ("unfold", unfolding),
            (INTERIOR_STAGE, interior),
        )
        for name, stage in stages:
            try:
                detail = stage()
            except DomainException as e:
                report.stages.append(StageVerdict(
                    stage=name, passed=False, detail=str(e), world=getattr(e, "world", None),
                ))
                logger.info(f"Etapa {name}: falhou ({e})")
                break
            report.stages.append(StageVerdict(stage=name, passed=True, detail=detail))
            logger.info(f"Etapa {name}: ok ({detail})")
        return report

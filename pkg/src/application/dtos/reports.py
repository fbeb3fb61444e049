# src/application/dtos/reports.py
from typing import List, Optional

from pydantic import BaseModel, Field


class CaseFailure(BaseModel):
    """
    DTO de um caso que falhou, com contraexemplo reproduzível.

    Reler model_text, formula_text e kernel_text e verificar a fórmula em
    `world` (ou globalmente) e o kernel no frame reproduz formula_holds e
    kernel_holds.
    """

    case_index: int = Field(..., description="Índice canônico do caso na bateria")
    description: str = Field(..., description="O que foi verificado")
    model_text: str = Field(..., description="Modelo no formato de arquivo")
    formula_text: str = Field(..., description="Fórmula no formato textual")
    world: Optional[int] = Field(None, description="Mundo avaliado; None para satisfação global")
    formula_holds: bool = Field(..., description="Veredito da fórmula no modelo")
    kernel_text: Optional[str] = Field(None, description="Kernel verificado no frame")
    kernel_holds: Optional[bool] = Field(None, description="Veredito do kernel no frame")

    class Config:
        schema_extra = {
            "example": {
                "case_index": 12,
                "description": "check(m, w, ψ) != check(M/~, [w], ψ)",
                "model_text": "model\nworlds 1\nedge 0 0\nend\n",
                "formula_text": "[]p",
                "world": 0,
                "formula_holds": False,
            }
        }


class VerifySuiteReport(BaseModel):
    """DTO do resultado de uma bateria de verificação."""

    suite: str
    cases_run: int = 0
    failures: List[CaseFailure] = Field(default_factory=list)
    wall_time_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


class StageVerdict(BaseModel):
    """DTO do veredito de uma etapa do pipeline."""

    stage: str
    passed: bool
    detail: str = ""
    world: Optional[int] = None


class PipelineReport(BaseModel):
    """DTO do relatório completo do pipeline de redução."""

    formula_text: str
    width: int
    height: int
    k: int
    stages: List[StageVerdict] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.stages) and all(stage.passed for stage in self.stages)

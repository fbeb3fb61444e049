# src/infrastructure/parsing/text_codec.py
from typing import Optional

from src.application.interfaces.services.text_codec_interface import TextCodecInterface
from src.domain.entities.model import Model
from src.domain.value_objects.fo_kernel import FOKernel
from src.domain.value_objects.modal_formula import ModalFormula
from src.infrastructure.parsing import fo_parser, modal_parser
from src.infrastructure.persistence import model_file_format


class TextCodec(TextCodecInterface):
    """Formatos textuais do projeto: gramáticas lark e arquivo de modelo."""

    def parse_formula(self, text: str) -> ModalFormula:
        return modal_parser.parse_modal(text)

    def render_formula(self, formula: ModalFormula) -> str:
        return modal_parser.render_modal(formula)

    def parse_kernel(self, text: str, name: Optional[str] = None) -> FOKernel:
        return fo_parser.parse_kernel(text, name)

    def render_kernel(self, kernel: FOKernel) -> str:
        return fo_parser.render_kernel(kernel)

    def parse_model(self, text: str) -> Model:
        return model_file_format.parse_model(text)

    def render_model(self, model: Model) -> str:
        return model_file_format.render_model(model)

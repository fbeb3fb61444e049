# src/interfaces/cli/cli_app.py
import argparse
import asyncio
import json
import logging
import os
import sys
from typing import List, Optional, Sequence

# Adiciona o diretório raiz ao sys.path para importações relativas funcionarem
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../..')))

from config import settings
from src.application.usecases.model_usecases import ModelUseCases
from src.application.usecases.pipeline_usecases import PipelineUseCases
from src.application.usecases.reduction_usecases import ReductionUseCases
from src.application.usecases.search_usecases import SearchUseCases
from src.application.usecases.verification_usecases import (
    SUITE_NAMES, SuiteOptions, SuitePorts, VerificationUseCases,
)
from src.domain.exceptions.domain_exceptions import DomainException
from src.domain.value_objects.modal_formula import modal_depth, variables
from src.domain.value_objects.search_outcome import SearchMode, SearchStatus
from src.infrastructure.logging.colored_formatter import configure_logging
from src.infrastructure.parsing.text_codec import TextCodec
from src.infrastructure.parsing.fo_parser import render_kernel
from src.infrastructure.parsing.modal_parser import render_modal
from src.infrastructure.persistence.file_model_repository import FileModelRepository
from src.infrastructure.persistence.model_file_format import render_model
from src.infrastructure.search.backtracking_model_finder import BacktrackingModelFinder
from src.infrastructure.search.naive_model_finder import NaiveModelFinder

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class WorkbenchCLI:
    """Aplicação CLI da bancada de lógica modal."""

    def __init__(self, out=None, err=None):
        """
        Inicializa a aplicação CLI.

        Args:
            out: Fluxo de saída dos resultados (padrão: stdout)
            err: Fluxo das mensagens de erro (padrão: stderr)
        """
        self.out = out or sys.stdout
        self.err = err or sys.stderr

        # Repositórios e formatos textuais
        self.model_repository = FileModelRepository()
        self.codec = TextCodec()

        # Casos de uso
        self.model_usecases = ModelUseCases(self.model_repository, self.codec)
        self.reduction_usecases = ReductionUseCases()
        self.pipeline_usecases = PipelineUseCases(self.codec)

    def print(self, text: str = "") -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def emit_model(self, model, output: Optional[str], class_map=None) -> None:
        """Escreve o modelo no arquivo pedido ou na saída padrão."""
        if output:
            self.model_usecases.save_model(model, output, class_map)
            logger.info(f"Modelo gravado em {output}")
        else:
            self.print(render_model(model, class_map))

    # Subcomandos

    def cmd_parse(self, args) -> int:
        formula = self.model_usecases.read_formula(args.formula)
        self.print(render_modal(formula))
        self.print(f"# profundidade modal: {modal_depth(formula)}")
        self.print(f"# variáveis: {' '.join(sorted(variables(formula))) or '-'}")
        return EXIT_OK

    def cmd_render(self, args) -> int:
        if not (args.formula or args.model or args.fo):
            raise DomainException("Informe --formula, --model ou --fo")
        if args.formula:
            self.print(render_modal(self.model_usecases.read_formula(args.formula)))
        if args.fo:
            self.out.write(render_kernel(self.model_usecases.read_kernel(args.fo)))
        if args.model:
            self.out.write(render_model(self.model_usecases.load_model(args.model)))
        return EXIT_OK

    def cmd_check(self, args) -> int:
        model = self.model_usecases.load_model(args.model)
        formula = self.model_usecases.read_formula(args.formula)
        holds, failing = self.model_usecases.check_formula(model, formula, args.world)
        if holds:
            self.print("true")
            return EXIT_OK
        where = f" (falha nos mundos {' '.join(map(str, failing))})" if args.world is None else ""
        self.print(f"false{where}")
        return EXIT_NEGATIVE

    def cmd_frame_check(self, args) -> int:
        model = self.model_usecases.load_model(args.model)
        kernel = self.model_usecases.read_kernel(args.fo)
        violation = self.model_usecases.frame_check(model, kernel)
        if violation is None:
            self.print("true")
            return EXIT_OK
        assignment = " ".join(f"x{i}={w}" for i, w in enumerate(violation, start=1))
        self.print(f"false: {assignment}")
        return EXIT_NEGATIVE

    def cmd_quotient(self, args) -> int:
        model = self.model_usecases.load_model(args.model)
        p_set = [name for name in args.vars.split(",") if name]
        abstract, partition = self.model_usecases.quotient_model(model, p_set)
        self.emit_model(abstract, args.output, [sorted(members) for members in partition.classes])
        return EXIT_OK

    def cmd_reduce(self, args) -> int:
        psi = self.model_usecases.read_formula(args.formula)
        self.print(render_modal(self.reduction_usecases.reduce(psi, local=args.local)))
        if args.emit_fo:
            self.out.write(render_kernel(self.reduction_usecases.target_kernel()))
        return EXIT_OK

    def cmd_make_torus(self, args) -> int:
        model = self.model_usecases.make_torus(args.width, args.height, args.val_file, hat=not args.plain)
        self.emit_model(model, args.output)
        return EXIT_OK

    def cmd_find(self, args) -> int:
        kernel = self.model_usecases.read_kernel(args.fo)
        formula = self.model_usecases.read_formula(args.formula)
        finder = BacktrackingModelFinder(
            frame_limit=args.frame_limit,
            time_limit_seconds=args.time_limit,
            workers=args.workers,
            canonical_only=True if args.canonical else None,
        )
        outcome = SearchUseCases(finder).find(kernel, formula, args.max_worlds, SearchMode(args.mode))
        stats = outcome.stats
        self.print(
            f"{outcome.status.value} (frames {stats.frames_examined}, aceitos {stats.frames_accepted}, "
            f"{stats.elapsed_seconds:.2f}s)"
        )
        if outcome.status == SearchStatus.FOUND:
            if outcome.world is not None:
                self.print(f"# mundo: {outcome.world}")
            self.emit_model(outcome.model, args.emit_model)
            return EXIT_OK
        if outcome.status == SearchStatus.ABORTED:
            self.print(f"# motivo: {outcome.reason}")
            return EXIT_ERROR
        return EXIT_NEGATIVE

    def cmd_verify(self, args) -> int:
        options = SuiteOptions.from_settings(seed=args.seed, random_cases=args.random_cases)
        ports = SuitePorts(
            codec=self.codec,
            primary_finder=BacktrackingModelFinder(
                frame_limit=0, time_limit_seconds=0, workers=1, canonical_only=False,
            ),
            oracle_finder=NaiveModelFinder(),
        )
        usecases = VerificationUseCases(ports, options, workers=args.workers)
        reports = asyncio.run(usecases.verify_many(args.suites))
        if args.json:
            self.print(json.dumps([json.loads(report.json()) for report in reports], indent=2, ensure_ascii=False))
        else:
            for report in reports:
                verdict = "ok" if report.passed else "FALHOU"
                self.print(
                    f"{report.suite:<16} {verdict:<7} casos={report.cases_run:<6} "
                    f"falhas={len(report.failures):<4} {report.wall_time_seconds:.1f}s"
                )
                for failure in report.failures[: args.show_failures]:
                    self.print(f"  caso {failure.case_index}: {failure.description}")
                    self.print(f"    fórmula: {failure.formula_text} (vale: {failure.formula_holds})")
                    if failure.world is not None:
                        self.print(f"    mundo: {failure.world}")
                    if failure.kernel_text is not None:
                        self.print(f"    kernel (vale: {failure.kernel_holds}): {' '.join(failure.kernel_text.split())}")
                    for line in failure.model_text.splitlines():
                        self.print(f"    {line}")
        return EXIT_OK if all(report.passed for report in reports) else EXIT_NEGATIVE

    def cmd_pipeline(self, args) -> int:
        psi = self.model_usecases.read_formula(args.formula)
        base = {}
        if args.val_file:
            base = self.model_repository.load_torus_valuation(args.val_file)
        report = self.pipeline_usecases.run(psi, args.width, args.height, base, args.k)
        if args.json:
            self.print(report.json(indent=2, ensure_ascii=False))
        else:
            self.print(f"ψ = {report.formula_text}  toro {report.width}x{report.height}  k={report.k}")
            for stage in report.stages:
                verdict = "ok" if stage.passed else "FALHOU"
                world = f" [mundo {stage.world}]" if stage.world is not None else ""
                self.print(f"  {stage.stage:<30} {verdict:<7} {stage.detail}{world}")
        return EXIT_OK if report.passed else EXIT_NEGATIVE

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Executa um subcomando e devolve o código de saída."""
        parser = build_parser()
        args = parser.parse_args(argv)
        handler = getattr(self, "cmd_" + args.command.replace("-", "_"))
        try:
            return handler(args)
        except DomainException as e:
            self.err.write(f"erro: {e}\n")
            return EXIT_ERROR
        except KeyboardInterrupt:
            self.err.write("interrompido\n")
            return EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modal-workbench", description=settings.APP_NAME)
    commands = parser.add_subparsers(dest="command", required=True)

    command = commands.add_parser("parse", help="Lê uma fórmula e imprime a forma canônica")
    command.add_argument("--formula", required=True, help="Fórmula em texto ou @arquivo")

    command = commands.add_parser("render", help="Reescreve fórmula, kernel ou modelo na forma canônica")
    command.add_argument("--formula")
    command.add_argument("--fo")
    command.add_argument("--model")

    command = commands.add_parser("check", help="Verifica uma fórmula num modelo")
    command.add_argument("--model", required=True)
    command.add_argument("--formula", required=True)
    command.add_argument("--world", type=int, help="Mundo de avaliação (padrão: global)")

    command = commands.add_parser("frame-check", help="Verifica um kernel de primeira ordem no frame")
    command.add_argument("--model", required=True)
    command.add_argument("--fo", required=True, help="builtin:NOME, @arquivo ou corpo em linha")

    command = commands.add_parser("quotient", help="Quociente M/~ sobre um conjunto de variáveis")
    command.add_argument("--model", required=True)
    command.add_argument("--vars", default="", help="Variáveis de P separadas por vírgula")
    command.add_argument("--output")

    command = commands.add_parser("reduce", help="Aplica a redução f(ψ)")
    command.add_argument("--formula", required=True)
    command.add_argument("--local", action="store_true", help="Aplica u ∧ □¬u ∧ □·")
    command.add_argument("--emit-fo", action="store_true", help="Imprime também o kernel φ_final")

    command = commands.add_parser("make-torus", help="Constrói o toro hat-M (ou o toro simples)")
    command.add_argument("--width", type=int, required=True)
    command.add_argument("--height", type=int, required=True)
    command.add_argument("--val-file")
    command.add_argument("--plain", action="store_true", help="Toro sem laços nem d8")
    command.add_argument("--output")

    command = commands.add_parser("find", help="Busca limitada de modelos")
    command.add_argument("--fo", required=True)
    command.add_argument("--formula", required=True)
    command.add_argument("--max-worlds", type=int, default=None)
    command.add_argument("--mode", choices=[m.value for m in SearchMode], default=SearchMode.LOCAL.value)
    command.add_argument("--emit-model")
    command.add_argument("--workers", type=int, default=None)
    command.add_argument("--frame-limit", type=int, default=None)
    command.add_argument("--time-limit", type=float, default=None)
    command.add_argument("--canonical", action="store_true", help="Descarta frames isomorfos")

    command = commands.add_parser("verify", help="Executa baterias de verificação")
    command.add_argument("suites", nargs="+", choices=list(SUITE_NAMES) + ["all"])
    command.add_argument("--json", action="store_true")
    command.add_argument("--seed", type=int, default=None)
    command.add_argument("--random-cases", type=int, default=None)
    command.add_argument("--workers", type=int, default=None)
    command.add_argument("--show-failures", type=int, default=3)

    command = commands.add_parser("pipeline", help="Pipeline completo da redução sobre um toro")
    command.add_argument("--formula", required=True)
    command.add_argument("--width", type=int, default=8)
    command.add_argument("--height", type=int, default=4)
    command.add_argument("--val-file")
    command.add_argument("--k", type=int, default=None)
    command.add_argument("--json", action="store_true")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging(settings.LOG_LEVEL, settings.LOG_COLORS)
    return WorkbenchCLI().run(argv)


if __name__ == "__main__":
    sys.exit(main())

# src/infrastructure/persistence/model_file_format.py
"""
Formatos de arquivo linha a linha: modelos de Kripke e valorações de toro.

    model                       torus-val
    worlds <n>                  val <var> <i>,<j> [<i>,<j> ...]
    edge <i> <j>                end
    val <var> <i> [<i> ...]
    end

`#` inicia comentário. A leitura é estrita: diretivas desconhecidas, índices
fora do intervalo e conteúdo após `end` são erros.
"""
import logging
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import regex

from src.domain.entities.model import Model
from src.domain.exceptions.domain_exceptions import DomainException, ModelFormatError
from src.domain.value_objects.modal_formula import KEYWORDS

logger = logging.getLogger(__name__)

IDENT = regex.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")
NATURAL = regex.compile(r"\d+")
CELL = regex.compile(r"(\d+),(\d+)")
CLASS_LINE = regex.compile(r"#\s*class\s+(\d+)\s*:\s*((?:\d+\s*)*)$")

Coordinate = Tuple[int, int]


def _directives(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _natural(token: str, number: int) -> int:
    if not NATURAL.fullmatch(token):
        raise ModelFormatError(f"Índice inválido: '{token}'", number)
    return int(token)


def _identifier(token: str, number: int) -> str:
    if not IDENT.fullmatch(token) or token in KEYWORDS:
        raise ModelFormatError(f"Nome de variável inválido: '{token}'", number)
    return token


def parse_model(text: str) -> Model:
    """
    Lê um modelo no formato textual.

    Args:
        text: Conteúdo do arquivo

    Returns:
        O modelo

    Raises:
        ModelFormatError: com o número da linha problemática
    """
    world_count: Optional[int] = None
    edges: Set[Tuple[int, int]] = set()
    valuation: Dict[str, Set[int]] = {}
    state = "start"
    last_line = 0

    for number, tokens in _directives(text):
        last_line = number
        head, args = tokens[0], tokens[1:]
        if state == "start":
            if head != "model" or args:
                raise ModelFormatError("Esperado 'model'", number)
            state = "header"
        elif state == "done":
            raise ModelFormatError(f"Conteúdo após 'end': '{head}'", number)
        elif head == "worlds":
            if world_count is not None:
                raise ModelFormatError("Diretiva 'worlds' repetida", number)
            if len(args) != 1:
                raise ModelFormatError("Uso: worlds <n>", number)
            world_count = _natural(args[0], number)
        elif head in ("edge", "val"):
            if world_count is None:
                raise ModelFormatError(f"'{head}' antes de 'worlds'", number)
            if head == "edge":
                if len(args) != 2:
                    raise ModelFormatError("Uso: edge <i> <j>", number)
                i, j = (_natural(a, number) for a in args)
                for w in (i, j):
                    if w >= world_count:
                        raise ModelFormatError(f"Mundo {w} fora de 0..{world_count - 1}", number)
                edges.add((i, j))
            else:
                if not args:
                    raise ModelFormatError("Uso: val <var> <i> ...", number)
                name = _identifier(args[0], number)
                worlds = valuation.setdefault(name, set())
                for token in args[1:]:
                    w = _natural(token, number)
                    if w >= world_count:
                        raise ModelFormatError(f"Mundo {w} fora de 0..{world_count - 1}", number)
                    worlds.add(w)
        elif head == "end":
            if args:
                raise ModelFormatError("'end' não aceita argumentos", number)
            if world_count is None:
                raise ModelFormatError("Falta a diretiva 'worlds'", number)
            state = "done"
        else:
            raise ModelFormatError(f"Diretiva desconhecida: '{head}'", number)

    if state != "done":
        raise ModelFormatError("Arquivo terminou sem 'end'", last_line or None)
    try:
        return Model.create(world_count, edges, valuation)
    except DomainException as e:
        raise ModelFormatError(str(e))


def render_model(m: Model,
                 class_map: Optional[Sequence[Sequence[int]]] = None,
                 comments: Sequence[str] = ()) -> str:
    """
    Escreve o modelo no formato textual, com ordem determinística.

    Args:
        m: Modelo
        class_map: Classes de origem de cada mundo (saída de quotient)
        comments: Linhas de comentário extras no cabeçalho
    """
    lines = [f"# {comment}" for comment in comments]
    if class_map is not None:
        for index, members in enumerate(class_map):
            lines.append(f"# class {index}: {' '.join(str(w) for w in sorted(members))}")
    lines.append("model")
    lines.append(f"worlds {m.world_count}")
    lines.extend(f"edge {i} {j}" for i, j in sorted(m.frame.edges))
    for name, worlds in m.valuation.items():
        lines.append(f"val {name} {' '.join(str(w) for w in sorted(worlds))}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_class_map(text: str) -> List[Tuple[int, ...]]:
    """Lê o bloco de comentários "# class <i>: <mundos>" de um arquivo."""
    classes: Dict[int, Tuple[int, ...]] = {}
    for raw in text.splitlines():
        match = CLASS_LINE.match(raw.strip())
        if match:
            classes[int(match.group(1))] = tuple(int(w) for w in match.group(2).split())
    return [classes[i] for i in sorted(classes)]


def parse_torus_valuation(text: str) -> Dict[str, Set[Coordinate]]:
    """
    Lê uma valoração de toro ("torus-val" / "val p 0,0 1,1" / "end").

    Raises:
        ModelFormatError: com o número da linha problemática
    """
    valuation: Dict[str, Set[Coordinate]] = {}
    state = "start"
    last_line = 0
    for number, tokens in _directives(text):
        last_line = number
        head, args = tokens[0], tokens[1:]
        if state == "start":
            if head != "torus-val" or args:
                raise ModelFormatError("Esperado 'torus-val'", number)
            state = "body"
        elif state == "done":
            raise ModelFormatError(f"Conteúdo após 'end': '{head}'", number)
        elif head == "val":
            if not args:
                raise ModelFormatError("Uso: val <var> <i>,<j> ...", number)
            cells = valuation.setdefault(_identifier(args[0], number), set())
            for token in args[1:]:
                match = CELL.fullmatch(token)
                if not match:
                    raise ModelFormatError(f"Célula inválida: '{token}'", number)
                cells.add((int(match.group(1)), int(match.group(2))))
        elif head == "end" and not args:
            state = "done"
        else:
            raise ModelFormatError(f"Diretiva desconhecida: '{head}'", number)
    if state != "done":
        raise ModelFormatError("Arquivo terminou sem 'end'", last_line or None)
    return valuation


def render_torus_valuation(valuation: Mapping[str, Sequence[Coordinate]]) -> str:
    lines = ["torus-val"]
    for name in sorted(valuation):
        cells = " ".join(f"{i},{j}" for i, j in sorted(valuation[name]))
        lines.append(f"val {name} {cells}".rstrip())
    lines.append("end")
    return "\n".join(lines) + "\n"

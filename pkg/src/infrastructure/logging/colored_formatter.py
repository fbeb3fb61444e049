# src/infrastructure/logging/colored_formatter.py
import logging
import sys

from colorama import Fore, Style, init as colorama_init

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColoredFormatter(logging.Formatter):
    """Formatter que colore o nome do nível de log."""

    def format(self, record: logging.LogRecord) -> str:
        color = LEVEL_COLORS.get(record.levelno, "")
        original = record.levelname
        record.levelname = f"{color}{original}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def configure_logging(level: str = "INFO", colors: bool = True) -> None:
    """
    Configura o logger raiz para a saída de erro.

    Args:
        level: Nível de log (DEBUG, INFO, WARNING, ...)
        colors: Usa cores ANSI nos níveis
    """
    handler = logging.StreamHandler(sys.stderr)
    if colors:
        colorama_init()
        handler.setFormatter(ColoredFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.basicConfig(level=level.upper(), handlers=[handler], force=True)

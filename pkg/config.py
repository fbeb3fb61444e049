# config.py
import os
from pydantic import BaseSettings


class Settings(BaseSettings):
    """Configurações da aplicação."""

    # Aplicação
    APP_NAME: str = "Modal Workbench"
    DEBUG: bool = os.environ.get("DEBUG", "False") == "True"

    # Logs
    LOG_LEVEL: str = os.environ.get("LOG_LEVEL", "WARNING")
    LOG_COLORS: bool = os.environ.get("LOG_COLORS", "True") == "True"

    # Busca limitada de modelos
    SEARCH_DEFAULT_MAX_WORLDS: int = int(os.environ.get("SEARCH_DEFAULT_MAX_WORLDS", "4"))
    SEARCH_FRAME_LIMIT: int = int(os.environ.get("SEARCH_FRAME_LIMIT", "0"))
    SEARCH_TIME_LIMIT_SECONDS: float = float(os.environ.get("SEARCH_TIME_LIMIT_SECONDS", "0"))
    SEARCH_WORKERS: int = int(os.environ.get("SEARCH_WORKERS", "1"))
    SEARCH_CANONICAL_ONLY: bool = os.environ.get("SEARCH_CANONICAL_ONLY", "False") == "True"

    # Redução
    PSI_RESP_LITERAL_SCOPING: bool = os.environ.get("PSI_RESP_LITERAL_SCOPING", "False") == "True"

    # Baterias de verificação
    VERIFY_WORKERS: int = int(os.environ.get("VERIFY_WORKERS", "1"))
    VERIFY_LEMMA3_MAX_WORLDS: int = int(os.environ.get("VERIFY_LEMMA3_MAX_WORLDS", "4"))
    VERIFY_LEMMA4_MAX_WORLDS: int = int(os.environ.get("VERIFY_LEMMA4_MAX_WORLDS", "3"))
    VERIFY_SUBFRAME_MAX_WORLDS: int = int(os.environ.get("VERIFY_SUBFRAME_MAX_WORLDS", "4"))
    VERIFY_ORACLE_MAX_WORLDS: int = int(os.environ.get("VERIFY_ORACLE_MAX_WORLDS", "3"))

    # Pipeline
    PIPELINE_DEFAULT_K: int = int(os.environ.get("PIPELINE_DEFAULT_K", "3"))

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


settings = Settings()

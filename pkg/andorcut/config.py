"""Configuración de andorcut.

Se lee del entorno (prefijo ``ANDORCUT_``) y de un archivo ``.env`` opcional.
Los flags explícitos de la CLI siempre tienen prioridad.
"""
import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()  # Carga el contenido de .env automáticamente

logger = logging.getLogger(__name__)

DEFAULT_TOP = 1_000_000


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="ANDORCUT_", env_file=".env", extra="ignore")

    seed: int = Field(default=0, ge=0, lt=2**64)
    top: int = Field(default=DEFAULT_TOP, gt=1)
    oracle_cap: int = Field(default=20, ge=1)
    bench_oracle_limit: int = Field(default=18, ge=0)
    core_limit: int = Field(default=8, ge=1)
    workers: int = Field(default=1, ge=1)
    log_level: str = "INFO"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    settings = Settings()
    logger.debug(f"Configuración cargada: {settings.model_dump()}")
    return settings

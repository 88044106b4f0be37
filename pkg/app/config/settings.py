from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Configuración centralizada del simulador.
    Las variables se cargan desde el entorno o desde un archivo .env
    """

    # Environment
    ENVIRONMENT: str = Field(
        default="development", description="Environment: development, test, production"
    )
    LOG_LEVEL: str = Field(default="INFO")

    @property
    def DEBUG(self) -> bool:
        """Debug logging enabled for development and test environments"""
        return self.ENVIRONMENT in ["development", "test"]

    # Outputs
    OUTPUT_DIR: Path = Field(default=Path("results"), alias="SSBCOV_OUTPUT_DIR")

    # Workers
    THREADS: int = Field(default=1, ge=1, alias="SSBCOV_THREADS")

    # Memory / blocking
    CHANNEL_MEMORY_BUDGET_MB: float = Field(default=256.0, ge=0.0)
    TUPLE_BLOCK_SIZE: int = Field(default=64, ge=1)
    CELL_BLOCK_SIZE: int = Field(default=4096, ge=1)

    # Simulation defaults
    DEFAULT_GAMMA_REF_DB: float = 10.0
    DEFAULT_ALPHA: float = Field(default=0.1, gt=0.0, le=1.0)
    FRINGE_SAMPLES_PER_WAVELENGTH: int = Field(default=128, ge=2)

    # Project
    PROJECT_NAME: str = Field(default="SSB Joint Coverage Simulator")
    VERSION: str = Field(default="1.0.0")

    @property
    def channel_memory_budget_bytes(self) -> int:
        return int(self.CHANNEL_MEMORY_BUDGET_MB * 1024 * 1024)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        populate_by_name=True,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """
    Obtiene la configuración (cached).
    lru_cache asegura que solo se carga una vez.
    """
    return Settings()


# Instancia global de settings
settings = get_settings()

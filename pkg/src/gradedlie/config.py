"""Configuration settings for gradedlie."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings with validation."""

    app_name: str = "gradedlie"
    version: str = "0.1.0"
    log_level: str = "WARNING"
    default_output: str = "json"
    json_indent: int = 2

    # Worker cap for the verification suites (GRADEDLIE_THREADS)
    threads: int = Field(1, ge=1)

    # Largest matrix size accepted by the builders
    max_matrix_size: int = Field(13, ge=1)

    class Config:
        """Pydantic settings config."""

        env_prefix = "GRADEDLIE_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()

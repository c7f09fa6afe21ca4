"""
Configuration settings for the ConSHN-BT reasoning toolkit
"""
from pathlib import Path
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field

BASE_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    """Toolkit settings.

    These settings can be overridden with environment variables or a .env file.
    """
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
    )

    # Logging settings
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FILE: Optional[str] = Field(default=None)

    # Corpus and output locations
    CORPUS_DIR: str = Field(default=str(BASE_DIR / "corpus"))
    COUNTERMODEL_DIR: str = Field(default="countermodels")

    # Decision procedure settings
    DETERMINISTIC: bool = Field(default=False)
    NUM_WORKERS: int = Field(default=1)
    KAPPA_MAX_STEPS: int = Field(default=100_000)
    MU_MAX_STEPS: int = Field(default=100_000)
    DECIDE_MAX_SEQUENCES: int = Field(default=1_000_000)

    # Brute-force oracle bounds
    ORACLE_MAX_DEPTH: int = Field(default=2)
    ORACLE_MAX_BRANCH: int = Field(default=2)
    ORACLE_BUDGET: int = Field(default=20_000_000)  # valuation rows
    ORACLE_CHUNK_ROWS: int = Field(default=65_536)


# Create settings instance
settings = Settings()

from typing import Literal, Optional
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

from models.run_config import HARD_CUBE_LIMIT

# Load environment variables from .env file
load_dotenv()


class ComputationConfig(BaseSettings):
    model_config = SettingsConfigDict(populate_by_name=True, extra="ignore")

    cube_cap: int = Field(24, alias="ANNSKEIN_CUBE_CAP")
    default_r_max: int = Field(4, alias="ANNSKEIN_R_MAX")
    default_seed: int = Field(7, alias="ANNSKEIN_SEED")

    @field_validator("cube_cap")
    @classmethod
    def validate_cube_cap(cls, v):
        if not 0 <= v <= HARD_CUBE_LIMIT:
            raise ValueError(f"Cube cap must be between 0 and {HARD_CUBE_LIMIT}")
        return v

    @field_validator("default_r_max")
    @classmethod
    def validate_r_max(cls, v):
        if v < 1:
            raise ValueError("Default page bound must be at least 1")
        return v


class LoggingConfig(BaseSettings):
    model_config = SettingsConfigDict(populate_by_name=True, extra="ignore")

    level: str = Field("WARNING", alias="LOG_LEVEL")
    format: str = Field("%(asctime)s - %(name)s - %(levelname)s - %(message)s", alias="LOG_FORMAT")
    file_path: Optional[str] = Field("logs/annskein.log", alias="LOG_FILE_PATH")
    max_bytes: int = Field(10485760, alias="LOG_MAX_BYTES")  # 10MB
    backup_count: int = Field(5, alias="LOG_BACKUP_COUNT")

    @field_validator("level")
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v.upper()

    @field_validator("file_path")
    @classmethod
    def validate_file_path(cls, v):
        # empty string disables the file handler
        return v or None

    @field_validator("max_bytes")
    @classmethod
    def validate_max_bytes(cls, v):
        if v < 1024:  # 1KB minimum
            raise ValueError("Log file max bytes must be at least 1024 bytes")
        return v


class Settings(BaseSettings):
    model_config = SettingsConfigDict(populate_by_name=True, extra="ignore")

    environment: Literal["development", "testing", "production"] = Field("development", alias="ENVIRONMENT")

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

        # Configuration sections are populated lazily
        self._computation = None
        self._logging = None

    @property
    def computation(self) -> ComputationConfig:
        if self._computation is None:
            self._computation = ComputationConfig()
        return self._computation

    @property
    def logging(self) -> LoggingConfig:
        if self._logging is None:
            self._logging = LoggingConfig()
        return self._logging

    @property
    def is_development(self) -> bool:
        return self.environment == "development"

    @property
    def is_testing(self) -> bool:
        return self.environment == "testing"

    @property
    def is_production(self) -> bool:
        return self.environment == "production"

    def get_cube_cap(self, override: Optional[int] = None) -> int:
        """Effective cube-size cap, honoring a per-run override up to the hard limit"""
        if override is None:
            return self.computation.cube_cap
        if not 0 <= override <= HARD_CUBE_LIMIT:
            raise ValueError(f"Cube cap must be between 0 and {HARD_CUBE_LIMIT}")
        return override

    def get_log_config(self, verbose: bool = False) -> dict:
        """Get logging configuration dictionary"""
        console_level = "DEBUG" if verbose else self.logging.level
        handlers = {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "level": console_level,
                "stream": "ext://sys.stderr",
            },
        }
        if self.logging.file_path:
            Path(self.logging.file_path).parent.mkdir(parents=True, exist_ok=True)
            handlers["file"] = {
                "class": "logging.handlers.RotatingFileHandler",
                "formatter": "default",
                "filename": self.logging.file_path,
                "maxBytes": self.logging.max_bytes,
                "backupCount": self.logging.backup_count,
                "level": self.logging.level,
            }
        return {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "default": {
                    "format": self.logging.format,
                },
            },
            "handlers": handlers,
            "root": {
                "level": "DEBUG" if verbose else self.logging.level,
                "handlers": list(handlers),
            },
        }


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance"""
    return settings


def reload_settings() -> Settings:
    """Re-read the environment and replace the global settings instance"""
    global settings
    settings = Settings()
    return settings

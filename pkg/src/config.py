"""
Toolkit Configuration Settings
Resource guards, search budgets and logging defaults
"""
from pydantic_settings import BaseSettings
from pydantic import Field
from typing import Optional
from enum import Enum


class OutputFormat(str, Enum):
    JSON = "json"


# Log level names accepted by LOG_LEVEL / --log-level
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables"""

    # Resource guards
    max_vars: int = Field(default=250_000, alias="MAX_VARS")
    max_vertices: int = Field(default=20_000, alias="MAX_VERTICES")
    max_constraints: int = Field(default=2_000_000, alias="MAX_CONSTRAINTS")
    fgraph_domain_cap: int = Field(default=2, alias="FGRAPH_DOMAIN_CAP")
    satisfies_domain_cap: int = Field(default=3, alias="SATISFIES_DOMAIN_CAP")

    # Search budgets
    gadget_budget: int = Field(default=5_000, alias="GADGET_BUDGET")
    gadget_min_vertices: int = Field(default=5, alias="GADGET_MIN_VERTICES")
    growth_k_max: int = Field(default=10**12, alias="GROWTH_K_MAX")
    enumeration_max_n: int = Field(default=7, alias="ENUMERATION_MAX_N")

    # Solver behaviour
    equality_merging: bool = Field(default=True, alias="EQUALITY_MERGING")
    fgraph_workers: int = Field(default=1, alias="FGRAPH_WORKERS")

    # Output
    output_format: OutputFormat = Field(default=OutputFormat.JSON, alias="OUTPUT_FORMAT")
    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"
        populate_by_name = True

    def cap(self, name: str, override: Optional[int] = None) -> int:
        """Resolve a guard value, preferring an explicit override"""
        if override is not None:
            return override
        return getattr(self, name)

    def get_log_level(self, level: Optional[str] = None) -> str:
        """Normalized log level name"""
        lvl = (level or self.log_level).upper()
        return lvl if lvl in LOG_LEVELS else "WARNING"


# Global settings instance
settings = Settings()

"""
Configuration settings for the chainforge verification toolkit
"""
from pydantic_settings import BaseSettings
from functools import lru_cache
from typing import Optional
import os


class Settings(BaseSettings):
    """Application settings"""

    # Tool info
    TOOL_NAME: str = "chainforge"
    VERSION: str = "1.0.0"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Point-level paths (chain enumeration, point-mode induced weights)
    POINT_LEVEL_MAX_POINTS: int = 4096  # 3^7 and 2^12 fit
    MAX_ENUMERATED_CHAINS: int = 2_000_000

    # Oracle
    ORACLE_MAX_VERTICES: int = 100
    ENUMERATION_MAX_VERTICES: int = 32
    ENUMERATION_CAP: int = 10_000
    MIS_NODE_LIMIT: int = 5_000_000

    # Overrides both vertex and point budgets when set
    CHAINFORGE_BUDGET: Optional[int] = None

    # Reproducibility / fan-out
    DEFAULT_SEED: int = 0
    DEFAULT_JOBS: int = 1

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra environment variables

    @property
    def point_budget(self) -> int:
        return self.CHAINFORGE_BUDGET or self.POINT_LEVEL_MAX_POINTS

    @property
    def vertex_budget(self) -> int:
        return self.CHAINFORGE_BUDGET or self.ORACLE_MAX_VERTICES


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()

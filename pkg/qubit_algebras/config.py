"""Configuration management using Pydantic Settings."""
from __future__ import annotations

from typing import List

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Canonical forms
    CANONICAL_THRESHOLD: float = 1e-14
    STRING_KEY_DECIMALS: int = 12

    # Normalization
    NORMALIZATION_TOL: float = 1e-12
    NORMALIZATION_INPUT_TOL: float = 1e-9
    TAIL_ZERO_TOL: float = 1e-12

    # Size caps
    ORACLE_MAX_SITES: int = 6
    CAR_MAX_SITES: int = 8
    RANK_MAX_SITES: int = 6

    # Check tolerances
    PROPERTY_TOL: float = 1e-12
    REPRESENTATION_TOL: float = 1e-10
    ORACLE_TOL: float = 1e-10

    # Randomized runs
    DEFAULT_SEED: int = 20240101
    DEFAULT_TRIALS: int = 200
    DEFAULT_PARTIAL_TERMS: int = 1000
    TRUNCATION_WORKERS: int = 4
    ENABLED_SUITES: str = (
        "car_relations,rank,equivalence,groupoid_axioms,convolution,"
        "monomorphism,representation,oracle"
    )

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "json"

    @property
    def enabled_suite_list(self) -> List[str]:
        return [s.strip() for s in self.ENABLED_SUITES.split(",") if s.strip()]

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
